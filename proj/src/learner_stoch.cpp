#include "admdp/learner_stoch.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace admdp {

CatchDriver::CatchDriver(const StochasticMdp& mdp, const CatchingPlan& plan,
                         DistProvider dist_provider, Rng* rng)
    : mdp_(&mdp),
      plan_(&plan),
      dist_provider_(std::move(dist_provider)),
      rng_(rng) {}

Action CatchDriver::next_action(State cur, int64_t t) {
  if (done_) throw InvariantViolation("catch driver already finished");
  State sstar = *mdp_->loop_state();
  if (!in_segment_) {
    if (cur != sstar) {
      // Navigate phase: optimal first-passage policy toward s*.
      return mdp_->goto_policy(sstar)(cur);
    }
    // At s*: commit to a target drawn from d_pi^{t + ell*} and start the
    // wait-then-goto segment.
    target_ = rng_->sample(dist_provider_(t + plan_->ell_star));
    in_segment_ = true;
    seg_pos_ = 0;
  }
  const TargetPlan& tp = plan_->per_target[target_];
  if (seg_pos_ < tp.wait) return *mdp_->loop_action();
  return tp.goto_policy(cur);
}

void CatchDriver::observe(State next, int64_t t_next) {
  ++steps_;
  double cap_base = std::ceil(mdp_->diameter());
  if (steps_ > 1e4 * cap_base * cap_base + 1e4) {
    throw NonTermination("catching routine exceeded its step budget");
  }
  if (!in_segment_) return;
  ++seg_pos_;
  if (seg_pos_ < plan_->ell_star) return;
  // Segment over: accept iff we occupy the target, with the rejection
  // correction p*/p_target so the accepted state has law d_pi^{t_switch}.
  const TargetPlan& tp = plan_->per_target[target_];
  if (next == target_ && rng_->bernoulli(plan_->p_star / tp.p_hit)) {
    done_ = true;
    t_switch_ = t_next;
    return;
  }
  in_segment_ = false;
  seg_pos_ = 0;
  target_ = -1;
}

CatchResult switch_policy(const StochasticMdp& mdp, const CatchingPlan& plan,
                          const DeterministicPolicy& target_policy,
                          State from_state, int64_t t0, Rng& rng) {
  // Stand-alone variant: the target law is d_pi^t for the fixed policy.
  auto provider = [&](int64_t t_abs) {
    return policy_state_distribution(mdp, target_policy, t_abs);
  };
  CatchDriver driver(mdp, plan, provider, &rng);
  CatchResult out;
  State cur = from_state;
  int64_t t = t0;
  while (!driver.done()) {
    Action a = driver.next_action(cur, t);
    out.trajectory.emplace_back(cur, a);
    State next = rng.sample(mdp.transition(cur, a));
    ++t;
    driver.observe(next, t);
    cur = next;
  }
  out.t_switch = driver.t_switch();
  out.final_state = cur;
  return out;
}

RunRecord run_policy_interaction(const StochasticMdp& mdp,
                                 PolicyExpertFpl& expert,
                                 const CatchingPlan& plan,
                                 const LossStream& stream, int64_t horizon,
                                 uint64_t seed) {
  RunRecord rec;
  rec.seed = seed;
  Rng env(mix_seed(seed, 1));
  Rng catch_rng(mix_seed(seed, 2));

  State cur = env.sample(mdp.start_dist());
  std::unique_ptr<CatchDriver> driver;
  auto start_catch = [&]() {
    int pi = expert.leader();
    auto provider = [&expert, pi](int64_t t_abs) {
      return expert.dist_at(pi, t_abs);
    };
    driver = std::make_unique<CatchDriver>(mdp, plan, provider, &catch_rng);
  };
  start_catch();  // initial alignment: catch the first leader before playing it

  for (int64_t t = 1; t <= horizon; ++t) {
    LossFunction loss = stream(t);
    bool transiting = driver != nullptr;
    Action a = transiting ? driver->next_action(cur, t)
                          : expert.leader_policy()(cur);
    double l = loss(cur, a);
    State next = env.sample(mdp.transition(cur, a));

    bool switched = expert.observe(loss);
    if (transiting) {
      driver->observe(next, t + 1);
      if (driver->done()) driver.reset();
    }
    // A leader change preempts any catch in progress.
    if (switched) start_catch();

    rec.rows.push_back({t, cur, a, l, expert.leader(), transiting, switched});
    rec.total_loss += l;
    cur = next;
  }
  rec.switches = expert.switch_count();
  return rec;
}

RunRecord run_stochastic(const StochasticMdp& mdp, const LossStream& stream,
                         int64_t horizon, double lambda, uint64_t seed) {
  CatchingPlan plan = build_catching_plan(mdp);
  PolicyFpl expert(mdp, lambda, mix_seed(seed, 0));
  return run_policy_interaction(mdp, expert, plan, stream, horizon, seed);
}

double expected_catch_time_stats(const StochasticMdp& mdp,
                                 const CatchingPlan& plan,
                                 const DeterministicPolicy& target_policy,
                                 int64_t t0, int trials, uint64_t seed) {
  double total = 0.0;
  for (int i = 0; i < trials; ++i) {
    Rng rng(mix_seed(seed, static_cast<uint64_t>(i)));
    State from = rng.sample(mdp.start_dist());
    CatchResult r = switch_policy(mdp, plan, target_policy, from, t0, rng);
    total += static_cast<double>(r.t_switch - t0);
  }
  return total / trials;
}

}  // namespace admdp
