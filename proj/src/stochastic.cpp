#include "admdp/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace admdp {

namespace {

constexpr double kProbTol = 1e-12;
constexpr double kViTol = 1e-10;
constexpr double kDivergeCap = 1e8;

}  // namespace

StochasticMdp StochasticMdp::build(
    std::vector<std::vector<std::vector<double>>> kernel,
    std::vector<double> start_dist, std::optional<State> loop_state,
    std::optional<Action> loop_action) {
  StochasticMdp m;
  m.ns_ = static_cast<int>(kernel.size());
  if (m.ns_ == 0) throw BadShape("empty state space");
  m.na_ = static_cast<int>(kernel[0].size());
  if (m.na_ == 0) throw BadShape("empty action space");

  for (int s = 0; s < m.ns_; ++s) {
    if (static_cast<int>(kernel[s].size()) != m.na_)
      throw BadShape("kernel is not total");
    for (int a = 0; a < m.na_; ++a) {
      const auto& row = kernel[s][a];
      if (static_cast<int>(row.size()) != m.ns_)
        throw BadShape("kernel row has wrong length");
      double sum = 0.0;
      for (double p : row) {
        if (p < 0.0) throw InvariantViolation("negative transition probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > kProbTol)
        throw InvariantViolation("transition row does not sum to 1");
    }
  }
  if (static_cast<int>(start_dist.size()) != m.ns_)
    throw BadShape("start distribution has wrong length");
  double dsum = 0.0;
  for (double p : start_dist) {
    if (p < 0.0) throw InvariantViolation("negative start probability");
    dsum += p;
  }
  if (std::abs(dsum - 1.0) > kProbTol)
    throw InvariantViolation("start distribution does not sum to 1");

  if (loop_state.has_value() != loop_action.has_value())
    throw BadShape("loop_state and loop_action must be given together");
  if (loop_state) {
    if (*loop_state < 0 || *loop_state >= m.ns_ || *loop_action < 0 ||
        *loop_action >= m.na_)
      throw BadShape("loop state/action out of range");
    if (kernel[*loop_state][*loop_action][*loop_state] != 1.0)
      throw InvariantViolation("loop action does not self-loop with prob 1");
  }

  m.kernel_ = std::move(kernel);
  m.d1_ = std::move(start_dist);
  m.loop_state_ = loop_state;
  m.loop_action_ = loop_action;

  // Optimal expected first-passage times via value iteration with the
  // target absorbing: h(s) = 1 + min_a sum_{s' != to} P(s,a,s') h(s').
  m.goto_policies_.resize(m.ns_);
  m.hitting_times_.assign(m.ns_, std::vector<double>(m.ns_, 0.0));
  double diam = 0.0;
  for (State to = 0; to < m.ns_; ++to) {
    // Unreachable states would make value iteration creep upward forever;
    // reject them up front via the support graph.
    std::vector<bool> can_reach(m.ns_, false);
    can_reach[to] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (State s = 0; s < m.ns_; ++s) {
        if (can_reach[s]) continue;
        for (Action a = 0; a < m.na_ && !can_reach[s]; ++a)
          for (State t = 0; t < m.ns_; ++t)
            if (m.kernel_[s][a][t] > 0.0 && can_reach[t]) {
              can_reach[s] = true;
              changed = true;
              break;
            }
      }
    }
    for (State s = 0; s < m.ns_; ++s)
      if (!can_reach[s])
        throw NotCommunicating("state " + std::to_string(s) +
                               " cannot reach " + std::to_string(to));
    std::vector<double> h(m.ns_, 0.0);
    std::vector<Action> best(m.ns_, 0);
    for (int64_t iter = 0;; ++iter) {
      double delta = 0.0;
      for (State s = 0; s < m.ns_; ++s) {
        if (s == to) continue;  // value fixed at 0; action chosen below
        double bestv = std::numeric_limits<double>::infinity();
        Action besta = 0;
        for (Action a = 0; a < m.na_; ++a) {
          double v = 1.0;
          for (State t = 0; t < m.ns_; ++t)
            if (t != to) v += m.kernel_[s][a][t] * h[t];
          if (v < bestv - 1e-15) {
            bestv = v;
            besta = a;
          }
        }
        delta = std::max(delta, std::abs(bestv - h[s]));
        h[s] = bestv;
        best[s] = besta;
      }
      if (delta < kViTol) break;
      double hmax = 0.0;
      for (double v : h) hmax = std::max(hmax, v);
      if (hmax > kDivergeCap || iter > static_cast<int64_t>(kDivergeCap))
        throw NotCommunicating("expected first-passage time diverges toward " +
                               std::to_string(to));
    }
    // Action at the target itself: the loop action when this is the loop
    // state, otherwise the same Bellman arg-min (any consistent choice).
    {
      double bestv = std::numeric_limits<double>::infinity();
      Action besta = 0;
      for (Action a = 0; a < m.na_; ++a) {
        double v = 1.0;
        for (State t = 0; t < m.ns_; ++t)
          if (t != to) v += m.kernel_[to][a][t] * h[t];
        if (v < bestv - 1e-15) {
          bestv = v;
          besta = a;
        }
      }
      best[to] = besta;
    }
    if (m.loop_state_ && to == *m.loop_state_) best[to] = *m.loop_action_;
    m.goto_policies_[to] = DeterministicPolicy(best);
    for (State from = 0; from < m.ns_; ++from) {
      m.hitting_times_[from][to] = h[from];
      if (from != to) diam = std::max(diam, h[from]);
    }
  }
  m.diameter_ = diam;
  return m;
}

std::vector<double> hitting_time_pmf(const StochasticMdp& mdp,
                                     const DeterministicPolicy& policy,
                                     State from, State to, int max_len) {
  const int n = mdp.num_states();
  std::vector<double> pmf(max_len + 1, 0.0);  // index 0 unused
  std::vector<double> q(n, 0.0);
  q[from] = 1.0;
  for (int l = 1; l <= max_len; ++l) {
    std::vector<double> nq(n, 0.0);
    for (State s = 0; s < n; ++s) {
      if (q[s] == 0.0) continue;
      const auto& row = mdp.transition(s, policy(s));
      for (State t = 0; t < n; ++t) nq[t] += q[s] * row[t];
    }
    pmf[l] = nq[to];
    nq[to] = 0.0;  // absorb
    q = std::move(nq);
  }
  pmf.erase(pmf.begin());
  return pmf;
}

void advance_distribution(const StochasticMdp& mdp,
                          const DeterministicPolicy& policy,
                          std::vector<double>& dist) {
  const int n = mdp.num_states();
  std::vector<double> nq(n, 0.0);
  for (State s = 0; s < n; ++s) {
    if (dist[s] == 0.0) continue;
    const auto& row = mdp.transition(s, policy(s));
    for (State t = 0; t < n; ++t) nq[t] += dist[s] * row[t];
  }
  dist = std::move(nq);
}

std::vector<double> policy_state_distribution(const StochasticMdp& mdp,
                                              const DeterministicPolicy& policy,
                                              int64_t t) {
  if (t < 1) throw BadShape("t must be >= 1");
  std::vector<double> d = mdp.start_dist();
  for (int64_t i = 1; i < t; ++i) {
    advance_distribution(mdp, policy, d);
    double sum = 0.0;
    for (double x : d) sum += x;
    double drift = std::abs(sum - 1.0);
    if (drift > 1e-9)
      throw InvariantViolation("state distribution drifted beyond tolerance");
    if (drift > kProbTol)
      for (double& x : d) x /= sum;
  }
  return d;
}

PolicyLoss expected_policy_loss(const StochasticMdp& mdp,
                                const DeterministicPolicy& policy,
                                const std::vector<LossFunction>& losses) {
  PolicyLoss out;
  out.total = 0.0;
  out.per_step.reserve(losses.size());
  std::vector<double> d = mdp.start_dist();
  for (size_t t = 0; t < losses.size(); ++t) {
    if (t > 0) advance_distribution(mdp, policy, d);
    double lhat = 0.0;
    for (State s = 0; s < mdp.num_states(); ++s)
      lhat += d[s] * losses[t](s, policy(s));
    out.per_step.push_back(lhat);
    out.total += lhat;
  }
  return out;
}

CatchingPlan build_catching_plan(const StochasticMdp& mdp) {
  if (!mdp.loop_state())
    throw AssumptionViolated("no self-loop state: Assumption 1 fails");
  const State sstar = *mdp.loop_state();
  const Action loop = *mdp.loop_action();
  const int n = mdp.num_states();
  const int ceil_d = static_cast<int>(std::ceil(mdp.diameter()));
  const double floor_p = 1.0 / (4.0 * ceil_d);

  CatchingPlan plan;
  plan.per_target.resize(n);

  // First pass: pick ell_target per target as the mode of the exact
  // first-passage pmf under the goto policy, restricted to 1..2 ceil(D).
  for (State target = 0; target < n; ++target) {
    TargetPlan tp;
    if (target == sstar) {
      tp.ell_target = 1;
      tp.goto_policy = mdp.goto_policy(sstar);
    } else {
      tp.goto_policy = mdp.goto_policy(target);
      auto pmf = hitting_time_pmf(mdp, tp.goto_policy, sstar, target,
                                  2 * ceil_d);
      int best_l = 1;
      double best_p = pmf[0];
      for (int l = 2; l <= 2 * ceil_d; ++l) {
        if (pmf[l - 1] > best_p) {
          best_p = pmf[l - 1];
          best_l = l;
        }
      }
      if (best_p < floor_p)
        throw InvariantViolation(
            "first-passage mode below 1/(4 ceil(D)); diameter computation "
            "inconsistent");
      tp.ell_target = best_l;
    }
    plan.per_target[target] = std::move(tp);
  }

  plan.ell_star = 1;
  for (const auto& tp : plan.per_target)
    plan.ell_star = std::max(plan.ell_star, tp.ell_target);

  // Second pass: waits, and exact occupancy probability at ell_star under
  // the wait-then-goto plan (this is the acceptance probability the switch
  // routine conditions on).
  plan.p_star = 1.0;
  for (State target = 0; target < n; ++target) {
    TargetPlan& tp = plan.per_target[target];
    tp.wait = plan.ell_star - tp.ell_target;
    std::vector<double> d(n, 0.0);
    d[sstar] = 1.0;
    // Waiting at s* via the loop action leaves the point mass unchanged.
    DeterministicPolicy wait_policy(std::vector<Action>(n, loop));
    for (int i = 0; i < tp.wait; ++i)
      advance_distribution(mdp, wait_policy, d);
    for (int i = 0; i < tp.ell_target; ++i)
      advance_distribution(mdp, tp.goto_policy, d);
    tp.p_hit = d[target];
    if (tp.p_hit < floor_p)
      throw InvariantViolation("catch probability below 1/(4 ceil(D))");
    plan.p_star = std::min(plan.p_star, tp.p_hit);
  }
  return plan;
}

}  // namespace admdp
