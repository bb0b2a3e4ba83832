#include "admdp/learner_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "admdp/learner_stoch.hpp"

namespace admdp {

EnumerationOracle::EnumerationOracle(const StochasticMdp& mdp, int64_t cap)
    : mdp_(&mdp),
      policies_(enumerate_policies(mdp.num_states(), mdp.num_actions(), cap)) {}

DeterministicPolicy EnumerationOracle::solve(
    const std::vector<LossFunction>& losses) {
  ++calls_;
  if (losses.empty()) return policies_.front();
  // losses[0] is charged at d_1 before any transition; the remainder is the
  // usual expected trajectory loss.
  std::vector<LossFunction> tail(losses.begin() + 1, losses.end());
  const std::vector<double>& d1 = mdp_->start_dist();
  double best = 0.0;
  int best_idx = -1;
  for (size_t i = 0; i < policies_.size(); ++i) {
    const DeterministicPolicy& pi = policies_[i];
    double total = 0.0;
    for (State s = 0; s < mdp_->num_states(); ++s)
      total += d1[s] * losses[0](s, pi(s));
    if (!tail.empty()) total += expected_policy_loss(*mdp_, pi, tail).total;
    if (best_idx < 0 || total < best) {
      best = total;
      best_idx = static_cast<int>(i);
    }
  }
  size_t h = 0;
  for (const LossFunction& f : losses)
    for (double v : f.data())
      h = h * 1000003u + std::hash<double>{}(v);
  trace_.emplace_back(h, policies_[best_idx]);
  return policies_[best_idx];
}

namespace {
std::vector<double> fold_eps(const StochasticMdp& mdp,
                             const std::vector<double>& eps,
                             const std::vector<DeterministicPolicy>& pols) {
  int na = mdp.num_actions();
  const std::vector<double>& d1 = mdp.start_dist();
  std::vector<double> out(pols.size(), 0.0);
  for (size_t i = 0; i < pols.size(); ++i) {
    double v = 0.0;
    for (State s = 0; s < mdp.num_states(); ++s)
      v += d1[s] * eps[static_cast<size_t>(s) * na + pols[i](s)];
    out[i] = v;
  }
  return out;
}

std::vector<double> draw_eps(const StochasticMdp& mdp, double lambda,
                             uint64_t seed) {
  Rng rng(seed);
  std::vector<double> eps(
      static_cast<size_t>(mdp.num_states()) * mdp.num_actions());
  for (double& e : eps) e = rng.exponential(lambda);
  return eps;
}
}  // namespace

OracleFpl::OracleFpl(const StochasticMdp& mdp, double lambda, uint64_t seed,
                     int64_t cap)
    : PolicyExpertFpl(mdp, fold_eps(mdp, draw_eps(mdp, lambda, seed),
                                    enumerate_policies(mdp.num_states(),
                                                       mdp.num_actions(),
                                                       cap))),
      eps_(draw_eps(mdp, lambda, seed)),
      na_(mdp.num_actions()) {}

LossFunction OracleFpl::eps_as_loss() const {
  int ns = static_cast<int>(eps_.size()) / na_;
  LossFunction f(ns, na_);
  for (State s = 0; s < ns; ++s)
    for (Action a = 0; a < na_; ++a) f.at(s, a) = eps(s, a);
  return f;
}

double oracle_lambda(const StochasticMdp& mdp, double alpha, int64_t horizon) {
  double ns = mdp.num_states();
  double na = mdp.num_actions();
  double tuned = std::sqrt(alpha * std::log(ns * na) /
                           (ns * static_cast<double>(horizon)));
  return std::min(tuned, alpha / (2.0 * ns));
}

RunRecord run_oracle(const StochasticMdp& mdp, const LossStream& stream,
                     int64_t horizon, double alpha, double lambda,
                     uint64_t seed) {
  double d1min = *std::min_element(mdp.start_dist().begin(),
                                   mdp.start_dist().end());
  if (d1min < alpha - 1e-12) {
    throw ExploringStartsViolated("min start mass " + std::to_string(d1min) +
                                  " below alpha " + std::to_string(alpha));
  }
  CatchingPlan plan = build_catching_plan(mdp);
  OracleFpl expert(mdp, lambda, mix_seed(seed, 0));
  return run_policy_interaction(mdp, expert, plan, stream, horizon, seed);
}

}  // namespace admdp
