#include "admdp/policy_fpl.hpp"

#include <cmath>

namespace admdp {

namespace {
constexpr double kTieTol = 1e-9;
}

std::vector<DeterministicPolicy> enumerate_policies(int num_states,
                                                    int num_actions,
                                                    int64_t cap) {
  double count_d = std::pow(static_cast<double>(num_actions), num_states);
  if (count_d > static_cast<double>(cap))
    throw CapExceeded("policy space |A|^|S| exceeds enumeration cap");
  int64_t count = static_cast<int64_t>(count_d + 0.5);
  std::vector<DeterministicPolicy> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t p = 0; p < count; ++p) {
    std::vector<Action> act(num_states);
    int64_t rest = p;
    for (int s = 0; s < num_states; ++s) {
      act[s] = static_cast<Action>(rest % num_actions);
      rest /= num_actions;
    }
    out.emplace_back(std::move(act));
  }
  return out;
}

PolicyExpertFpl::PolicyExpertFpl(const StochasticMdp& mdp,
                                 std::vector<double> perturbation)
    : mdp_(&mdp), policies_(enumerate_policies(mdp.num_states(),
                                               mdp.num_actions())),
      perturb_(std::move(perturbation)) {
  if (perturb_.size() != policies_.size())
    throw BadShape("perturbation vector size mismatch");
  cums_.assign(policies_.size(), 0.0);
  last_lhat_.assign(policies_.size(), 0.0);
  dists_.assign(policies_.size(), mdp.start_dist());
  pick_initial_leader();
}

void PolicyExpertFpl::pick_initial_leader() {
  leader_ = 0;
  for (size_t p = 1; p < policies_.size(); ++p)
    if (perturb_[p] + cums_[p] < perturb_[leader_] + cums_[leader_] - kTieTol)
      leader_ = static_cast<int>(p);
}

bool PolicyExpertFpl::observe(const LossFunction& loss) {
  const int n = mdp_->num_states();
  for (size_t p = 0; p < policies_.size(); ++p) {
    double lhat = 0.0;
    for (State s = 0; s < n; ++s)
      lhat += dists_[p][s] * loss(s, policies_[p](s));
    last_lhat_[p] = lhat;
    cums_[p] += lhat;
    advance_distribution(*mdp_, policies_[p], dists_[p]);
  }
  ++t_;

  int best = 0;
  for (size_t p = 1; p < policies_.size(); ++p)
    if (perturb_[p] + cums_[p] < perturb_[best] + cums_[best]) best = static_cast<int>(p);
  // No-switch tie rule: keep the incumbent while it attains the optimum.
  if (perturb_[leader_] + cums_[leader_] <=
      perturb_[best] + cums_[best] + kTieTol)
    return false;
  leader_ = best;
  ++switches_;
  return true;
}

std::vector<double> PolicyExpertFpl::dist_at(int pi, int64_t t_abs) const {
  if (t_abs < now()) throw BadShape("dist_at asked for a past time");
  std::vector<double> d = dists_[pi];
  for (int64_t i = now(); i < t_abs; ++i)
    advance_distribution(*mdp_, policies_[pi], d);
  return d;
}

PolicyFpl::PolicyFpl(const StochasticMdp& mdp, double lambda, uint64_t seed,
                     int64_t cap)
    : PolicyExpertFpl(mdp, [&] {
        auto pols = enumerate_policies(mdp.num_states(), mdp.num_actions(),
                                       cap);
        Rng rng(seed);
        std::vector<double> perturb(pols.size());
        for (auto& v : perturb) v = rng.exponential(lambda);
        return perturb;
      }()) {}

}  // namespace admdp
