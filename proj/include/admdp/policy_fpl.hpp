#pragma once

#include <cstdint>
#include <vector>

#include "admdp/rng.hpp"
#include "admdp/stochastic.hpp"
#include "admdp/types.hpp"

namespace admdp {

// All |A|^|S| stationary deterministic policies in index order (state 0 is
// the least significant digit). Throws CapExceeded above `cap`.
std::vector<DeterministicPolicy> enumerate_policies(int num_states,
                                                    int num_actions,
                                                    int64_t cap = int64_t{1}
                                                                  << 16);

// FPL over enumerated policy experts. Expert pi receives the expected loss
// lhat_t(pi) = sum_s d_pi^t(s) l_t(s, pi(s)); the leader minimizes
// perturbation(pi) + cumulative lhat with the no-switch tie rule.
// Subclasses fix the perturbation structure.
class PolicyExpertFpl {
 public:
  PolicyExpertFpl(const StochasticMdp& mdp, std::vector<double> perturbation);

  // Feeds l_t (t advances by one); returns true when the leader changed.
  bool observe(const LossFunction& loss);

  int leader() const { return leader_; }
  const std::vector<DeterministicPolicy>& policies() const {
    return policies_;
  }
  const DeterministicPolicy& leader_policy() const {
    return policies_[leader_];
  }

  int64_t switch_count() const { return switches_; }
  // Decision time: 1 before any loss, t+1 after t losses.
  int64_t now() const { return t_ + 1; }

  double last_lhat(int pi) const { return last_lhat_[pi]; }
  double cumulative_lhat(int pi) const { return cums_[pi]; }
  double perturbation(int pi) const { return perturb_[pi]; }

  // d_pi^{t_abs}, propagated from the internally maintained distribution.
  // Requires t_abs >= now().
  std::vector<double> dist_at(int pi, int64_t t_abs) const;

 protected:
  const StochasticMdp* mdp_;
  std::vector<DeterministicPolicy> policies_;
  std::vector<double> perturb_;
  std::vector<double> cums_;
  std::vector<double> last_lhat_;
  std::vector<std::vector<double>> dists_;  // d_pi^{now()}
  int leader_ = 0;
  int64_t t_ = 0;
  int64_t switches_ = 0;

  void pick_initial_leader();
};

// Algorithm-3 expert: one i.i.d. Exponential(lambda) scalar per policy.
class PolicyFpl : public PolicyExpertFpl {
 public:
  PolicyFpl(const StochasticMdp& mdp, double lambda, uint64_t seed,
            int64_t cap = int64_t{1} << 16);
};

}  // namespace admdp
