#pragma once

#include <cstdint>
#include <vector>

#include "admdp/rng.hpp"
#include "admdp/types.hpp"

namespace admdp {

// One-shot exponential perturbations for the cycle-expert FPL:
// eps_i(s,a) for positions i in 1..|S| and delta(s,k) over (start, length).
class PerturbationSet {
 public:
  PerturbationSet(int num_states, int num_actions, double lambda, Rng& rng)
      : ns_(num_states), na_(num_actions), lambda_(lambda),
        eps_(static_cast<size_t>(num_states) * num_states * num_actions),
        delta_(static_cast<size_t>(num_states) * num_states) {
    for (auto& v : eps_) v = rng.exponential(lambda);
    for (auto& v : delta_) v = rng.exponential(lambda);
  }

  // Position i is 1-based (1..|S|).
  double eps(int i, State s, Action a) const {
    return eps_[(static_cast<size_t>(i - 1) * ns_ + s) * na_ + a];
  }
  // Length k is 1-based (1..|S|).
  double delta(State s, int k) const {
    return delta_[static_cast<size_t>(s) * ns_ + (k - 1)];
  }

  double lambda() const { return lambda_; }

  // Test hook: zero out all draws.
  void clear() {
    eps_.assign(eps_.size(), 0.0);
    delta_.assign(delta_.size(), 0.0);
  }

 private:
  int ns_, na_;
  double lambda_;
  std::vector<double> eps_;
  std::vector<double> delta_;
};

}  // namespace admdp
