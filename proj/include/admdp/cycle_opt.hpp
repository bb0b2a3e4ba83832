#pragma once

#include <functional>
#include <vector>

#include "admdp/graph.hpp"
#include "admdp/perturbation.hpp"
#include "admdp/types.hpp"

namespace admdp {

// Loss vector of the cycle LP for a fixed (start s, length k):
// l_{s,a,i} = sum of losses at times j < t with j == i (mod k), plus the
// position perturbation eps_i(s,a). delta(s,k) is a per-subproblem constant
// kept outside the LP objective.
class FoldedLossVector {
 public:
  FoldedLossVector(int num_states, int num_actions, int k)
      : ns_(num_states), na_(num_actions), k_(k),
        l_(static_cast<size_t>(num_states) * num_actions * k, 0.0),
        delta_(0.0) {}

  // Position i is 1-based (1..k).
  double at(State s, Action a, int i) const {
    return l_[(static_cast<size_t>(s) * na_ + a) * k_ + (i - 1)];
  }
  double& at(State s, Action a, int i) {
    return l_[(static_cast<size_t>(s) * na_ + a) * k_ + (i - 1)];
  }

  int k() const { return k_; }
  int num_states() const { return ns_; }
  int num_actions() const { return na_; }

  double delta() const { return delta_; }
  void set_delta(double d) { delta_ = d; }

  // Adds loss_t into the fold, assuming this table currently holds the
  // fold of l_1..l_{t-1}.
  void add_step(const LossFunction& loss, int64_t t) {
    int i = static_cast<int>((t - 1) % k_);  // 0-based position
    for (State s = 0; s < ns_; ++s)
      for (Action a = 0; a < na_; ++a)
        l_[(static_cast<size_t>(s) * na_ + a) * k_ + i] += loss(s, a);
  }

  // <x(c), l> for a walk of length k.
  double walk_objective(const ClosedWalk& c) const {
    double v = 0.0;
    for (int i = 0; i < k_; ++i) v += at(c.state(i), c.action(i), i + 1);
    return v;
  }

 private:
  int ns_, na_, k_;
  std::vector<double> l_;
  double delta_;
};

// Exact fold of losses l_1..l_{t-1} for subproblem (s, k), with optional
// perturbations added into the position coefficients and delta(s,k) carried
// as the constant offset.
FoldedLossVector fold_losses(const std::vector<LossFunction>& losses, State s,
                             int k, int num_states, int num_actions,
                             const PerturbationSet* perts = nullptr);

struct CycleLpSolution {
  double value;            // LP optimum, excluding delta(s,k)
  std::vector<double> x;   // indexed (s*|A|+a)*k + (i-1)
};

// Minimum of <x,l> over the convex hull of C_{(s,k)} indicator vectors.
// Throws Infeasible when no closed walk of length k through s exists.
CycleLpSolution solve_best_cycle(const AdmdpGraph& g, State s, int k,
                                 const FoldedLossVector& folded);

// Extracts one integral walk with positive weight from a feasible
// (possibly fractional) solution by following the max-weight edge per
// position. Throws DecompositionFailed when no positive-weight chain exists.
ClosedWalk decompose_to_walk(const AdmdpGraph& g, State s, int k,
                             const std::vector<double>& x);

struct BestCycleResult {
  ClosedWalk walk;
  double value;  // delta(s,k) + LP value
};

// Minimizes delta(s,k) + LP value over start states in `start_class` and
// lengths k in {gamma, 2 gamma, ..., <= |S|}. Throws NoExpert when every
// (s,k) is infeasible.
BestCycleResult best_cycle_overall(const AdmdpGraph& g,
                                   const std::vector<LossFunction>& losses,
                                   const PerturbationSet* perts,
                                   int start_class);

// Same minimization, but folds are supplied by the caller (the FPL hot loop
// maintains them incrementally). The provider is called once per feasible
// (s,k) pair in lexicographic order.
BestCycleResult best_cycle_over_folds(
    const AdmdpGraph& g, int start_class,
    const std::function<const FoldedLossVector&(State s, int k)>& fold_for);

}  // namespace admdp
