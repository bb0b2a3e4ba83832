#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "admdp/cycle_opt.hpp"
#include "admdp/graph.hpp"
#include "admdp/perturbation.hpp"

namespace admdp {

// Perturbation schedule for the cycle-expert FPL.
struct LambdaMode {
  enum class Kind { Fixed, HorizonTuned, FirstOrderDoubling };
  Kind kind;
  double value;  // lambda for Fixed, horizon T for HorizonTuned

  static LambdaMode fixed(double lambda) { return {Kind::Fixed, lambda}; }
  static LambdaMode horizon(double t) { return {Kind::HorizonTuned, t}; }
  static LambdaMode doubling() { return {Kind::FirstOrderDoubling, 0.0}; }
};

// Follow-the-perturbed-leader over closed-walk experts. Perturbations are
// drawn once (per doubling epoch) and the leader is recomputed through the
// cycle LP after every observed loss, with the no-switch tie rule.
class FplState {
 public:
  FplState(const AdmdpGraph& g, LambdaMode mode, uint64_t seed,
           int start_class);

  const ClosedWalk& leader() const { return *leader_; }
  int leader_id() const { return leader_id_; }

  // Feeds l_t; returns true when the leader changed.
  bool step(const LossFunction& loss);

  int64_t switch_count() const { return switches_; }
  int64_t t() const { return t_; }
  double lambda() const { return perts_->lambda(); }
  int start_class() const { return start_class_; }

  // delta(s,k) + sum_i eps_i + cumulative true loss of the walk, under the
  // current perturbation draw and the losses seen so far.
  double perturbed_objective(const ClosedWalk& c) const;

  // Test hook: zero all perturbations and recompute the leader.
  void clear_perturbations_for_test();

 private:
  const FoldedLossVector& fold(State s, int k) const;
  void rebuild_folds();
  void recompute_leader(bool count_switch);
  double current_lambda() const;

  const AdmdpGraph* g_;
  LambdaMode mode_;
  int start_class_;
  Rng rng_;
  std::unique_ptr<PerturbationSet> perts_;
  // Incrementally maintained folds for every feasible (s,k) subproblem.
  struct Fold {
    State s;
    int k;
    FoldedLossVector vec;
  };
  std::vector<Fold> folds_;
  std::optional<ClosedWalk> leader_;
  int leader_id_ = -1;
  std::map<std::string, int> walk_ids_;
  int64_t t_ = 0;
  int64_t switches_ = 0;
  bool last_switch_ = false;
  // Doubling-trick bookkeeping.
  int epoch_ = 0;
  double epoch_loss_ = 0.0;

  int intern(const ClosedWalk& c);
};

// Monte-Carlo estimate of the per-step switch probability over fresh
// perturbation draws: result[t] is the empirical Pr[C_{t+1} != C_t] after
// feeding losses[t]. Used to check the Lemma-style bound
// (|S|+1) * lambda * l_t.
std::vector<double> estimate_switch_probability(
    const AdmdpGraph& g, const std::vector<LossFunction>& losses,
    double lambda, int trials, uint64_t seed, int start_class = 0);

}  // namespace admdp
