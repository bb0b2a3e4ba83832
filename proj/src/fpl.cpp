#include "admdp/fpl.hpp"

#include <algorithm>
#include <cmath>

namespace admdp {

namespace {

constexpr double kTieTol = 1e-9;

}  // namespace

FplState::FplState(const AdmdpGraph& g, LambdaMode mode, uint64_t seed,
                   int start_class)
    : g_(&g), mode_(mode), start_class_(start_class), rng_(seed) {
  // Loss-only folds per feasible (s,k); perturbations are layered on top at
  // solve time so that doubling-epoch redraws do not disturb the fold.
  for (State s = 0; s < g.num_states(); ++s) {
    if (g.cycle_class(s) != start_class_) continue;
    for (int k = g.period(); k <= g.num_states(); k += g.period())
      folds_.push_back(
          Fold{s, k, FoldedLossVector(g.num_states(), g.num_actions(), k)});
  }
  perts_ = std::make_unique<PerturbationSet>(g.num_states(), g.num_actions(),
                                             current_lambda(), rng_);
  recompute_leader(/*count_switch=*/false);
}

double FplState::current_lambda() const {
  const double log_sa =
      std::log(static_cast<double>(g_->num_states()) * g_->num_actions());
  switch (mode_.kind) {
    case LambdaMode::Kind::Fixed:
      return mode_.value;
    case LambdaMode::Kind::HorizonTuned:
      return log_sa / std::sqrt(mode_.value);
    case LambdaMode::Kind::FirstOrderDoubling: {
      double budget = std::pow(2.0, epoch_);
      double lam = std::sqrt(std::max(log_sa, 1e-12) / budget);
      return std::min(lam, 1.0 / (4.0 * g_->num_states()));
    }
  }
  return mode_.value;
}

const FoldedLossVector& FplState::fold(State s, int k) const {
  for (const auto& f : folds_)
    if (f.s == s && f.k == k) return f.vec;
  throw BadShape("no fold maintained for (s,k)");
}

double FplState::perturbed_objective(const ClosedWalk& c) const {
  double v = perts_->delta(c.start(), c.length());
  for (int i = 0; i < c.length(); ++i)
    v += perts_->eps(i + 1, c.state(i), c.action(i));
  v += fold(c.start(), c.length()).walk_objective(c);
  return v;
}

void FplState::recompute_leader(bool count_switch) {
  // Scratch fold with perturbations applied; rebuilt per subproblem.
  FoldedLossVector scratch(g_->num_states(), g_->num_actions(), 1);
  auto provider = [&](State s, int k) -> const FoldedLossVector& {
    scratch = fold(s, k);
    for (int i = 1; i <= k; ++i)
      for (State s2 = 0; s2 < g_->num_states(); ++s2)
        for (Action a = 0; a < g_->num_actions(); ++a)
          scratch.at(s2, a, i) += perts_->eps(i, s2, a);
    scratch.set_delta(perts_->delta(s, k));
    return scratch;
  };
  BestCycleResult best = best_cycle_over_folds(*g_, start_class_, provider);

  if (leader_) {
    double incumbent = perturbed_objective(*leader_);
    // No-switch tie rule: keep the incumbent when it still attains the
    // optimum within tolerance.
    if (incumbent <= best.value + kTieTol) return;
    if (best.walk == *leader_) return;
  }
  bool changed = leader_.has_value();
  leader_ = std::move(best.walk);
  leader_id_ = intern(*leader_);
  if (changed && count_switch) ++switches_;
  last_switch_ = changed;
}

bool FplState::step(const LossFunction& loss) {
  ++t_;
  if (leader_) {
    epoch_loss_ += loss(leader_->state_at(t_), leader_->action_at(t_));
  }
  for (auto& f : folds_) f.vec.add_step(loss, t_);

  if (mode_.kind == LambdaMode::Kind::FirstOrderDoubling &&
      epoch_loss_ >= std::pow(2.0, epoch_)) {
    while (epoch_loss_ >= std::pow(2.0, epoch_)) ++epoch_;
    perts_ = std::make_unique<PerturbationSet>(
        g_->num_states(), g_->num_actions(), current_lambda(), rng_);
  }

  last_switch_ = false;
  recompute_leader(/*count_switch=*/true);
  return last_switch_;
}

void FplState::clear_perturbations_for_test() {
  perts_->clear();
  leader_.reset();
  recompute_leader(false);
}

int FplState::intern(const ClosedWalk& c) {
  auto [it, inserted] =
      walk_ids_.emplace(c.key(), static_cast<int>(walk_ids_.size()));
  return it->second;
}

std::vector<double> estimate_switch_probability(
    const AdmdpGraph& g, const std::vector<LossFunction>& losses,
    double lambda, int trials, uint64_t seed, int start_class) {
  std::vector<int64_t> switch_counts(losses.size(), 0);
  for (int trial = 0; trial < trials; ++trial) {
    FplState fpl(g, LambdaMode::fixed(lambda), mix_seed(seed, trial),
                 start_class);
    for (size_t t = 0; t < losses.size(); ++t)
      if (fpl.step(losses[t])) ++switch_counts[t];
  }
  std::vector<double> out(losses.size());
  for (size_t t = 0; t < losses.size(); ++t)
    out[t] = static_cast<double>(switch_counts[t]) / trials;
  return out;
}

}  // namespace admdp
