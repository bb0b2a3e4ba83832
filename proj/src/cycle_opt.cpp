#include "admdp/cycle_opt.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "admdp/lp.hpp"

namespace admdp {

namespace {

constexpr double kMassTol = 1e-7;

}  // namespace

FoldedLossVector fold_losses(const std::vector<LossFunction>& losses, State s,
                             int k, int num_states, int num_actions,
                             const PerturbationSet* perts) {
  FoldedLossVector out(num_states, num_actions, k);
  for (size_t j = 0; j < losses.size(); ++j)
    out.add_step(losses[j], static_cast<int64_t>(j) + 1);
  if (perts) {
    for (int i = 1; i <= k; ++i)
      for (State s2 = 0; s2 < num_states; ++s2)
        for (Action a = 0; a < num_actions; ++a)
          out.at(s2, a, i) += perts->eps(i, s2, a);
    out.set_delta(perts->delta(s, k));
  }
  return out;
}

CycleLpSolution solve_best_cycle(const AdmdpGraph& g, State s, int k,
                                 const FoldedLossVector& folded) {
  const int ns = g.num_states(), na = g.num_actions();
  const int nvars = ns * na * k;
  auto var = [&](State s2, Action a, int i) {  // i 1-based
    return (s2 * na + a) * k + (i - 1);
  };

  // Variables pinned to zero by the position-1 and position-k families are
  // kept in the index space but excluded via explicit rows; the LP is small
  // enough that the uniform encoding is simpler than compacting.
  std::vector<std::vector<double>> a;
  std::vector<double> b;

  // Positions 1: all mass on start state s.
  {
    std::vector<double> row(nvars, 0.0);
    for (Action act = 0; act < na; ++act) row[var(s, act, 1)] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  for (State s2 = 0; s2 < ns; ++s2) {
    if (s2 == s) continue;
    std::vector<double> row(nvars, 0.0);
    for (Action act = 0; act < na; ++act) row[var(s2, act, 1)] = 1.0;
    a.push_back(std::move(row));
    b.push_back(0.0);
  }
  // Position k restricted to I(s).
  {
    std::vector<double> row(nvars, 0.0);
    bool any = false;
    for (State s2 = 0; s2 < ns; ++s2)
      for (Action act = 0; act < na; ++act)
        if (g.next(s2, act) != s) {
          row[var(s2, act, k)] = 1.0;
          any = true;
        }
    if (any) {
      a.push_back(std::move(row));
      b.push_back(0.0);
    }
  }
  // Flow conservation: inflow into s2 at position i equals outflow at i.
  for (int i = 2; i <= k; ++i) {
    for (State s2 = 0; s2 < ns; ++s2) {
      std::vector<double> row(nvars, 0.0);
      for (const auto& [u, act] : g.predecessors(s2))
        row[var(u, act, i - 1)] += 1.0;
      for (Action act = 0; act < na; ++act) row[var(s2, act, i)] -= 1.0;
      a.push_back(std::move(row));
      b.push_back(0.0);
    }
  }

  std::vector<double> c(nvars);
  for (State s2 = 0; s2 < ns; ++s2)
    for (Action act = 0; act < na; ++act)
      for (int i = 1; i <= k; ++i)
        c[var(s2, act, i)] = folded.at(s2, act, i);

  LpResult res = solve_lp_min(c, a, b);
  if (res.status == LpResult::Status::Infeasible)
    throw Infeasible("C_(s,k) is empty for s=" + std::to_string(s) +
                     " k=" + std::to_string(k));
  if (res.status != LpResult::Status::Optimal)
    throw InvariantViolation("cycle LP unbounded (nonnegative objective)");
  return CycleLpSolution{res.value, std::move(res.x)};
}

ClosedWalk decompose_to_walk(const AdmdpGraph& g, State s, int k,
                             const std::vector<double>& x) {
  const int na = g.num_actions();
  auto var = [&](State s2, Action a, int i) { return (s2 * na + a) * k + (i - 1); };
  std::vector<Action> actions;
  actions.reserve(k);
  State cur = s;
  for (int i = 1; i <= k; ++i) {
    Action best = -1;
    double best_w = kMassTol;
    for (Action a = 0; a < na; ++a) {
      double w = x[var(cur, a, i)];
      if (w > best_w) {
        best_w = w;
        best = a;
      }
    }
    if (best < 0)
      throw DecompositionFailed("no positive-weight edge at position " +
                                std::to_string(i));
    actions.push_back(best);
    cur = g.next(cur, best);
  }
  if (cur != s) throw DecompositionFailed("extracted chain does not close");
  return ClosedWalk(g, s, std::move(actions));
}

BestCycleResult best_cycle_over_folds(
    const AdmdpGraph& g, int start_class,
    const std::function<const FoldedLossVector&(State s, int k)>& fold_for) {
  const int gamma = g.period();
  std::optional<BestCycleResult> best;
  for (State s = 0; s < g.num_states(); ++s) {
    if (g.cycle_class(s) != start_class) continue;
    for (int k = gamma; k <= g.num_states(); k += gamma) {
      const FoldedLossVector& folded = fold_for(s, k);
      CycleLpSolution sol;
      try {
        sol = solve_best_cycle(g, s, k, folded);
      } catch (const Infeasible&) {
        continue;
      }
      double value = folded.delta() + sol.value;
      if (!best || value < best->value - 1e-12) {
        ClosedWalk walk = decompose_to_walk(g, s, k, sol.x);
        best = BestCycleResult{std::move(walk), value};
      }
    }
  }
  if (!best) throw NoExpert("no feasible (s,k) subproblem");
  return std::move(*best);
}

BestCycleResult best_cycle_overall(const AdmdpGraph& g,
                                   const std::vector<LossFunction>& losses,
                                   const PerturbationSet* perts,
                                   int start_class) {
  // Folds are built on demand and kept alive for the duration of the call.
  std::vector<FoldedLossVector> storage;
  storage.reserve(static_cast<size_t>(g.num_states()) * g.num_states());
  auto provider = [&](State s, int k) -> const FoldedLossVector& {
    storage.push_back(
        fold_losses(losses, s, k, g.num_states(), g.num_actions(), perts));
    return storage.back();
  };
  return best_cycle_over_folds(g, start_class, provider);
}

}  // namespace admdp
