#include <cmath>

#include "doctest.h"

#include "admdp/cycle_opt.hpp"
#include "admdp/lp.hpp"
#include "oracles.hpp"

using namespace admdp;

TEST_CASE("lp solver sanity") {
  // min -x1 - x2 s.t. x1 + x2 <= 1 (as equality with slack), x >= 0.
  // Encoded as min c.x with A x = b: x1 + x2 + s = 1.
  auto r = solve_lp_min({-1.0, -1.0, 0.0}, {{1.0, 1.0, 1.0}}, {1.0});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == doctest::Approx(-1.0));
  // Infeasible: x1 = -1 with x >= 0.
  auto inf = solve_lp_min({1.0}, {{1.0}}, {-1.0});
  CHECK(inf.status == LpResult::Status::Infeasible);
}

TEST_CASE("fold: empty history is zero plus perturbations") {
  auto f = fold_losses({}, 0, 2, 2, 2, nullptr);
  CHECK(f.at(0, 0, 1) == 0.0);
  CHECK(f.delta() == 0.0);
  Rng rng(3);
  PerturbationSet perts(2, 2, 0.5, rng);
  auto g = fold_losses({}, 0, 2, 2, 2, &perts);
  CHECK(g.at(1, 0, 2) == doctest::Approx(perts.eps(2, 1, 0)));
  CHECK(g.delta() == doctest::Approx(perts.delta(0, 2)));
}

TEST_CASE("fold: k=1 constant loss accumulates every step") {
  std::vector<LossFunction> ls(10, LossFunction(2, 2, 0.5));
  auto f = fold_losses(ls, 0, 1, 2, 2, nullptr);
  CHECK(f.at(0, 0, 1) == doctest::Approx(5.0));
  CHECK(f.at(1, 1, 1) == doctest::Approx(5.0));
}

TEST_CASE("fold: k=3 over 7 steps matches the direct double loop") {
  Rng rng(8);
  std::vector<LossFunction> ls;
  for (int t = 0; t < 7; ++t) ls.push_back(oracle::random_loss(3, 2, rng));
  auto f = fold_losses(ls, 1, 3, 3, 2, nullptr);
  for (State s = 0; s < 3; ++s)
    for (Action a = 0; a < 2; ++a)
      for (int i = 1; i <= 3; ++i) {
        double want = 0.0;
        for (int j = 1; j <= 7; ++j)
          if ((j - i) % 3 == 0) want += ls[j - 1](s, a);
        CHECK(f.at(s, a, i) == doctest::Approx(want));
      }
}

TEST_CASE("fold linearity") {
  Rng rng(9);
  auto l1 = oracle::random_loss(2, 2, rng);
  auto l2 = oracle::random_loss(2, 2, rng);
  auto fa = fold_losses({l1}, 0, 2, 2, 2, nullptr);
  auto fb = fold_losses({l2}, 0, 2, 2, 2, nullptr);
  LossFunction sum(2, 2);
  for (State s = 0; s < 2; ++s)
    for (Action a = 0; a < 2; ++a) sum.at(s, a) = l1(s, a) + l2(s, a);
  // fold of the sum applied at one position equals the sum of folds there.
  auto fs1 = fold_losses({sum}, 0, 2, 2, 2, nullptr);
  for (State s = 0; s < 2; ++s)
    for (Action a = 0; a < 2; ++a)
      CHECK(fs1.at(s, a, 1) == doctest::Approx(fa.at(s, a, 1) + fb.at(s, a, 1)));
}

TEST_CASE("solve_best_cycle: single self-loop expert") {
  auto g = AdmdpGraph::build({{0, 1}, {0, 0}});
  std::vector<LossFunction> ls(4, LossFunction(2, 2, 0.0));
  for (auto& l : ls) l.at(0, 0) = 0.25;
  auto f = fold_losses(ls, 0, 1, 2, 2, nullptr);
  auto sol = solve_best_cycle(g, 0, 1, f);
  CHECK(sol.value == doctest::Approx(1.0));
  CHECK(sol.x[0 * 1 + 0] == doctest::Approx(1.0));  // x_{0,0,1}
}

TEST_CASE("solve_best_cycle: 2-cycle with two actions equals the 4-walk min") {
  auto g = AdmdpGraph::build({{1, 1}, {0, 0}});
  Rng rng(12);
  std::vector<LossFunction> ls;
  for (int t = 0; t < 5; ++t) ls.push_back(oracle::random_loss(2, 2, rng));
  auto f = fold_losses(ls, 0, 2, 2, 2, nullptr);
  auto sol = solve_best_cycle(g, 0, 2, f);
  double best = 1e18;
  for (const auto& acts : oracle::all_closed_walks(g, 0, 2))
    best = std::min(best, oracle::walk_cost(g, 0, acts, ls, nullptr));
  CHECK(sol.value == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("solve_best_cycle: infeasible length on a pure 3-cycle") {
  auto g = AdmdpGraph::build({{1}, {2}, {0}});
  FoldedLossVector f(3, 1, 2);
  CHECK_THROWS_AS(solve_best_cycle(g, 0, 2, f), Infeasible);
}

TEST_CASE("decompose: integral solutions round-trip") {
  auto g = AdmdpGraph::build({{1, 1}, {0, 0}});
  ClosedWalk c(g, 0, {1, 0});
  std::vector<double> x(2 * 2 * 2, 0.0);
  x[(0 * 2 + 1) * 2 + 0] = 1.0;  // (s=0,a=1,i=1)
  x[(1 * 2 + 0) * 2 + 1] = 1.0;  // (s=1,a=0,i=2)
  auto w = decompose_to_walk(g, 0, 2, x);
  CHECK(w == c);
}

TEST_CASE("decompose: symmetric mixture returns an optimal walk") {
  auto g = AdmdpGraph::build({{1, 1}, {0, 0}});
  std::vector<double> x(8, 0.0);
  x[(0 * 2 + 0) * 2 + 0] = 0.5;
  x[(0 * 2 + 1) * 2 + 0] = 0.5;
  x[(1 * 2 + 0) * 2 + 1] = 0.5;
  x[(1 * 2 + 1) * 2 + 1] = 0.5;
  auto w = decompose_to_walk(g, 0, 2, x);
  CHECK(w.start() == 0);
  CHECK(w.length() == 2);
}

TEST_CASE("best_cycle_overall equals exhaustive enumeration") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int ns = 2 + rng.uniform_int(4);   // up to 5 states
    int na = 1 + rng.uniform_int(3);   // up to 3 actions
    auto g = oracle::random_graph(ns, na, rng);
    std::vector<LossFunction> ls;
    int steps = rng.uniform_int(6);
    for (int t = 0; t < steps; ++t) ls.push_back(oracle::random_loss(ns, na, rng));
    PerturbationSet perts(ns, na, 0.7, rng);
    int cls = rng.uniform_int(g.period());
    auto got = best_cycle_overall(g, ls, &perts, cls);
    auto ref = oracle::brute_best_walk(g, ls, &perts, cls);
    REQUIRE(ref.has_value());
    CHECK(got.value == doctest::Approx(ref->value).epsilon(1e-6));
    // Returned walk itself attains the claimed value.
    std::vector<Action> acts;
    for (int i = 0; i < got.walk.length(); ++i) acts.push_back(got.walk.action(i));
    CHECK(oracle::walk_cost(g, got.walk.start(), acts, ls, &perts) ==
          doctest::Approx(got.value).epsilon(1e-6));
    CHECK(g.cycle_class(got.walk.start()) == cls);
  }
}

TEST_CASE("best_cycle_overall: zero everything gives value 0") {
  auto g = AdmdpGraph::build({{1, 1}, {0, 0}});
  auto got = best_cycle_overall(g, {}, nullptr, 0);
  CHECK(got.value == doctest::Approx(0.0));
}

TEST_CASE("best_cycle_overall: dominant cheap cycle wins") {
  // Losses 1 everywhere except the walk 0 -(a1)-> 1 -(a0)-> 0.
  auto g = AdmdpGraph::build({{1, 1}, {0, 0}});
  std::vector<LossFunction> ls;
  for (int t = 0; t < 6; ++t) {
    LossFunction f(2, 2, 1.0);
    f.at(0, 1) = 0.0;
    f.at(1, 0) = 0.0;
    ls.push_back(f);
  }
  auto got = best_cycle_overall(g, ls, nullptr, 0);
  CHECK(got.value == doctest::Approx(0.0));
  CHECK(got.walk.action(0) == 1);
  CHECK(got.walk.action(1) == 0);
}

TEST_CASE("perturbation-dominated regime returns the perturbation argmin") {
  Rng rng(101);
  auto g = oracle::random_graph(3, 2, rng);
  PerturbationSet perts(3, 2, 2.0, rng);
  std::vector<LossFunction> ls(3, LossFunction(3, 2, 0.0));
  auto got = best_cycle_overall(g, ls, &perts, 0);
  auto ref = oracle::brute_best_walk(g, ls, &perts, 0);
  CHECK(got.value == doctest::Approx(ref->value).epsilon(1e-9));
}
