#include "admdp/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace admdp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Tableau with rows 0..m-1 the constraints and row m the objective
// (reduced costs, negated value in the last column).
struct Tableau {
  int m, n;                       // constraints, structural+artificial cols
  std::vector<std::vector<double>> t;  // (m+1) x (n+1)
  std::vector<int> basis;              // column basic in each row

  void pivot(int row, int col) {
    double p = t[row][col];
    for (double& v : t[row]) v /= p;
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      double f = t[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
    }
    basis[row] = col;
  }

  // Returns false when the problem is unbounded. `allowed` marks columns
  // eligible to enter the basis.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < n; ++c) {
        if (allowed[c] && t[m][c] < -kPivotTol) {
          enter = c;  // Bland: smallest index
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] > kPivotTol) {
          double ratio = t[r][n] / t[r][enter];
          if (ratio < best_ratio - kPivotTol ||
              (ratio < best_ratio + kPivotTol &&
               (leave < 0 || basis[r] < basis[leave]))) {
            best_ratio = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp_min(const std::vector<double>& c,
                      const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b) {
  const int m = static_cast<int>(a.size());
  const int nvars = static_cast<int>(c.size());

  Tableau tab;
  tab.m = m;
  tab.n = nvars + m;  // artificials appended
  tab.t.assign(m + 1, std::vector<double>(tab.n + 1, 0.0));
  tab.basis.resize(m);

  for (int r = 0; r < m; ++r) {
    double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (int cidx = 0; cidx < nvars; ++cidx) tab.t[r][cidx] = sign * a[r][cidx];
    tab.t[r][tab.n] = sign * b[r];
    tab.t[r][nvars + r] = 1.0;
    tab.basis[r] = nvars + r;
  }

  // Phase 1: minimize the sum of artificials.
  for (int cidx = 0; cidx < nvars; ++cidx) {
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += tab.t[r][cidx];
    tab.t[m][cidx] = -s;
  }
  {
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += tab.t[r][tab.n];
    tab.t[m][tab.n] = -s;
  }
  std::vector<bool> allowed(tab.n, true);
  if (!tab.run(allowed))
    throw std::logic_error("phase-1 simplex reported unbounded");
  double phase1 = -tab.t[m][tab.n];
  if (phase1 > kFeasTol) {
    LpResult res;
    res.status = LpResult::Status::Infeasible;
    return res;
  }

  // Drive any residual artificial out of the basis; drop redundant rows by
  // leaving the (zero-valued) artificial basic and locking its column.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nvars) continue;
    int enter = -1;
    for (int cidx = 0; cidx < nvars; ++cidx) {
      if (std::abs(tab.t[r][cidx]) > kFeasTol) {
        enter = cidx;
        break;
      }
    }
    if (enter >= 0) tab.pivot(r, enter);
  }

  // Phase 2 objective: reduced costs of c relative to the current basis.
  for (int cidx = 0; cidx <= tab.n; ++cidx) tab.t[m][cidx] = 0.0;
  for (int cidx = 0; cidx < nvars; ++cidx) tab.t[m][cidx] = c[cidx];
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nvars) {
      double f = c[tab.basis[r]];
      if (f == 0.0) continue;
      for (int cidx = 0; cidx <= tab.n; ++cidx)
        tab.t[m][cidx] -= f * tab.t[r][cidx];
    }
  }
  for (int cidx = nvars; cidx < tab.n; ++cidx) allowed[cidx] = false;

  LpResult res;
  if (!tab.run(allowed)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x.assign(nvars, 0.0);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < nvars) res.x[tab.basis[r]] = tab.t[r][tab.n];
  res.value = 0.0;
  for (int cidx = 0; cidx < nvars; ++cidx) res.value += c[cidx] * res.x[cidx];
  return res;
}

}  // namespace admdp
