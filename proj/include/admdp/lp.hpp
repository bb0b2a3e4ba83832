#pragma once

#include <vector>

namespace admdp {

// Dense two-phase simplex for small equality-form problems:
//   min c.x  s.t.  A x = b,  x >= 0.
// Bland's rule throughout, so the pivot sequence (and the returned vertex)
// is deterministic and cycling-free.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  double value = 0.0;
  std::vector<double> x;
};

LpResult solve_lp_min(const std::vector<double>& c,
                      const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b);

}  // namespace admdp
