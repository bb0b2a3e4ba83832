#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "admdp/types.hpp"

namespace admdp {

// One row per interaction step.
struct StepRow {
  int64_t t;
  State state;
  Action action;
  double loss;       // l_t(s_t, a_t)
  int leader;        // interned expert / policy id
  bool transit;      // in a catch-up path or catching phase
  bool switched;     // expert algorithm switched after this step
};

struct RunRecord {
  std::vector<StepRow> rows;
  double total_loss = 0.0;
  int64_t switches = 0;
  double lstar = std::nan("");   // filled by the harness when computable
  double regret = std::nan("");
  uint64_t seed = 0;
};

// Oblivious loss source: losses are fully determined by t (1-based).
using LossStream = std::function<LossFunction(int64_t)>;

}  // namespace admdp
