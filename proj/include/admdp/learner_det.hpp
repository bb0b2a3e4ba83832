#pragma once

#include <cstdint>
#include <utility>

#include "admdp/fpl.hpp"
#include "admdp/graph.hpp"
#include "admdp/run_record.hpp"

namespace admdp {

// Algorithm: mirror the FPL leader's walk; on a leader switch (or initial
// misalignment) spend gamma*d steps traversing an exact-length catch-up
// path to rejoin the new walk in phase. FPL is fed every loss, including
// during transit, and a mid-transit switch preempts the current path.
RunRecord run_deterministic(const AdmdpGraph& g, const LossStream& stream,
                            int64_t horizon, LambdaMode mode, uint64_t seed,
                            State start_state);

// Exhaustive best stationary deterministic policy in hindsight: simulates
// every policy from start_state over the loss stream. Throws CapExceeded
// when |S| exceeds the enumeration cap.
std::pair<double, DeterministicPolicy> best_policy_in_hindsight(
    const AdmdpGraph& g, const LossStream& stream, int64_t horizon,
    State start_state, int state_cap = 8);

}  // namespace admdp
