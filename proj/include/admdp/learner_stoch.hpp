#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "admdp/policy_fpl.hpp"
#include "admdp/run_record.hpp"
#include "admdp/stochastic.hpp"

namespace admdp {

// Incremental driver for the Switch_Policy routine: navigate to s*, sample
// a target from d_pi^{t+ell*}, run the wait-then-goto plan for exactly ell*
// steps, and accept with probability p*/p_target when the target is hit.
// The caller owns the environment loop and feeds transitions in.
class CatchDriver {
 public:
  // Returns d_pi^{t_abs} for the policy being caught.
  using DistProvider = std::function<std::vector<double>(int64_t t_abs)>;

  CatchDriver(const StochasticMdp& mdp, const CatchingPlan& plan,
              DistProvider dist_provider, Rng* rng);

  // Action to take at time t from state cur.
  Action next_action(State cur, int64_t t);
  // Resulting transition: state at time t_next = t + 1.
  void observe(State next, int64_t t_next);

  bool done() const { return done_; }
  int64_t t_switch() const { return t_switch_; }

 private:
  const StochasticMdp* mdp_;
  const CatchingPlan* plan_;
  DistProvider dist_provider_;
  Rng* rng_;
  bool in_segment_ = false;
  int seg_pos_ = 0;
  State target_ = -1;
  bool done_ = false;
  int64_t t_switch_ = -1;
  int64_t steps_ = 0;
};

struct CatchResult {
  int64_t t_switch;
  std::vector<std::pair<State, Action>> trajectory;  // times t0..t_switch-1
  State final_state;                                 // state at t_switch
};

// Runs the catching routine to completion against the environment kernel,
// starting from `from_state` at time t0. The accepted final state is
// distributed as d_pi^{t_switch} conditioned on T_switch = t_switch.
CatchResult switch_policy(const StochasticMdp& mdp, const CatchingPlan& plan,
                          const DeterministicPolicy& target_policy,
                          State from_state, int64_t t0, Rng& rng);

// Full Algorithm-3 interaction: policy-expert FPL with exponential scalar
// perturbations; every FPL switch triggers the catching routine, which is
// preempted and restarted if FPL switches again mid-execution.
RunRecord run_stochastic(const StochasticMdp& mdp, const LossStream& stream,
                         int64_t horizon, double lambda, uint64_t seed);

// Monte-Carlo mean of T_switch - t0 (start state drawn from d_1 per trial).
double expected_catch_time_stats(const StochasticMdp& mdp,
                                 const CatchingPlan& plan,
                                 const DeterministicPolicy& target_policy,
                                 int64_t t0, int trials, uint64_t seed);

// Shared interaction loop for Algorithm-3-style learners (used by both the
// exponential-perturbation expert and the oracle-FPL expert).
RunRecord run_policy_interaction(const StochasticMdp& mdp,
                                 PolicyExpertFpl& expert,
                                 const CatchingPlan& plan,
                                 const LossStream& stream, int64_t horizon,
                                 uint64_t seed);

}  // namespace admdp
