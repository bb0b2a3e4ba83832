#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "admdp/types.hpp"

namespace admdp {

// Communicating MDP with a known transition kernel and start distribution.
class StochasticMdp {
 public:
  // kernel[s][a] is a probability vector over successor states.
  // Throws NotCommunicating if the diameter is not finite, and
  // InvariantViolation on malformed probabilities.
  static StochasticMdp build(std::vector<std::vector<std::vector<double>>> kernel,
                             std::vector<double> start_dist,
                             std::optional<State> loop_state = std::nullopt,
                             std::optional<Action> loop_action = std::nullopt);

  int num_states() const { return ns_; }
  int num_actions() const { return na_; }

  const std::vector<double>& transition(State s, Action a) const {
    return kernel_[s][a];
  }
  const std::vector<double>& start_dist() const { return d1_; }

  std::optional<State> loop_state() const { return loop_state_; }
  std::optional<Action> loop_action() const { return loop_action_; }

  // D(M) = max over ordered pairs s != s' of the minimal expected
  // first-passage time.
  double diameter() const { return diameter_; }

  // Optimal-first-passage policy toward `target` (the arg-min of the
  // hitting-time Bellman operator).
  const DeterministicPolicy& goto_policy(State target) const {
    return goto_policies_[target];
  }
  double expected_hitting_time(State from, State to) const {
    return hitting_times_[from][to];
  }

 private:
  StochasticMdp() = default;

  int ns_ = 0, na_ = 0;
  std::vector<std::vector<std::vector<double>>> kernel_;
  std::vector<double> d1_;
  std::optional<State> loop_state_;
  std::optional<Action> loop_action_;
  double diameter_ = 0.0;
  std::vector<DeterministicPolicy> goto_policies_;      // indexed by target
  std::vector<std::vector<double>> hitting_times_;      // [from][to]
};

// Pr[T(to | M, policy, from) = l] for l in 1..max_len, exact forward DP
// with `to` absorbing.
std::vector<double> hitting_time_pmf(const StochasticMdp& mdp,
                                     const DeterministicPolicy& policy,
                                     State from, State to, int max_len);

// d_pi^t: distribution of states after following `policy` from the start,
// with d_pi^1 = d_1.
std::vector<double> policy_state_distribution(const StochasticMdp& mdp,
                                              const DeterministicPolicy& policy,
                                              int64_t t);

// One kernel application d -> d P_pi.
void advance_distribution(const StochasticMdp& mdp,
                          const DeterministicPolicy& policy,
                          std::vector<double>& dist);

// L^pi and the per-step expected losses lhat_t(pi), computed exactly.
struct PolicyLoss {
  double total;
  std::vector<double> per_step;
};
PolicyLoss expected_policy_loss(const StochasticMdp& mdp,
                                const DeterministicPolicy& policy,
                                const std::vector<LossFunction>& losses);

// Catching plan built from Assumption 1 (a self-loop state s*): for each
// target s', a wait-then-goto nonstationary policy that occupies s' after
// exactly ell_star steps from s* with probability p_hit >= 1/(4 ceil(D)).
struct TargetPlan {
  int ell_target;                 // steps of the goto phase
  int wait;                       // ell_star - ell_target steps at s*
  DeterministicPolicy goto_policy;
  double p_hit;                   // exact occupancy probability at ell_star
};

struct CatchingPlan {
  int ell_star;
  double p_star;                  // min over targets of p_hit
  std::vector<TargetPlan> per_target;  // indexed by target state
};

CatchingPlan build_catching_plan(const StochasticMdp& mdp);

}  // namespace admdp
