#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace admdp {

using State = int;
using Action = int;

// Failure modes surfaced by the library. Each maps to a specific
// precondition or invariant breach.
struct NotStronglyConnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCommunicating : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssumptionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DecompositionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoExpert : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExploringStartsViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-step loss table (state, action) -> [0,1].
class LossFunction {
 public:
  LossFunction() : ns_(0), na_(0) {}
  LossFunction(int num_states, int num_actions, double fill = 0.0)
      : ns_(num_states), na_(num_actions),
        v_(static_cast<size_t>(num_states) * num_actions, fill) {}

  double operator()(State s, Action a) const {
    return v_[static_cast<size_t>(s) * na_ + a];
  }
  double& at(State s, Action a) { return v_[static_cast<size_t>(s) * na_ + a]; }

  int num_states() const { return ns_; }
  int num_actions() const { return na_; }

  // Enforces the [0,1] range on every entry.
  void validate() const {
    for (double x : v_) {
      if (!(x >= 0.0 && x <= 1.0))
        throw InvariantViolation("loss entry outside [0,1]: " +
                                 std::to_string(x));
    }
  }

  const std::vector<double>& data() const { return v_; }

 private:
  int ns_, na_;
  std::vector<double> v_;
};

// Total map state -> action.
struct DeterministicPolicy {
  std::vector<Action> action;

  DeterministicPolicy() = default;
  explicit DeterministicPolicy(std::vector<Action> a) : action(std::move(a)) {}

  Action operator()(State s) const { return action[static_cast<size_t>(s)]; }
  int num_states() const { return static_cast<int>(action.size()); }

  bool operator==(const DeterministicPolicy& o) const {
    return action == o.action;
  }
};

}  // namespace admdp
