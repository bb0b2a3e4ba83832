#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "admdp/types.hpp"

namespace admdp {

// Deterministic MDP as a labelled directed graph: every (state, action)
// pair has exactly one successor. Period, cycle classes, predecessor sets
// and the critical length are computed at construction.
class AdmdpGraph {
 public:
  // next[s][a] = successor state. Throws NotStronglyConnected if some
  // ordered pair of states is unreachable.
  static AdmdpGraph build(std::vector<std::vector<State>> next);

  int num_states() const { return ns_; }
  int num_actions() const { return na_; }

  State next(State s, Action a) const { return next_[s][a]; }

  // I(s): incoming edges as (state, action) pairs, sorted.
  const std::vector<std::pair<State, Action>>& predecessors(State s) const {
    return preds_[s];
  }

  int period() const { return gamma_; }
  int cycle_class(State s) const { return cls_[s]; }

  // Smallest d such that for every l >= d and every same-class ordered
  // pair (u,v) there is a path of length gamma*l from u to v.
  int critical_length() const { return d_; }

  // Actions of a path of exactly `length` steps from `from` to `to`.
  // Throws NoPath when no such path exists.
  std::vector<Action> path_of_length(State from, State to, int length) const;

  // States reachable from `from` in exactly `length` steps.
  std::vector<bool> reachable_exact(State from, int length) const;

 private:
  AdmdpGraph() = default;

  int ns_ = 0, na_ = 0;
  std::vector<std::vector<State>> next_;
  std::vector<std::vector<std::pair<State, Action>>> preds_;
  int gamma_ = 1;
  std::vector<int> cls_;
  int d_ = 1;
};

// Element of C_{(s,k)}: a closed walk of length k starting and ending at s.
class ClosedWalk {
 public:
  // Validates chaining against the graph: each action must lead along the
  // walk and the walk must return to its start.
  ClosedWalk(const AdmdpGraph& g, State start, std::vector<Action> actions);

  State start() const { return start_; }
  int length() const { return static_cast<int>(actions_.size()); }
  Action action(int i) const { return actions_[i]; }  // 0-based position
  State state(int i) const { return states_[i]; }     // 0-based position

  // s_t(c) / a_t(c): state and action at interaction time t >= 1, if the
  // walk had been followed from the start of the interaction.
  State state_at(int64_t t) const {
    return states_[static_cast<size_t>((t - 1) % length())];
  }
  Action action_at(int64_t t) const {
    return actions_[static_cast<size_t>((t - 1) % length())];
  }

  bool operator==(const ClosedWalk& o) const {
    return start_ == o.start_ && actions_ == o.actions_;
  }

  // Stable text key, used for interning leader ids.
  std::string key() const;

 private:
  State start_;
  std::vector<Action> actions_;
  std::vector<State> states_;  // states_[i] = state before actions_[i]
};

}  // namespace admdp
