#include "admdp/learner_det.hpp"

#include <cmath>
#include <deque>

namespace admdp {

RunRecord run_deterministic(const AdmdpGraph& g, const LossStream& stream,
                            int64_t horizon, LambdaMode mode, uint64_t seed,
                            State start_state) {
  const int transit_len = g.period() * g.critical_length();

  FplState fpl(g, mode, seed, g.cycle_class(start_state));

  RunRecord rec;
  rec.seed = seed;
  rec.rows.reserve(static_cast<size_t>(horizon));

  State state = start_state;
  std::deque<Action> transit;

  // Plans a gamma*d path from `state` at step `t` onto the walk's position
  // at step t + gamma*d. Class bookkeeping guarantees such a path exists.
  auto plan_transit = [&](int64_t t) {
    if (state == fpl.leader().state_at(t)) {  // already in phase
      transit.clear();
      return;
    }
    State target = fpl.leader().state_at(t + transit_len);
    auto actions = g.path_of_length(state, target, transit_len);
    transit.assign(actions.begin(), actions.end());
  };

  if (fpl.leader().state_at(1) != start_state) plan_transit(1);

  for (int64_t t = 1; t <= horizon; ++t) {
    LossFunction loss = stream(t);
    bool in_transit = !transit.empty();
    Action a;
    if (in_transit) {
      a = transit.front();
      transit.pop_front();
    } else {
      a = fpl.leader().action_at(t);
    }
    double l = loss(state, a);
    rec.total_loss += l;
    rec.rows.push_back(
        StepRow{t, state, a, l, fpl.leader_id(), in_transit, false});
    state = g.next(state, a);

    bool switched = fpl.step(loss);
    if (switched) {
      rec.rows.back().switched = true;
      ++rec.switches;
      if (t + 1 <= horizon) plan_transit(t + 1);  // preempts any active path
    }
  }
  return rec;
}

std::pair<double, DeterministicPolicy> best_policy_in_hindsight(
    const AdmdpGraph& g, const LossStream& stream, int64_t horizon,
    State start_state, int state_cap) {
  if (g.num_states() > state_cap)
    throw CapExceeded("policy enumeration capped at |S| <= " +
                      std::to_string(state_cap));
  const int ns = g.num_states(), na = g.num_actions();
  int64_t count = 1;
  for (int s = 0; s < ns; ++s) count *= na;

  std::vector<double> totals(static_cast<size_t>(count), 0.0);
  std::vector<State> cur(static_cast<size_t>(count), start_state);
  std::vector<DeterministicPolicy> policies;
  policies.reserve(static_cast<size_t>(count));
  for (int64_t p = 0; p < count; ++p) {
    std::vector<Action> act(ns);
    int64_t rest = p;
    for (int s = 0; s < ns; ++s) {
      act[s] = static_cast<Action>(rest % na);
      rest /= na;
    }
    policies.emplace_back(std::move(act));
  }

  for (int64_t t = 1; t <= horizon; ++t) {
    LossFunction loss = stream(t);
    for (int64_t p = 0; p < count; ++p) {
      Action a = policies[p](cur[p]);
      totals[p] += loss(cur[p], a);
      cur[p] = g.next(cur[p], a);
    }
  }

  int64_t best = 0;
  for (int64_t p = 1; p < count; ++p)
    if (totals[p] < totals[best]) best = p;
  return {totals[best], policies[best]};
}

}  // namespace admdp
