#include "admdp/adversary.hpp"

#include "admdp/rng.hpp"

namespace admdp {

LossStream AdversarySpec::stream() const {
  if (num_states <= 0 || num_actions <= 0)
    throw ConfigError("adversary needs positive state/action counts");
  AdversarySpec spec = *this;  // captured by value: the stream owns its spec
  switch (kind) {
    case Kind::IidUniform:
      return [spec](int64_t t) {
        Rng rng(mix_seed(spec.seed, static_cast<uint64_t>(t)));
        LossFunction f(spec.num_states, spec.num_actions);
        for (State s = 0; s < spec.num_states; ++s)
          for (Action a = 0; a < spec.num_actions; ++a)
            f.at(s, a) = rng.uniform();
        return f;
      };
    case Kind::BernoulliExpertsLb:
      return [spec](int64_t t) {
        Rng rng(mix_seed(spec.seed, static_cast<uint64_t>(t)));
        LossFunction f(spec.num_states, spec.num_actions);
        for (State s = 0; s < spec.num_states; ++s)
          for (Action a = 0; a < spec.num_actions; ++a)
            f.at(s, a) = rng.bernoulli(0.5) ? 1.0 : 0.0;
        return f;
      };
    case Kind::EdgePunisher:
      return [spec](int64_t) {
        LossFunction f(spec.num_states, spec.num_actions);
        for (auto [s, a] : spec.punished) f.at(s, a) = 1.0;
        return f;
      };
    case Kind::Constant:
      if (value < 0.0 || value > 1.0)
        throw ConfigError("constant loss outside [0,1]");
      return [spec](int64_t) {
        return LossFunction(spec.num_states, spec.num_actions, spec.value);
      };
    case Kind::File:
      return [spec](int64_t t) {
        if (t < 1 || t > static_cast<int64_t>(spec.table.size()))
          throw ConfigError("loss table has no row for t=" + std::to_string(t));
        const auto& row = spec.table[static_cast<size_t>(t - 1)];
        if (static_cast<int>(row.size()) != spec.num_states * spec.num_actions)
          throw ConfigError("loss table row has wrong width");
        LossFunction f(spec.num_states, spec.num_actions);
        for (State s = 0; s < spec.num_states; ++s)
          for (Action a = 0; a < spec.num_actions; ++a)
            f.at(s, a) = row[static_cast<size_t>(s) * spec.num_actions + a];
        f.validate();
        return f;
      };
  }
  throw ConfigError("unknown adversary kind");
}

AdversarySpec::Kind parse_adversary_kind(const std::string& name) {
  if (name == "iid_uniform") return AdversarySpec::Kind::IidUniform;
  if (name == "bernoulli_experts_lb")
    return AdversarySpec::Kind::BernoulliExpertsLb;
  if (name == "edge_punisher") return AdversarySpec::Kind::EdgePunisher;
  if (name == "constant") return AdversarySpec::Kind::Constant;
  if (name == "file") return AdversarySpec::Kind::File;
  throw ConfigError("unknown adversary kind: " + name);
}

LowerBoundInstance gen_lower_bound_instance(int num_states, int num_actions,
                                            uint64_t seed) {
  if (num_states <= 3)
    throw BadShape("lower-bound instance needs more than 3 states");
  if (num_actions < 1)
    throw BadShape("lower-bound instance needs at least 1 action");
  // Directed cycle: every action advances one step, so all closed walks
  // have length divisible by |S| and the period equals |S|.
  std::vector<std::vector<State>> next(num_states,
                                       std::vector<State>(num_actions));
  for (State s = 0; s < num_states; ++s)
    for (Action a = 0; a < num_actions; ++a) next[s][a] = (s + 1) % num_states;

  LowerBoundInstance inst{AdmdpGraph::build(std::move(next)), {}};
  inst.losses.kind = AdversarySpec::Kind::BernoulliExpertsLb;
  inst.losses.seed = seed;
  inst.losses.num_states = num_states;
  inst.losses.num_actions = num_actions;
  return inst;
}

}  // namespace admdp
