#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "admdp/graph.hpp"
#include "admdp/run_record.hpp"
#include "admdp/types.hpp"

namespace admdp {

// Declarative loss sequence. Every kind is oblivious and reproducible:
// the loss at time t depends only on (spec, t), never on call order.
struct AdversarySpec {
  enum class Kind {
    IidUniform,         // each entry Uniform[0,1], fresh per (t, s, a)
    BernoulliExpertsLb, // i.i.d. Bernoulli(1/2) per (t, s, a)
    EdgePunisher,       // fixed loss 1 on listed (s, a) pairs, 0 elsewhere
    Constant,           // every entry equals `value`
    File,               // explicit row-major table per step
  };

  Kind kind = Kind::IidUniform;
  uint64_t seed = 0;
  int num_states = 0;
  int num_actions = 0;
  double value = 0.0;                                  // Constant
  std::vector<std::pair<State, Action>> punished;      // EdgePunisher
  std::vector<std::vector<double>> table;              // File, table[t-1]

  // Materializes the stream; safe to call for arbitrary t in any order.
  LossStream stream() const;
};

AdversarySpec::Kind parse_adversary_kind(const std::string& name);

// Hard instance for the switching-cost lower bound: a directed |S|-cycle
// where every action advances one step, paired with Bernoulli(1/2) losses.
struct LowerBoundInstance {
  AdmdpGraph graph;
  AdversarySpec losses;
};

// Throws BadShape when num_states <= 3 or num_actions < 2.
LowerBoundInstance gen_lower_bound_instance(int num_states, int num_actions,
                                            uint64_t seed);

}  // namespace admdp
