#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "admdp/policy_fpl.hpp"
#include "admdp/run_record.hpp"
#include "admdp/stochastic.hpp"

namespace admdp {

// Best-stationary-policy oracle: given a finite loss sequence, returns a
// policy minimizing the total expected loss. Calls are traced so tests can
// check the oracle is consulted one-shot (not per policy).
class EnumerationOracle {
 public:
  explicit EnumerationOracle(const StochasticMdp& mdp,
                             int64_t cap = int64_t{1} << 16);

  // losses[0] may lie outside [0,1]: it carries the perturbation table
  // folded in as a fictitious time-0 loss.
  DeterministicPolicy solve(const std::vector<LossFunction>& losses);

  int64_t call_count() const { return calls_; }
  // Reproducibility trace: (hash of the input sequence, returned policy).
  const std::vector<std::pair<size_t, DeterministicPolicy>>& trace() const {
    return trace_;
  }

 private:
  const StochasticMdp* mdp_;
  std::vector<DeterministicPolicy> policies_;
  int64_t calls_ = 0;
  std::vector<std::pair<size_t, DeterministicPolicy>> trace_;
};

// Oracle-flavoured FPL: the perturbation is a per-(s,a) Exponential(lambda)
// table epsilon, entering each policy's score as the start-weighted sum
// sum_s d_1(s) epsilon(s, pi(s)). With that folding the leader is exactly
// what a single oracle call on (epsilon-as-loss, l_1..l_t) returns.
class OracleFpl : public PolicyExpertFpl {
 public:
  OracleFpl(const StochasticMdp& mdp, double lambda, uint64_t seed,
            int64_t cap = int64_t{1} << 16);

  // epsilon(s, a), the raw perturbation table.
  double eps(State s, Action a) const { return eps_[s * na_ + a]; }
  // The fictitious loss handed to the oracle: epsilon clamped to a
  // LossFunction-shaped table (values may exceed 1).
  LossFunction eps_as_loss() const;

 private:
  std::vector<double> eps_;
  int na_;
};

// Tuning from the exploring-starts margin alpha = min_s d_1(s):
// lambda = min(sqrt(alpha log(|S||A|) / (|S| L)), alpha / (2|S|)).
double oracle_lambda(const StochasticMdp& mdp, double alpha, int64_t horizon);

// Algorithm-4 interaction loop. Throws ExploringStartsViolated when
// min_s d_1(s) < alpha.
RunRecord run_oracle(const StochasticMdp& mdp, const LossStream& stream,
                     int64_t horizon, double alpha, double lambda,
                     uint64_t seed);

}  // namespace admdp
