#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "admdp/adversary.hpp"
#include "admdp/graph.hpp"
#include "admdp/run_record.hpp"
#include "admdp/stochastic.hpp"

namespace admdp {

// Parsed MDP description file. Exactly one of det/stoch is set.
struct MdpFile {
  std::optional<AdmdpGraph> det;
  std::optional<StochasticMdp> stoch;
  std::vector<double> start_dist;  // also present for deterministic MDPs
};

// Loads the JSON description: {"states", "actions", "kind", "next" or
// "kernel", "start_dist", "loop_state"?, "loop_action"?}. Probabilities may
// be doubles or decimal strings. Throws ConfigError on schema violations.
MdpFile load_mdp_file(const std::string& path);
MdpFile parse_mdp_json(const std::string& text);

enum class AlgoKind { Det, Stoch, Oracle };

// Experiment configuration (single versioned JSON document; unknown fields
// are rejected).
struct ExperimentConfig {
  int schema_version = 1;
  std::string mdp_path;        // empty when mdp is inlined
  std::string mdp_inline;      // raw JSON text of an inlined mdp object
  AlgoKind algo = AlgoKind::Det;
  AdversarySpec adversary;     // shapes filled in after the MDP is loaded
  std::vector<int64_t> horizons;
  std::vector<uint64_t> seeds;
  // Lambda schedule: "horizon" (tuned from T), "doubling", or a fixed value.
  std::string lambda_mode = "horizon";
  double lambda_value = 0.0;
  double alpha = 0.0;          // oracle only; 0 means min_s d_1(s)
  State start_state = 0;       // deterministic learner only
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_json(const std::string& text,
                                   const std::string& origin);

struct SummaryRow {
  std::string algo;
  int64_t horizon;
  uint64_t seed;
  double total_loss;
  double lstar;    // NaN when not computed
  double regret;   // NaN when lstar is NaN
  int64_t switches;
};

struct ExperimentResult {
  std::vector<RunRecord> runs;       // cross-product order: horizon major
  std::vector<SummaryRow> summary;
};

// Executes the (horizon x seed) cross-product. L* is computed exactly by
// enumeration for |S| <= 8 and left NaN otherwise.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const MdpFile& mdp);

// One run at the given horizon/seed, shared by run_experiment and the CLI.
RunRecord run_single(const ExperimentConfig& cfg, const MdpFile& mdp,
                     int64_t horizon, uint64_t seed);

struct SlopeFit {
  double slope;
  double intercept;  // of log regret vs log T
  double r2;
};

// OLS of log(mean regret) on log(T). Mean regrets <= 0 are replaced by
// 1e-6 before taking logs (degenerate-fit convention).
SlopeFit fit_regret_slope(const std::vector<int64_t>& horizons,
                          const std::vector<double>& mean_regrets);

// Deterministic CSV serialization (fixed float formatting, '\n' endings).
std::string runs_csv(const std::vector<RunRecord>& runs);
std::string summary_csv(const std::vector<SummaryRow>& rows);
void write_file(const std::string& path, const std::string& content);

const char* algo_name(AlgoKind k);

}  // namespace admdp
