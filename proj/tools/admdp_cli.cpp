#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "admdp/harness.hpp"
#include "admdp/learner_det.hpp"
#include "admdp/learner_stoch.hpp"

namespace {

using namespace admdp;

MdpFile resolve_mdp(const ExperimentConfig& cfg) {
  if (!cfg.mdp_path.empty()) return load_mdp_file(cfg.mdp_path);
  return parse_mdp_json(cfg.mdp_inline);
}

void apply_seed_override(ExperimentConfig& cfg, uint64_t seed, bool given) {
  if (given) cfg.seeds = {seed};
}

int cmd_analyze(const std::string& path) {
  MdpFile mdp = load_mdp_file(path);
  if (mdp.det) {
    const AdmdpGraph& g = *mdp.det;
    std::cout << "kind: deterministic\n";
    std::cout << "states: " << g.num_states() << " actions: " << g.num_actions()
              << "\n";
    std::cout << "period: " << g.period() << "\n";
    std::cout << "classes:";
    for (State s = 0; s < g.num_states(); ++s)
      std::cout << ' ' << g.cycle_class(s);
    std::cout << "\ncritical_length: " << g.critical_length() << "\n";
    return 0;
  }
  const StochasticMdp& m = *mdp.stoch;
  std::cout << "kind: stochastic\n";
  std::cout << "states: " << m.num_states() << " actions: " << m.num_actions()
            << "\n";
  std::cout << "diameter: " << m.diameter() << "\n";
  if (m.loop_state()) {
    CatchingPlan plan = build_catching_plan(m);
    std::cout << "loop_state: " << *m.loop_state() << "\n";
    std::cout << "ell_star: " << plan.ell_star << "\n";
    std::cout << "p_star: " << plan.p_star << "\n";
    for (State s = 0; s < m.num_states(); ++s) {
      const TargetPlan& tp = plan.per_target[s];
      std::cout << "target " << s << ": wait=" << tp.wait
                << " go=" << tp.ell_target << " p_hit=" << tp.p_hit << "\n";
    }
  } else {
    std::cout << "loop_state: none (no catching plan)\n";
  }
  return 0;
}

void write_outputs(const ExperimentResult& res, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir + "/runs.csv", runs_csv(res.runs));
  write_file(out_dir + "/summary.csv", summary_csv(res.summary));
}

int cmd_run(const std::string& path, const std::string& out_dir,
            uint64_t seed, bool seed_given) {
  ExperimentConfig cfg = load_config(path);
  apply_seed_override(cfg, seed, seed_given);
  MdpFile mdp = resolve_mdp(cfg);
  ExperimentResult res = run_experiment(cfg, mdp);
  if (!out_dir.empty()) write_outputs(res, out_dir);
  std::cout << summary_csv(res.summary);
  return 0;
}

int cmd_sweep(const std::string& path, const std::string& out_dir,
              uint64_t seed, bool seed_given) {
  ExperimentConfig cfg = load_config(path);
  apply_seed_override(cfg, seed, seed_given);
  MdpFile mdp = resolve_mdp(cfg);
  ExperimentResult res = run_experiment(cfg, mdp);
  if (!out_dir.empty()) write_outputs(res, out_dir);
  std::cout << summary_csv(res.summary);

  std::vector<double> means;
  for (int64_t T : cfg.horizons) {
    double sum = 0.0;
    int n = 0;
    for (const SummaryRow& r : res.summary) {
      if (r.horizon == T && !std::isnan(r.regret)) { sum += r.regret; ++n; }
    }
    if (n == 0) throw ConfigError("sweep needs computable regret (|S| <= 8)");
    means.push_back(sum / n);
  }
  SlopeFit fit = fit_regret_slope(cfg.horizons, means);
  std::cout << "slope," << fit.slope << "\nintercept," << fit.intercept
            << "\nr2," << fit.r2 << "\n";
  return 0;
}

int cmd_lowerbound(int states, int actions, int64_t horizon, int trials,
                   uint64_t seed, const std::string& out_dir) {
  LowerBoundInstance inst = gen_lower_bound_instance(states, actions, seed);
  std::vector<SummaryRow> rows;
  double total_regret = 0.0;
  for (int i = 0; i < trials; ++i) {
    AdversarySpec adv = inst.losses;
    adv.seed = mix_seed(seed, static_cast<uint64_t>(i));
    RunRecord rec = run_deterministic(
        inst.graph, adv.stream(), horizon,
        LambdaMode::horizon(static_cast<double>(horizon)),
        mix_seed(seed, 1000 + static_cast<uint64_t>(i)), 0);
    rec.lstar =
        best_policy_in_hindsight(inst.graph, adv.stream(), horizon, 0).first;
    rec.regret = rec.total_loss - rec.lstar;
    total_regret += rec.regret;
    rows.push_back({"det", horizon, adv.seed, rec.total_loss, rec.lstar,
                    rec.regret, rec.switches});
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/summary.csv", summary_csv(rows));
  }
  double mean = total_regret / trials;
  double bound =
      std::sqrt(static_cast<double>(states) * static_cast<double>(horizon) *
                std::log(static_cast<double>(actions)));
  std::cout << "mean_regret," << mean << "\n";
  std::cout << "sqrt_ST_logA," << bound << "\n";
  std::cout << "ratio," << mean / bound << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adversarial-MDP learner simulator"};
  app.require_subcommand(1);

  std::string mdp_path, config_path, out_dir, format = "csv";
  uint64_t seed = 0;
  int lb_states = 4, lb_actions = 2, lb_trials = 10;
  int64_t lb_horizon = 1 << 14;

  auto* analyze = app.add_subcommand("analyze", "print graph/MDP analysis");
  analyze->add_option("mdp", mdp_path, "MDP description JSON")->required();

  auto* run = app.add_subcommand("run", "execute one experiment config");
  run->add_option("config", config_path, "experiment config JSON")->required();
  auto* run_seed = run->add_option("--seed", seed, "override the seed list");
  run->add_option("--out", out_dir, "output directory for CSV files");
  run->add_option("--format", format, "output format (csv)");

  auto* sweep = app.add_subcommand("sweep", "horizon sweep with slope fit");
  sweep->add_option("config", config_path, "experiment config JSON")->required();
  auto* sweep_seed = sweep->add_option("--seed", seed, "override the seed list");
  sweep->add_option("--out", out_dir, "output directory for CSV files");
  sweep->add_option("--format", format, "output format (csv)");

  auto* lb = app.add_subcommand("lowerbound", "hard-instance regret check");
  lb->add_option("--states", lb_states, "cycle length")->required();
  lb->add_option("--actions", lb_actions, "actions per state")->required();
  lb->add_option("--horizon", lb_horizon, "interaction length")->required();
  lb->add_option("--trials", lb_trials, "independent loss draws")->required();
  lb->add_option("--seed", seed, "base seed");
  lb->add_option("--out", out_dir, "output directory for CSV files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (format != "csv") throw admdp::ConfigError("unsupported format: " + format);
    if (analyze->parsed()) return cmd_analyze(mdp_path);
    if (run->parsed())
      return cmd_run(config_path, out_dir, seed, run_seed->count() > 0);
    if (sweep->parsed())
      return cmd_sweep(config_path, out_dir, seed, sweep_seed->count() > 0);
    if (lb->parsed())
      return cmd_lowerbound(lb_states, lb_actions, lb_horizon, lb_trials, seed,
                            out_dir);
  } catch (const admdp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
