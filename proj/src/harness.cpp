#include "admdp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "admdp/learner_det.hpp"
#include "admdp/learner_oracle.hpp"
#include "admdp/learner_stoch.hpp"
#include "admdp/policy_fpl.hpp"

namespace admdp {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Probabilities may be given as doubles or decimal strings.
double as_prob(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      size_t pos = 0;
      double x = std::stod(v.get<std::string>(), &pos);
      if (pos != v.get<std::string>().size()) throw std::invalid_argument("");
      return x;
    } catch (const std::exception&) {
      throw ConfigError(where + ": not a decimal number: " + v.dump());
    }
  }
  throw ConfigError(where + ": expected a number or decimal string");
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError(where + ": unknown field '" + it.key() + "'");
  }
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

MdpFile mdp_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("mdp: expected an object");
  reject_unknown(j,
                 {"states", "actions", "kind", "next", "kernel", "start_dist",
                  "loop_state", "loop_action"},
                 "mdp");
  for (const char* f : {"states", "actions", "kind"})
    if (!j.contains(f)) throw ConfigError(std::string("mdp: missing '") + f + "'");
  int ns = j.at("states").get<int>();
  int na = j.at("actions").get<int>();
  if (ns <= 0 || na <= 0) throw ConfigError("mdp: states/actions must be positive");
  std::string kind = j.at("kind").get<std::string>();

  MdpFile out;
  if (j.contains("start_dist")) {
    for (const auto& v : j.at("start_dist"))
      out.start_dist.push_back(as_prob(v, "mdp.start_dist"));
    if (static_cast<int>(out.start_dist.size()) != ns)
      throw ConfigError("mdp.start_dist: wrong length");
  }

  if (kind == "deterministic") {
    if (!j.contains("next")) throw ConfigError("mdp: deterministic kind needs 'next'");
    auto next = j.at("next").get<std::vector<std::vector<State>>>();
    if (static_cast<int>(next.size()) != ns)
      throw ConfigError("mdp.next: wrong number of rows");
    for (const auto& row : next)
      if (static_cast<int>(row.size()) != na)
        throw ConfigError("mdp.next: wrong row width");
    out.det = AdmdpGraph::build(std::move(next));
    if (out.start_dist.empty())
      out.start_dist.assign(ns, 1.0 / ns);
    return out;
  }
  if (kind == "stochastic") {
    if (!j.contains("kernel")) throw ConfigError("mdp: stochastic kind needs 'kernel'");
    const json& k = j.at("kernel");
    if (static_cast<int>(k.size()) != ns) throw ConfigError("mdp.kernel: wrong shape");
    std::vector<std::vector<std::vector<double>>> kernel(
        ns, std::vector<std::vector<double>>(na, std::vector<double>(ns)));
    for (int s = 0; s < ns; ++s) {
      if (static_cast<int>(k[s].size()) != na)
        throw ConfigError("mdp.kernel: wrong shape");
      for (int a = 0; a < na; ++a) {
        if (static_cast<int>(k[s][a].size()) != ns)
          throw ConfigError("mdp.kernel: wrong shape");
        for (int t = 0; t < ns; ++t)
          kernel[s][a][t] = as_prob(k[s][a][t], "mdp.kernel");
      }
    }
    if (out.start_dist.empty())
      throw ConfigError("mdp: stochastic kind needs 'start_dist'");
    std::optional<State> ls, la;
    if (j.contains("loop_state")) ls = j.at("loop_state").get<State>();
    if (j.contains("loop_action")) la = j.at("loop_action").get<Action>();
    try {
      out.stoch = StochasticMdp::build(std::move(kernel), out.start_dist, ls, la);
    } catch (const InvariantViolation& e) {
      throw ConfigError(std::string("mdp: ") + e.what());
    }
    return out;
  }
  throw ConfigError("mdp.kind: expected 'deterministic' or 'stochastic'");
}

AdversarySpec adversary_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("adversary: expected an object");
  reject_unknown(j, {"kind", "seed", "value", "punished", "table"}, "adversary");
  if (!j.contains("kind")) throw ConfigError("adversary: missing 'kind'");
  AdversarySpec spec;
  spec.kind = parse_adversary_kind(j.at("kind").get<std::string>());
  if (j.contains("seed")) spec.seed = j.at("seed").get<uint64_t>();
  if (j.contains("value")) spec.value = j.at("value").get<double>();
  if (j.contains("punished"))
    for (const auto& p : j.at("punished"))
      spec.punished.emplace_back(p.at(0).get<State>(), p.at(1).get<Action>());
  if (j.contains("table"))
    spec.table = j.at("table").get<std::vector<std::vector<double>>>();
  return spec;
}

}  // namespace

MdpFile parse_mdp_json(const std::string& text) {
  return mdp_from_json(parse_json_text(text, "mdp"));
}

MdpFile load_mdp_file(const std::string& path) {
  return parse_mdp_json(slurp(path));
}

ExperimentConfig parse_config_json(const std::string& text,
                                   const std::string& origin) {
  json j = parse_json_text(text, origin);
  if (!j.is_object()) throw ConfigError(origin + ": expected an object");
  reject_unknown(j,
                 {"schema_version", "mdp", "algorithm", "adversary",
                  "horizons", "seeds", "lambda", "alpha", "start_state"},
                 origin);
  for (const char* f :
       {"schema_version", "mdp", "algorithm", "adversary", "horizons", "seeds"})
    if (!j.contains(f))
      throw ConfigError(origin + ": missing field '" + f + "'");

  ExperimentConfig cfg;
  cfg.schema_version = j.at("schema_version").get<int>();
  if (cfg.schema_version != 1)
    throw ConfigError(origin + ": unsupported schema_version");

  if (j.at("mdp").is_string())
    cfg.mdp_path = j.at("mdp").get<std::string>();
  else
    cfg.mdp_inline = j.at("mdp").dump();

  std::string algo = j.at("algorithm").get<std::string>();
  if (algo == "det") cfg.algo = AlgoKind::Det;
  else if (algo == "stoch") cfg.algo = AlgoKind::Stoch;
  else if (algo == "oracle") cfg.algo = AlgoKind::Oracle;
  else throw ConfigError(origin + ": algorithm must be det|stoch|oracle");

  cfg.adversary = adversary_from_json(j.at("adversary"));
  cfg.horizons = j.at("horizons").get<std::vector<int64_t>>();
  cfg.seeds = j.at("seeds").get<std::vector<uint64_t>>();
  if (cfg.horizons.empty() || cfg.seeds.empty())
    throw ConfigError(origin + ": horizons and seeds must be nonempty");
  for (int64_t t : cfg.horizons)
    if (t <= 0) throw ConfigError(origin + ": horizons must be positive");

  if (j.contains("lambda")) {
    const json& lam = j.at("lambda");
    if (lam.is_string()) {
      cfg.lambda_mode = lam.get<std::string>();
      if (cfg.lambda_mode != "horizon" && cfg.lambda_mode != "doubling")
        throw ConfigError(origin + ": lambda must be 'horizon', 'doubling', or a number");
    } else if (lam.is_number()) {
      cfg.lambda_mode = "fixed";
      cfg.lambda_value = lam.get<double>();
      if (cfg.lambda_value <= 0.0)
        throw ConfigError(origin + ": fixed lambda must be positive");
    } else {
      throw ConfigError(origin + ": bad 'lambda'");
    }
  }
  if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
  if (j.contains("start_state")) cfg.start_state = j.at("start_state").get<State>();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config_json(slurp(path), path);
}

namespace {

// Exact L* baselines; NaN when enumeration is out of reach.
double lstar_det(const AdmdpGraph& g, const LossStream& stream, int64_t T,
                 State start) {
  if (g.num_states() > 8) return std::nan("");
  return best_policy_in_hindsight(g, stream, T, start).first;
}

double lstar_stoch(const StochasticMdp& mdp, const LossStream& stream,
                   int64_t T) {
  if (mdp.num_states() > 8) return std::nan("");
  std::vector<LossFunction> losses;
  losses.reserve(static_cast<size_t>(T));
  for (int64_t t = 1; t <= T; ++t) losses.push_back(stream(t));
  double best = std::nan("");
  for (const auto& pi :
       enumerate_policies(mdp.num_states(), mdp.num_actions())) {
    double v = expected_policy_loss(mdp, pi, losses).total;
    if (std::isnan(best) || v < best) best = v;
  }
  return best;
}

double stoch_lambda(const ExperimentConfig& cfg, const StochasticMdp& mdp,
                    int64_t T) {
  if (cfg.lambda_mode == "fixed") return cfg.lambda_value;
  if (cfg.lambda_mode == "doubling")
    throw ConfigError("doubling lambda applies to the det learner only");
  double n_policies =
      std::pow(static_cast<double>(mdp.num_actions()), mdp.num_states());
  return std::sqrt(std::log(n_policies) / static_cast<double>(T));
}

}  // namespace

RunRecord run_single(const ExperimentConfig& cfg, const MdpFile& mdp,
                     int64_t horizon, uint64_t seed) {
  AdversarySpec adv = cfg.adversary;
  int ns = mdp.det ? mdp.det->num_states() : mdp.stoch->num_states();
  int na = mdp.det ? mdp.det->num_actions() : mdp.stoch->num_actions();
  adv.num_states = ns;
  adv.num_actions = na;
  LossStream stream = adv.stream();

  RunRecord rec;
  switch (cfg.algo) {
    case AlgoKind::Det: {
      if (!mdp.det) throw ConfigError("det learner needs a deterministic mdp");
      LambdaMode mode = cfg.lambda_mode == "fixed"
                            ? LambdaMode::fixed(cfg.lambda_value)
                        : cfg.lambda_mode == "doubling"
                            ? LambdaMode::doubling()
                            : LambdaMode::horizon(static_cast<double>(horizon));
      rec = run_deterministic(*mdp.det, stream, horizon, mode, seed,
                              cfg.start_state);
      rec.lstar = lstar_det(*mdp.det, stream, horizon, cfg.start_state);
      break;
    }
    case AlgoKind::Stoch: {
      if (!mdp.stoch) throw ConfigError("stoch learner needs a stochastic mdp");
      rec = run_stochastic(*mdp.stoch, stream, horizon,
                           stoch_lambda(cfg, *mdp.stoch, horizon), seed);
      rec.lstar = lstar_stoch(*mdp.stoch, stream, horizon);
      break;
    }
    case AlgoKind::Oracle: {
      if (!mdp.stoch) throw ConfigError("oracle learner needs a stochastic mdp");
      double alpha = cfg.alpha;
      if (alpha <= 0.0)
        alpha = *std::min_element(mdp.stoch->start_dist().begin(),
                                  mdp.stoch->start_dist().end());
      double lambda = cfg.lambda_mode == "fixed"
                          ? cfg.lambda_value
                          : oracle_lambda(*mdp.stoch, alpha, horizon);
      rec = run_oracle(*mdp.stoch, stream, horizon, alpha, lambda, seed);
      rec.lstar = lstar_stoch(*mdp.stoch, stream, horizon);
      break;
    }
  }
  if (!std::isnan(rec.lstar)) rec.regret = rec.total_loss - rec.lstar;
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const MdpFile& mdp) {
  ExperimentResult out;
  for (int64_t T : cfg.horizons) {
    for (uint64_t seed : cfg.seeds) {
      RunRecord rec = run_single(cfg, mdp, T, seed);
      out.summary.push_back({algo_name(cfg.algo), T, seed, rec.total_loss,
                             rec.lstar, rec.regret, rec.switches});
      out.runs.push_back(std::move(rec));
    }
  }
  return out;
}

SlopeFit fit_regret_slope(const std::vector<int64_t>& horizons,
                          const std::vector<double>& mean_regrets) {
  if (horizons.size() != mean_regrets.size() || horizons.size() < 4)
    throw ConfigError("slope fit needs at least 4 horizon points");
  size_t n = horizons.size();
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = std::log(static_cast<double>(horizons[i]));
    ys[i] = std::log(std::max(mean_regrets[i], 1e-6));
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
  mx /= n; my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

namespace {
std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}
}  // namespace

std::string runs_csv(const std::vector<RunRecord>& runs) {
  std::string out = "t,state,action,loss,leader,transit,switch\n";
  for (const RunRecord& r : runs) {
    for (const StepRow& row : r.rows) {
      out += std::to_string(row.t) + ',' + std::to_string(row.state) + ',' +
             std::to_string(row.action) + ',' + fmt_double(row.loss) + ',' +
             std::to_string(row.leader) + ',' + (row.transit ? "1" : "0") +
             ',' + (row.switched ? "1" : "0") + '\n';
    }
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "algo,T,seed,total_loss,lstar,regret,switches\n";
  for (const SummaryRow& r : rows) {
    out += r.algo + ',' + std::to_string(r.horizon) + ',' +
           std::to_string(r.seed) + ',' + fmt_double(r.total_loss) + ',' +
           fmt_double(r.lstar) + ',' + fmt_double(r.regret) + ',' +
           std::to_string(r.switches) + '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

const char* algo_name(AlgoKind k) {
  switch (k) {
    case AlgoKind::Det: return "det";
    case AlgoKind::Stoch: return "stoch";
    case AlgoKind::Oracle: return "oracle";
  }
  return "?";
}

}  // namespace admdp
