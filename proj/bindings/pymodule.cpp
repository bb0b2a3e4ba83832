#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "admdp/adversary.hpp"
#include "admdp/graph.hpp"
#include "admdp/harness.hpp"
#include "admdp/stochastic.hpp"

namespace py = pybind11;
using namespace admdp;

namespace {

std::vector<LossFunction> to_losses(
    const std::vector<std::vector<std::vector<double>>>& tables) {
  std::vector<LossFunction> out;
  for (const auto& t : tables) {
    int ns = static_cast<int>(t.size());
    int na = ns ? static_cast<int>(t[0].size()) : 0;
    LossFunction f(ns, na);
    for (int s = 0; s < ns; ++s) {
      if (static_cast<int>(t[s].size()) != na)
        throw ConfigError("ragged loss table");
      for (int a = 0; a < na; ++a) f.at(s, a) = t[s][a];
    }
    f.validate();
    out.push_back(std::move(f));
  }
  return out;
}

py::dict plan_dict(const CatchingPlan& plan) {
  py::dict d;
  d["ell_star"] = plan.ell_star;
  d["p_star"] = plan.p_star;
  py::list targets;
  for (const auto& tp : plan.per_target) {
    py::dict t;
    t["wait"] = tp.wait;
    t["go"] = tp.ell_target;
    t["p_hit"] = tp.p_hit;
    t["goto_policy"] = tp.goto_policy.action;
    targets.append(t);
  }
  d["per_target"] = targets;
  return d;
}

}  // namespace

PYBIND11_MODULE(_admdp, m) {
  m.doc() = "online learning in adversarial MDPs: graph analysis, catching "
            "plans, and the experiment harness";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<NotStronglyConnected>(m, "NotStronglyConnected");
  py::register_exception<NotCommunicating>(m, "NotCommunicating");

  py::class_<AdmdpGraph>(m, "Graph")
      .def(py::init([](std::vector<std::vector<State>> next) {
             return AdmdpGraph::build(std::move(next));
           }),
           py::arg("next"))
      .def_property_readonly("num_states", &AdmdpGraph::num_states)
      .def_property_readonly("num_actions", &AdmdpGraph::num_actions)
      .def_property_readonly("period", &AdmdpGraph::period)
      .def_property_readonly("critical_length", &AdmdpGraph::critical_length)
      .def("cycle_class", &AdmdpGraph::cycle_class, py::arg("state"))
      .def("next", &AdmdpGraph::next, py::arg("state"), py::arg("action"))
      .def("path_of_length", &AdmdpGraph::path_of_length, py::arg("from_state"),
           py::arg("to_state"), py::arg("length"));

  py::class_<StochasticMdp>(m, "Mdp")
      .def(py::init([](std::vector<std::vector<std::vector<double>>> kernel,
                       std::vector<double> start_dist,
                       std::optional<State> loop_state,
                       std::optional<Action> loop_action) {
             return StochasticMdp::build(std::move(kernel),
                                         std::move(start_dist), loop_state,
                                         loop_action);
           }),
           py::arg("kernel"), py::arg("start_dist"),
           py::arg("loop_state") = std::nullopt,
           py::arg("loop_action") = std::nullopt)
      .def_property_readonly("num_states", &StochasticMdp::num_states)
      .def_property_readonly("num_actions", &StochasticMdp::num_actions)
      .def_property_readonly("diameter", &StochasticMdp::diameter)
      .def("hitting_time_pmf",
           [](const StochasticMdp& mdp, std::vector<Action> policy, State from,
              State to, int max_len) {
             return hitting_time_pmf(mdp, DeterministicPolicy(std::move(policy)),
                                     from, to, max_len);
           },
           py::arg("policy"), py::arg("from_state"), py::arg("to_state"),
           py::arg("max_len"))
      .def("state_distribution",
           [](const StochasticMdp& mdp, std::vector<Action> policy, int64_t t) {
             return policy_state_distribution(
                 mdp, DeterministicPolicy(std::move(policy)), t);
           },
           py::arg("policy"), py::arg("t"))
      .def("expected_policy_loss",
           [](const StochasticMdp& mdp, std::vector<Action> policy,
              std::vector<std::vector<std::vector<double>>> losses) {
             auto pl = expected_policy_loss(
                 mdp, DeterministicPolicy(std::move(policy)),
                 to_losses(losses));
             return py::make_tuple(pl.total, pl.per_step);
           },
           py::arg("policy"), py::arg("losses"))
      .def("catching_plan", [](const StochasticMdp& mdp) {
        return plan_dict(build_catching_plan(mdp));
      });

  m.def("run_experiment",
        [](const std::string& config_json) {
          auto cfg = parse_config_json(config_json, "config");
          MdpFile mdp = cfg.mdp_path.empty() ? parse_mdp_json(cfg.mdp_inline)
                                             : load_mdp_file(cfg.mdp_path);
          auto res = run_experiment(cfg, mdp);
          return py::make_tuple(runs_csv(res.runs), summary_csv(res.summary));
        },
        py::arg("config_json"),
        "Execute an experiment config (JSON text); returns (runs_csv, "
        "summary_csv).");

  m.def("fit_regret_slope",
        [](std::vector<int64_t> horizons, std::vector<double> mean_regrets) {
          auto f = fit_regret_slope(horizons, mean_regrets);
          return py::make_tuple(f.slope, f.intercept, f.r2);
        },
        py::arg("horizons"), py::arg("mean_regrets"));

  m.def("lower_bound_next",
        [](int states, int actions) {
          auto inst = gen_lower_bound_instance(states, actions, 0);
          std::vector<std::vector<State>> next(states,
                                               std::vector<State>(actions));
          for (State s = 0; s < states; ++s)
            for (Action a = 0; a < actions; ++a)
              next[s][a] = inst.graph.next(s, a);
          return next;
        },
        py::arg("states"), py::arg("actions"),
        "Transition table of the hard cycle instance.");
}
