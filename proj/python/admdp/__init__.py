"""Online learning in adversarial MDPs with known dynamics.

Thin wrapper over the native module: graph/period analysis, catching plans
for communicating MDPs, and the experiment harness.
"""

from _admdp import (
    ConfigError,
    Graph,
    Mdp,
    NotCommunicating,
    NotStronglyConnected,
    fit_regret_slope,
    lower_bound_next,
    run_experiment,
)

__all__ = [
    "ConfigError",
    "Graph",
    "Mdp",
    "NotCommunicating",
    "NotStronglyConnected",
    "fit_regret_slope",
    "lower_bound_next",
    "run_experiment",
]
