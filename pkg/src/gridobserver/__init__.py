"""Bayesian observer model for scoring and planning interpretable grid-world behavior."""

from .enumeration import (
    BehaviorSet,
    behavior_universe,
    completions,
    enumerate_goal_traces,
    enumerate_maximal_traces,
    optimal_traces,
    trace_cost,
)
from .errors import (
    EmptyUniverseError,
    ExplosionError,
    FixtureError,
    GridWorldError,
    InvalidActionError,
    InvariantError,
    JunctionError,
    NoPlanError,
    ParseError,
    ZeroEvidenceError,
)
from .likelihood import LikelihoodTable, likelihood_full, likelihood_prefix, likelihood_table
from .observer import ObserverState, posterior_completions, posterior_models, update
from .planner import Objective, objective_value, plan
from .scenario import (
    AgentModel,
    Cell,
    GridScenario,
    HypothesisSet,
    ParameterSelector,
    Prefix,
    Trace,
    concat,
    make_m0,
    validate_trace,
)
from .scenario_io import load_scenario_file, parse_scenario, serialize_scenario
from .scores import (
    ScoreReport,
    deception,
    explicability,
    legacy_explicability,
    legibility,
    obfuscation,
    predictability,
    report_for_state,
)

__all__ = [
    "AgentModel",
    "BehaviorSet",
    "Cell",
    "EmptyUniverseError",
    "ExplosionError",
    "FixtureError",
    "GridScenario",
    "GridWorldError",
    "HypothesisSet",
    "InvalidActionError",
    "InvariantError",
    "JunctionError",
    "LikelihoodTable",
    "NoPlanError",
    "Objective",
    "ObserverState",
    "ParameterSelector",
    "ParseError",
    "Prefix",
    "ScoreReport",
    "Trace",
    "ZeroEvidenceError",
    "behavior_universe",
    "completions",
    "concat",
    "deception",
    "enumerate_goal_traces",
    "enumerate_maximal_traces",
    "explicability",
    "legacy_explicability",
    "legibility",
    "likelihood_full",
    "likelihood_prefix",
    "likelihood_table",
    "load_scenario_file",
    "make_m0",
    "objective_value",
    "obfuscation",
    "optimal_traces",
    "parse_scenario",
    "plan",
    "posterior_completions",
    "posterior_models",
    "predictability",
    "report_for_state",
    "serialize_scenario",
    "trace_cost",
    "update",
    "validate_trace",
]
