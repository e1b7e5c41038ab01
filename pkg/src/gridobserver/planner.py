"""Behavior selection by exhaustive scoring of candidate traces.

The planner enumerates the true model's complete behaviors, scores each
candidate under a weighted objective, and returns the argmax. No heuristics:
at desk scale, exact evaluation of every candidate is the correctness
baseline, and ties break on the lexicographic action string so results are
reproducible.

Predictability is circular for a prefix (it needs the plan the agent will
actually follow), so each candidate is scored against itself: at every prefix
the intended completion is the candidate's own remaining suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum

from .enumeration import DEFAULT_MAX_NODES, enumerate_goal_traces, optimal_traces
from .errors import InvariantError, NoPlanError
from .observer import ObserverState
from .scenario import AgentModel, GridScenario, HypothesisSet, ParameterSelector, Trace
from .scores import ScoreReport, report_for_state

SCORE_NAMES = ("explicability", "legibility", "predictability", "deception", "obfuscation")
AGGREGATIONS = ("final_prefix", "mean_over_prefixes")


@dataclass(frozen=True)
class Objective:
    """Weighted combination of scores, plus how to aggregate along a behavior.

    final_prefix scores the completed behavior once; mean_over_prefixes
    averages over every proper prefix (lengths 0..n-1), the online view.
    optimal_only restricts candidates to the true model's optimal set — the
    "lies by omission" mode that stays optimal while picking the friendliest
    optimum.
    """

    weights: tuple[tuple[str, float], ...]
    selector: ParameterSelector | None = None
    aggregation: str = "final_prefix"
    optimal_only: bool = False

    def __post_init__(self):
        if isinstance(self.weights, dict):
            object.__setattr__(self, "weights", tuple(sorted(self.weights.items())))
        for name, _ in self.weights:
            if name not in SCORE_NAMES:
                raise InvariantError(f"unknown score {name!r} in objective")
        if not any(w != 0 for _, w in self.weights):
            raise InvariantError("objective needs at least one non-zero weight")
        if self.aggregation not in AGGREGATIONS:
            raise InvariantError(f"unknown aggregation {self.aggregation!r}")
        if self.weight("legibility") != 0 and self.selector is None:
            raise InvariantError("legibility weight requires a parameter selector")

    def weight(self, name: str) -> float:
        for key, value in self.weights:
            if key == name:
                return value
        return 0.0


def _combined(report: ScoreReport, objective: Objective) -> float:
    return fsum(w * getattr(report, name) for name, w in objective.weights if w != 0)


def _candidate_reports(scenario, hs, candidate, objective, true_model_id, max_nodes):
    """Score reports for each prefix of the candidate, 0..len inclusive."""
    reports = []
    for k in range(len(candidate) + 1):
        state = ObserverState.observe(scenario, hs, candidate.prefix(k), max_nodes)
        reports.append(
            report_for_state(
                state,
                intended=candidate.suffix(k),
                selector=objective.selector,
                true_model_id=true_model_id,
            )
        )
    return tuple(reports)


def objective_value(reports, objective: Objective) -> float:
    """Aggregate a candidate's per-prefix reports into one number."""
    if objective.aggregation == "final_prefix":
        return _combined(reports[-1], objective)
    proper = reports[:-1] if len(reports) > 1 else reports
    return fsum(_combined(r, objective) for r in proper) / len(proper)


def plan(
    scenario: GridScenario,
    hs: HypothesisSet,
    true_model: AgentModel,
    objective: Objective,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> tuple[Trace, tuple[ScoreReport, ...]]:
    """Pick the true model's behavior maximizing the objective.

    Returns the chosen trace with its per-prefix score trajectory. Raises
    NoPlanError when the true model's goal is unreachable.
    """
    if objective.optimal_only:
        candidates = optimal_traces(scenario, true_model, max_nodes)
    else:
        candidates = enumerate_goal_traces(scenario, true_model, max_nodes)
        if not len(candidates):
            raise NoPlanError(f"goal of model {true_model.id!r} is unreachable")

    best = None
    # Candidates arrive in lexicographic action-string order, so keeping the
    # strictly-better candidate implements the tie-break for free.
    for candidate in candidates:
        reports = _candidate_reports(
            scenario, hs, candidate, objective, true_model.id, max_nodes
        )
        value = objective_value(reports, objective)
        if best is None or value > best[0]:
            best = (value, candidate, reports)
    return best[1], best[2]
