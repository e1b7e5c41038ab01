"""Trace and prefix likelihoods under a hypothesized agent model.

Three regimes share one normalization scheme over the model's finite behavior
universe:

  normative (beta = inf)  uniform over the optimal traces, zero elsewhere
  boltzmann (0 < beta)    weight exp(-beta * cost), normalized
  uniform   (beta = 0)    equal weight on every universe member

Boltzmann weights are computed as exp(-beta * (cost - min_cost)): shifting by
the optimal cost cancels under normalization and keeps the largest weight at
1.0, so large beta cannot overflow and far-from-optimal traces underflow
harmlessly to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .enumeration import (
    DEFAULT_MAX_NODES,
    behavior_universe,
    optimal_traces,
    trace_cost,
)
from .errors import EmptyUniverseError
from .scenario import AgentModel, GridScenario, Trace, concat


@dataclass(frozen=True)
class LikelihoodTable:
    """Full-behavior probabilities for one model; entries sum to 1."""

    model_id: str
    entries: dict  # Trace -> probability

    def __getitem__(self, trace: Trace) -> float:
        return self.entries.get(trace, 0.0)


@lru_cache(maxsize=4096)
def _weights(scenario: GridScenario, model: AgentModel, max_nodes: int):
    """Unnormalized weight per universe trace, plus the normalizer.

    For the normative regime weights are optimal-set indicators; otherwise
    min-cost-shifted Boltzmann factors (beta = 0 degenerates to all-ones).
    """
    universe = behavior_universe(scenario, model, max_nodes)
    if not len(universe):
        raise EmptyUniverseError(f"model {model.id!r} admits no behavior")
    if model.likelihood_kind == "normative":
        optimal = optimal_traces(scenario, model, max_nodes)
        weights = {t: (1.0 if t in optimal else 0.0) for t in universe}
    else:
        min_cost = min(trace_cost(model, t) for t in universe)
        weights = {
            t: math.exp(-model.beta * (trace_cost(model, t) - min_cost)) for t in universe
        }
    total = math.fsum(weights.values())
    return weights, total


def likelihood_full(
    scenario: GridScenario,
    model: AgentModel,
    trace: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Probability the model generates exactly this complete behavior.

    Traces outside the model's universe get probability 0; an empty universe
    raises EmptyUniverseError because no distribution exists at all.
    """
    weights, total = _weights(scenario, model, max_nodes)
    weight = weights.get(trace)
    if weight is None:
        return 0.0
    return weight / total


@lru_cache(maxsize=65536)
def likelihood_prefix(
    scenario: GridScenario,
    model: AgentModel,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Probability mass of all complete behaviors extending the prefix.

    Marginalizes the full-trace likelihood over every completion; equals
    likelihood_full when the prefix is itself a complete behavior, and 0 when
    nothing extends it.
    """
    weights, total = _weights(scenario, model, max_nodes)
    matched = math.fsum(w for t, w in weights.items() if t.extends(prefix))
    return matched / total


def likelihood_table(
    scenario: GridScenario, model: AgentModel, max_nodes: int = DEFAULT_MAX_NODES
) -> LikelihoodTable:
    """The model's whole distribution over its behavior universe."""
    weights, total = _weights(scenario, model, max_nodes)
    return LikelihoodTable(
        model_id=model.id, entries={t: w / total for t, w in weights.items()}
    )


def likelihood_of_completion(
    scenario: GridScenario,
    model: AgentModel,
    prefix: Trace,
    suffix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """P(full behavior = prefix + suffix) under the model."""
    return likelihood_full(scenario, model, concat(prefix, suffix), max_nodes)
