"""The Bayesian observer: posteriors over models and over completions.

Watching a behavior prefix, the observer updates two beliefs at once: which
hypothesized model is driving the agent, and how the behavior will continue.
Both are exact Bayes over the enumerated behavior universes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .enumeration import DEFAULT_MAX_NODES, completions
from .errors import InvalidActionError, ZeroEvidenceError
from .likelihood import likelihood_full, likelihood_prefix
from .scenario import GridScenario, HypothesisSet, Trace, concat


@lru_cache(maxsize=65536)
def posterior_models(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> tuple[float, ...]:
    """P(model | prefix) for every hypothesis, aligned with hs.all_models.

    Bayes over prefix likelihoods: evidence(M) = P(prefix | M) * prior(M),
    normalized. All-zero evidence means the prefix is physically impossible
    (the uniform model covers every feasible prefix) and raises
    ZeroEvidenceError.
    """
    evidence = [
        likelihood_prefix(scenario, model, prefix, max_nodes) * prior
        for model, prior in zip(hs.all_models, hs.priors)
    ]
    total = math.fsum(evidence)
    if total <= 0.0:
        raise ZeroEvidenceError("prefix has zero probability under every hypothesis")
    return tuple(e / total for e in evidence)


@lru_cache(maxsize=65536)
def _completion_posterior_items(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    max_nodes: int,
) -> tuple[tuple[Trace, float], ...]:
    model_post = posterior_models(scenario, hs, prefix, max_nodes)
    out: dict[Trace, float] = {}
    for model, post in zip(hs.all_models, model_post):
        if post == 0.0:
            continue
        denom = likelihood_prefix(scenario, model, prefix, max_nodes)
        if denom == 0.0:
            continue
        for suffix in completions(scenario, model, prefix, max_nodes):
            full = likelihood_full(scenario, model, concat(prefix, suffix), max_nodes)
            if full == 0.0:
                continue
            out[suffix] = out.get(suffix, 0.0) + post * full / denom
    return tuple(out.items())


def posterior_completions(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> dict[Trace, float]:
    """P(completion | prefix), marginalized over the model posterior.

    For each model, a completion's conditional probability is its full-trace
    likelihood renormalized by the prefix likelihood; models that cannot
    produce the prefix contribute nothing.
    """
    return dict(_completion_posterior_items(scenario, hs, prefix, max_nodes))


@dataclass(frozen=True)
class ObserverState:
    """Both posteriors, pinned to the scenario and prefix they were computed from."""

    scenario: GridScenario
    hypothesis: HypothesisSet
    prefix: Trace
    model_posterior: tuple[float, ...]
    completion_posterior: dict  # Trace suffix -> probability

    @classmethod
    def observe(
        cls,
        scenario: GridScenario,
        hs: HypothesisSet,
        prefix: Trace,
        max_nodes: int = DEFAULT_MAX_NODES,
    ) -> "ObserverState":
        return cls(
            scenario=scenario,
            hypothesis=hs,
            prefix=prefix,
            model_posterior=posterior_models(scenario, hs, prefix, max_nodes),
            completion_posterior=posterior_completions(scenario, hs, prefix, max_nodes),
        )

    def posterior_of(self, model_id: str) -> float:
        for model, post in zip(self.hypothesis.all_models, self.model_posterior):
            if model.id == model_id:
                return post
        raise KeyError(model_id)


def update(state: ObserverState, action: str, max_nodes: int = DEFAULT_MAX_NODES) -> ObserverState:
    """Observe one more action; equivalent to recomputing on the longer prefix."""
    scenario = state.scenario
    prefix = state.prefix
    visited = set(prefix.states) if scenario.no_revisit else frozenset()
    target = scenario.step_target(prefix.terminal, action, visited)
    if target is None:
        raise InvalidActionError(f"cannot move {action!r} from {prefix.terminal}")
    extended = Trace(states=prefix.states + (target,), actions=prefix.actions + (action,))
    return ObserverState.observe(scenario, state.hypothesis, extended, max_nodes)
