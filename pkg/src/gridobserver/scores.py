"""Interpretability and adversarial scores of an observed behavior prefix.

All five are read off the observer's posteriors with proportionality
constants fixed at 1:

  explicability    posterior mass on every model except the uniform one
  legibility       posterior mass on models sharing the true model's
                   parameter value (a subset of the explicability mass)
  predictability   posterior probability of the agent's intended completion
  deception        negated posterior of the true model (0 when absent)
  obfuscation      entropy of the model posterior, in nats

legacy_explicability is the older cost-distance score, kept as a comparison
oracle for the ranking-equivalence tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enumeration import DEFAULT_MAX_NODES, optimal_traces, trace_cost
from .errors import NoPlanError
from .observer import ObserverState, posterior_completions, posterior_models
from .scenario import AgentModel, GridScenario, HypothesisSet, ParameterSelector, Trace


@dataclass(frozen=True)
class ScoreReport:
    """All scores for one prefix length along a behavior."""

    prefix_length: int
    explicability: float
    legibility: float
    predictability: float
    deception: float
    obfuscation: float


def explicability(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """1 - P(uniform model | prefix): how unsurprising the behavior looks."""
    post = posterior_models(scenario, hs, prefix, max_nodes)
    return math.fsum(post[:-1])


def legibility(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    selector: ParameterSelector,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Posterior mass on explicit models whose parameter matches the target.

    A subset of the explicability mass, so never exceeds it; 0 when no
    hypothesized model carries the true parameter value.
    """
    post = posterior_models(scenario, hs, prefix, max_nodes)
    return math.fsum(
        p for model, p in zip(hs.models, post) if selector.matches(scenario, model)
    )


def predictability(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    intended: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Posterior probability that the observer predicts the intended completion."""
    post = posterior_completions(scenario, hs, prefix, max_nodes)
    return post.get(intended, 0.0)


def deception(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    true_model_id: str,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Negated posterior of the true model; 0 (maximal) when it is not hypothesized."""
    post = posterior_models(scenario, hs, prefix, max_nodes)
    for model, p in zip(hs.all_models, post):
        if model.id == true_model_id:
            return -p
    return 0.0


def obfuscation(
    scenario: GridScenario,
    hs: HypothesisSet,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """Entropy of the model posterior in nats, with 0 * ln 0 = 0."""
    post = posterior_models(scenario, hs, prefix, max_nodes)
    return -math.fsum(p * math.log(p) for p in post if p > 0.0)


def legacy_explicability(
    scenario: GridScenario,
    model: AgentModel,
    trace: Trace,
    beta: float,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> float:
    """The prior literature's cost-distance score for a full trace.

    exp(-beta * (cost(trace) - optimal cost)), unnormalized: 1 on optimal
    traces, decaying with the cost gap, binary in the beta -> inf limit.
    """
    optimal = optimal_traces(scenario, model, max_nodes)
    gap = trace_cost(model, trace) - trace_cost(model, optimal.traces[0])
    if math.isinf(beta):
        return 1.0 if gap <= 0 else 0.0
    return math.exp(-beta * gap)


def report_for_state(
    state: ObserverState,
    intended: Trace,
    selector: ParameterSelector | None = None,
    true_model_id: str | None = None,
) -> ScoreReport:
    """Assemble every score from one observer state.

    With no selector the legibility column is 0 (no parameter to reveal); with
    no true model the deception column is 0, the value for a true model
    outside the hypothesis set.
    """
    hs = state.hypothesis
    post = state.model_posterior
    expl = math.fsum(post[:-1])
    leg = 0.0
    if selector is not None:
        leg = math.fsum(
            p for model, p in zip(hs.models, post) if selector.matches(state.scenario, model)
        )
    dec = 0.0
    if true_model_id is not None:
        for model, p in zip(hs.all_models, post):
            if model.id == true_model_id:
                dec = -p
                break
    pred = state.completion_posterior.get(intended, 0.0)
    entropy = -math.fsum(p * math.log(p) for p in post if p > 0.0)
    return ScoreReport(
        prefix_length=len(state.prefix),
        explicability=expl,
        legibility=leg,
        predictability=pred,
        deception=dec,
        obfuscation=entropy,
    )
