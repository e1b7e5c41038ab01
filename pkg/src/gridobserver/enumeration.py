"""Exhaustive enumeration of feasible behaviors, completions, and costs.

Every probability downstream is an exact ratio over these finite sets, so
enumeration is plain depth-first search with a hard node budget: results are
never silently truncated. Children are expanded in a fixed direction order,
which makes every returned sequence sorted lexicographically by action-letter
string and therefore reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ExplosionError, NoPlanError
from .scenario import AgentModel, Coord, GridScenario, Trace, validate_trace

DEFAULT_MAX_NODES = 10_000_000


@dataclass(frozen=True)
class BehaviorSet:
    """A finite, duplicate-free, deterministically ordered set of traces."""

    traces: tuple[Trace, ...]
    provenance: str  # "goal:<model_id>" or "maximal"
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.traces))
        if len(self._members) != len(self.traces):
            raise ValueError("behavior set contains duplicate traces")

    def __contains__(self, trace: Trace) -> bool:
        return trace in self._members

    def __iter__(self):
        return iter(self.traces)

    def __len__(self) -> int:
        return len(self.traces)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, max_nodes: int):
        self.left = max_nodes

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise ExplosionError("enumeration exceeded its node budget")


def _walk(scenario: GridScenario, budget: _Budget, visit) -> None:
    """Iterative depth-first walk over all valid traces from the start.

    `visit(states, actions, moves)` sees every node once, in preorder, with
    the current path and its legal extensions; returning False prunes the
    subtree below it. An explicit stack is used so a runaway walk hits the
    node budget instead of the interpreter recursion limit.
    """
    start = scenario.start
    states: list[Coord] = [start]
    actions: list[str] = []
    visited = {start}
    budget.spend()
    moves = scenario.legal_moves(start, visited)
    if not visit(states, actions, moves):
        return
    stack = [iter(moves)]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if stack:
                last = states.pop()
                actions.pop()
                if scenario.no_revisit:
                    visited.discard(last)
            continue
        direction, target = step
        states.append(target)
        actions.append(direction)
        if scenario.no_revisit:
            visited.add(target)
        budget.spend()
        moves = scenario.legal_moves(target, visited)
        if visit(states, actions, moves):
            stack.append(iter(moves))
        else:
            states.pop()
            actions.pop()
            if scenario.no_revisit:
                visited.discard(target)


@lru_cache(maxsize=4096)
def _goal_traces(scenario: GridScenario, goal: Coord, max_nodes: int) -> tuple[Trace, ...]:
    out: list[Trace] = []

    def visit(states, actions, moves):
        if states[-1] == goal:
            out.append(Trace(states=tuple(states), actions=tuple(actions)))
            if scenario.no_revisit:
                # The walk can never return to the goal, so prune here.
                return False
        return True

    _walk(scenario, _Budget(max_nodes), visit)
    return tuple(out)


@lru_cache(maxsize=4096)
def _maximal_traces(scenario: GridScenario, max_nodes: int) -> tuple[Trace, ...]:
    out: list[Trace] = []

    def visit(states, actions, moves):
        if not moves:
            out.append(Trace(states=tuple(states), actions=tuple(actions)))
        return True

    _walk(scenario, _Budget(max_nodes), visit)
    return tuple(out)


def enumerate_goal_traces(
    scenario: GridScenario, model: AgentModel, max_nodes: int = DEFAULT_MAX_NODES
) -> BehaviorSet:
    """All valid traces from the start that terminate on the model's goal cell.

    An unreachable goal yields an empty set, not an error.
    """
    goal = scenario.resolve_goal(model.goal)
    return BehaviorSet(traces=_goal_traces(scenario, goal, max_nodes), provenance=f"goal:{model.id}")


def enumerate_maximal_traces(
    scenario: GridScenario, max_nodes: int = DEFAULT_MAX_NODES
) -> BehaviorSet:
    """All valid traces from the start with no legal extension.

    This is the behavior universe of the goalless uniform model: everything a
    random-but-rule-abiding agent could do until it gets stuck.
    """
    return BehaviorSet(traces=_maximal_traces(scenario, max_nodes), provenance="maximal")


def behavior_universe(
    scenario: GridScenario, model: AgentModel, max_nodes: int = DEFAULT_MAX_NODES
) -> BehaviorSet:
    """The set of complete behaviors the model can exhibit."""
    if model.goal is None:
        return enumerate_maximal_traces(scenario, max_nodes)
    return enumerate_goal_traces(scenario, model, max_nodes)


def completions(
    scenario: GridScenario,
    model: AgentModel,
    prefix: Trace,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> BehaviorSet:
    """Suffixes that extend the prefix into a member of the model's universe.

    Includes the empty suffix when the prefix is itself a complete behavior;
    empty when the prefix is compatible with nothing.
    """
    universe = behavior_universe(scenario, model, max_nodes)
    k = len(prefix)
    suffixes = tuple(t.suffix(k) for t in universe if t.extends(prefix))
    return BehaviorSet(traces=suffixes, provenance=universe.provenance)


def trace_cost(model: AgentModel, trace: Trace) -> float:
    """Uniform per-step cost: additive over concatenation by construction."""
    return model.step_cost * len(trace.actions)


def optimal_traces(
    scenario: GridScenario, model: AgentModel, max_nodes: int = DEFAULT_MAX_NODES
) -> BehaviorSet:
    """The minimal-cost subset of the model's goal-reaching traces."""
    universe = enumerate_goal_traces(scenario, model, max_nodes)
    if not len(universe):
        raise NoPlanError(f"goal of model {model.id!r} is unreachable")
    best = min(len(t.actions) for t in universe)
    subset = tuple(t for t in universe if len(t.actions) == best)
    return BehaviorSet(traces=subset, provenance=universe.provenance)


def assert_all_valid(scenario: GridScenario, behavior_set: BehaviorSet) -> None:
    """Debug helper: every enumerated trace must pass validate_trace."""
    for trace in behavior_set:
        if not validate_trace(scenario, trace):
            raise AssertionError(f"enumerated invalid trace {trace.action_string!r}")
