"""Grid worlds, agent models, hypothesis sets, and behavior traces.

Coordinates are (col, row) with row 0 at the top, so "down" increments the
row. A behavior trace is a sequence of unit moves between cells; the grid's
movement rules (allowed directions, walls, one-way cells, the no-revisit
flag) decide which traces are physically valid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvariantError, JunctionError

Coord = tuple[int, int]

DIRECTIONS = ("up", "down", "left", "right")
DELTA: dict[str, Coord] = {
    "up": (0, -1),
    "down": (0, 1),
    "left": (-1, 0),
    "right": (1, 0),
}
LETTER = {"up": "U", "down": "D", "left": "L", "right": "R"}
DIRECTION_OF_LETTER = {v: k for k, v in LETTER.items()}
# Children are expanded in this order so that enumeration output is already
# sorted lexicographically by action-letter string (D < L < R < U).
EXPANSION_ORDER = ("down", "left", "right", "up")

_DIR_GLYPH = {"up": "^", "down": "v", "left": "<", "right": ">"}
_GLYPH_DIR = {v: k for k, v in _DIR_GLYPH.items()}


@dataclass(frozen=True)
class Cell:
    """One grid cell: free, wall, one-way (directional), or a labeled object."""

    kind: str
    direction: str | None = None
    label: str | None = None

    def __post_init__(self):
        if self.kind not in ("free", "wall", "directional", "object"):
            raise InvariantError(f"unknown cell kind {self.kind!r}")
        if self.kind == "directional" and self.direction not in DIRECTIONS:
            raise InvariantError(f"directional cell needs a direction, got {self.direction!r}")
        if self.kind == "object" and not (
            isinstance(self.label, str) and len(self.label) == 1 and self.label.isupper()
        ):
            raise InvariantError(f"object label must be a single uppercase letter, got {self.label!r}")

    @staticmethod
    def from_glyph(ch: str) -> "Cell":
        if ch == ".":
            return Cell("free")
        if ch == "#":
            return Cell("wall")
        if ch in _GLYPH_DIR:
            return Cell("directional", direction=_GLYPH_DIR[ch])
        if len(ch) == 1 and ch.isupper():
            return Cell("object", label=ch)
        raise InvariantError(f"unknown cell glyph {ch!r}")

    def to_glyph(self) -> str:
        if self.kind == "free":
            return "."
        if self.kind == "wall":
            return "#"
        if self.kind == "directional":
            return _DIR_GLYPH[self.direction]
        return self.label


@dataclass(frozen=True)
class GridScenario:
    """The physical world: cell layout, start position, movement rules."""

    width: int
    height: int
    cells: tuple[tuple[Cell, ...], ...]  # indexed [row][col]
    start: Coord
    allowed_moves: frozenset[str]
    no_revisit: bool
    objects: dict[str, Coord] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InvariantError("grid dimensions must be positive")
        if len(self.cells) != self.height or any(len(row) != self.width for row in self.cells):
            raise InvariantError("cell array shape does not match width x height")
        moves = frozenset(self.allowed_moves)
        if not moves:
            raise InvariantError("allowed_moves must be non-empty")
        if not moves <= set(DIRECTIONS):
            raise InvariantError(f"unknown direction in allowed_moves: {sorted(moves)}")
        object.__setattr__(self, "allowed_moves", moves)
        objects: dict[str, Coord] = {}
        for row in range(self.height):
            for col in range(self.width):
                cell = self.cells[row][col]
                if cell.kind == "object":
                    if cell.label in objects:
                        raise InvariantError(f"duplicate object label {cell.label!r}")
                    objects[cell.label] = (col, row)
        object.__setattr__(self, "objects", objects)
        if not self.in_bounds(self.start):
            raise InvariantError(f"start {self.start} out of bounds")
        if self.cell(self.start).kind == "wall":
            raise InvariantError(f"start {self.start} is a wall")

    def in_bounds(self, pos: Coord) -> bool:
        col, row = pos
        return 0 <= col < self.width and 0 <= row < self.height

    def cell(self, pos: Coord) -> Cell:
        return self.cells[pos[1]][pos[0]]

    def is_passable(self, pos: Coord) -> bool:
        return self.in_bounds(pos) and self.cell(pos).kind != "wall"

    def resolve_goal(self, goal: str | Coord) -> Coord:
        """Map a goal (object label or coordinate) to its object-cell coordinate."""
        if isinstance(goal, str):
            if goal not in self.objects:
                raise InvariantError(f"no object labeled {goal!r} in scenario")
            return self.objects[goal]
        pos = (int(goal[0]), int(goal[1]))
        if not self.in_bounds(pos) or self.cell(pos).kind != "object":
            raise InvariantError(f"goal coordinate {pos} is not an object cell")
        return pos

    def step_target(self, pos: Coord, direction: str, visited) -> Coord | None:
        """Target of moving `direction` from `pos`, or None if the move is illegal.

        `visited` is the set of states already on the trace (only consulted
        when no_revisit is set). One-way cells may only be exited in their
        arrow direction.
        """
        if direction not in self.allowed_moves:
            return None
        here = self.cell(pos)
        if here.kind == "directional" and direction != here.direction:
            return None
        d = DELTA[direction]
        target = (pos[0] + d[0], pos[1] + d[1])
        if not self.is_passable(target):
            return None
        if self.no_revisit and target in visited:
            return None
        return target

    def legal_moves(self, pos: Coord, visited) -> list[tuple[str, Coord]]:
        """Legal (direction, target) pairs from `pos`, in deterministic order."""
        out = []
        for direction in EXPANSION_ORDER:
            target = self.step_target(pos, direction, visited)
            if target is not None:
                out.append((direction, target))
        return out


@dataclass(frozen=True)
class Trace:
    """A behavior: states visited plus the actions between them.

    `states` has one more entry than `actions`; state i+1 is state i displaced
    by action i. The same structure serves as a full behavior, an observed
    prefix, or a completion suffix.
    """

    states: tuple[Coord, ...]
    actions: tuple[str, ...]

    def __post_init__(self):
        if len(self.states) != len(self.actions) + 1:
            raise InvariantError("trace needs exactly one more state than actions")
        for i, action in enumerate(self.actions):
            if action not in DIRECTIONS:
                raise InvariantError(f"unknown action {action!r}")
            d = DELTA[action]
            expect = (self.states[i][0] + d[0], self.states[i][1] + d[1])
            if self.states[i + 1] != expect:
                raise InvariantError(
                    f"state {self.states[i + 1]} does not follow {self.states[i]} via {action}"
                )

    @classmethod
    def empty(cls, start: Coord) -> "Trace":
        return cls(states=(start,), actions=())

    @classmethod
    def from_actions(cls, start: Coord, actions) -> "Trace":
        """Build a trace from a start state and directions or action letters."""
        if isinstance(actions, str):
            try:
                actions = [DIRECTION_OF_LETTER[ch] for ch in actions]
            except KeyError as exc:
                raise InvariantError(f"unknown action letter {exc.args[0]!r}") from None
        states = [start]
        for action in actions:
            d = DELTA[action]
            states.append((states[-1][0] + d[0], states[-1][1] + d[1]))
        return cls(states=tuple(states), actions=tuple(actions))

    @property
    def start(self) -> Coord:
        return self.states[0]

    @property
    def terminal(self) -> Coord:
        return self.states[-1]

    @property
    def action_string(self) -> str:
        return "".join(LETTER[a] for a in self.actions)

    @property
    def steps(self) -> tuple[tuple[Coord, str], ...]:
        return tuple(zip(self.states[:-1], self.actions))

    def __len__(self) -> int:
        return len(self.actions)

    def prefix(self, k: int) -> "Trace":
        """The first k actions as a prefix."""
        return Trace(states=self.states[: k + 1], actions=self.actions[:k])

    def suffix(self, k: int) -> "Trace":
        """The remainder after the first k actions; starts at states[k]."""
        return Trace(states=self.states[k:], actions=self.actions[k:])

    def extends(self, prefix: "Trace") -> bool:
        k = len(prefix)
        return (
            len(self) >= k
            and self.states[: k + 1] == prefix.states
            and self.actions[:k] == prefix.actions
        )


# A prefix is structurally a trace that merely stops short of a goal.
Prefix = Trace


def validate_trace(scenario: GridScenario, trace: Trace) -> bool:
    """True iff the trace obeys every physical rule of the scenario.

    Checks bounds, walls, allowed directions, one-way cell exits, and (when
    the scenario forbids revisits) pairwise-distinct states. Displacement
    consistency is already guaranteed by the Trace constructor.
    """
    for pos in trace.states:
        if not scenario.is_passable(pos):
            return False
    for i, action in enumerate(trace.actions):
        if action not in scenario.allowed_moves:
            return False
        here = scenario.cell(trace.states[i])
        if here.kind == "directional" and action != here.direction:
            return False
    if scenario.no_revisit and len(set(trace.states)) != len(trace.states):
        return False
    return True


def concat(prefix: Trace, completion: Trace) -> Trace:
    """Join a prefix and a completion that share their junction state.

    Scenario-level legality (walls, revisits across the junction) is the
    caller's concern via validate_trace; displacement consistency is rechecked
    by the Trace constructor.
    """
    if completion.start != prefix.terminal:
        raise JunctionError(
            f"completion starts at {completion.start}, prefix ends at {prefix.terminal}"
        )
    return Trace(
        states=prefix.states + completion.states[1:],
        actions=prefix.actions + completion.actions,
    )


@dataclass(frozen=True)
class AgentModel:
    """One hypothesis about the agent: a goal, a cost scale, and a rationality beta.

    beta = inf is the normative regime (uniform over optimal plans), beta = 0
    the uniform regime, anything between a noisy-rational Boltzmann observer.
    The goal may be an object label, a coordinate, or None for the special
    goalless high-entropy model.
    """

    id: str
    goal: str | Coord | None
    beta: float = math.inf
    step_cost: float = 1.0
    likelihood_kind: str = ""

    def __post_init__(self):
        if isinstance(self.goal, list):
            object.__setattr__(self, "goal", tuple(self.goal))
        beta = float(self.beta)
        object.__setattr__(self, "beta", beta)
        if beta < 0 or math.isnan(beta):
            raise InvariantError(f"beta must be non-negative or inf, got {beta}")
        if self.step_cost <= 0:
            raise InvariantError(f"step_cost must be positive, got {self.step_cost}")
        if math.isinf(beta):
            kind = "normative"
        elif beta == 0:
            kind = "uniform"
        else:
            kind = "boltzmann"
        if self.likelihood_kind and self.likelihood_kind != kind:
            raise InvariantError(
                f"likelihood_kind {self.likelihood_kind!r} inconsistent with beta={beta}"
            )
        object.__setattr__(self, "likelihood_kind", kind)


def make_m0(id: str = "m0") -> AgentModel:
    """The goalless uniform model covering 'I may be wrong about the agent'."""
    return AgentModel(id=id, goal=None, beta=0.0)


@dataclass(frozen=True)
class HypothesisSet:
    """Explicit agent models plus the goalless uniform model and their priors.

    `priors` aligns with models followed by m0 as the final entry. The uniform
    model's prior must be positive: setting it to zero reproduces the legacy
    goal-only regime and is only allowed via allow_zero_m0.
    """

    models: tuple[AgentModel, ...]
    m0: AgentModel
    priors: tuple[float, ...]
    allow_zero_m0: bool = False

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "priors", tuple(float(p) for p in self.priors))
        if self.m0.goal is not None or self.m0.likelihood_kind != "uniform":
            raise InvariantError("m0 must be goalless with beta=0")
        for model in self.models:
            if model.goal is None:
                raise InvariantError(f"explicit model {model.id!r} must have a goal")
        ids = [m.id for m in self.models] + [self.m0.id]
        if len(set(ids)) != len(ids):
            raise InvariantError("model ids must be unique")
        if len(self.priors) != len(self.models) + 1:
            raise InvariantError("need one prior per model plus one for m0")
        if any(p < 0 for p in self.priors):
            raise InvariantError("priors must be non-negative")
        if abs(sum(self.priors) - 1.0) > 1e-12:
            raise InvariantError(f"priors must sum to 1, got {sum(self.priors)!r}")
        if self.priors[-1] == 0 and not self.allow_zero_m0:
            raise InvariantError("m0 prior must be positive (or set allow_zero_m0)")

    @classmethod
    def build(
        cls,
        models,
        m0_prior: float,
        model_priors=None,
        m0_id: str = "m0",
        allow_zero_m0: bool = False,
    ) -> "HypothesisSet":
        """Convenience constructor; model priors default to a uniform split of 1 - m0_prior."""
        models = tuple(models)
        if model_priors is None:
            share = (1.0 - m0_prior) / len(models)
            model_priors = [share] * len(models)
        priors = [float(p) for p in model_priors]
        priors.append(1.0 - sum(priors))
        if abs(priors[-1] - m0_prior) > 1e-9:
            raise InvariantError("model priors and m0 prior do not sum to 1")
        return cls(
            models=models,
            m0=make_m0(m0_id),
            priors=tuple(priors),
            allow_zero_m0=allow_zero_m0,
        )

    @property
    def all_models(self) -> tuple[AgentModel, ...]:
        return self.models + (self.m0,)

    @property
    def m0_prior(self) -> float:
        return self.priors[-1]

    def prior_of(self, model_id: str) -> float:
        for model, prior in zip(self.all_models, self.priors):
            if model.id == model_id:
                return prior
        raise KeyError(model_id)


_EXTRACTORS = {
    "goal": lambda scenario, model: scenario.resolve_goal(model.goal),
    "beta": lambda scenario, model: model.beta,
}


@dataclass(frozen=True)
class ParameterSelector:
    """A named model projection plus the true model's value of it.

    Used by the legibility score: behavior is legible w.r.t. a parameter when
    the posterior concentrates on models sharing the true model's value.
    Goals are canonicalized to coordinates so labels and coordinates compare
    equal.
    """

    extractor: str
    target: object

    def __post_init__(self):
        if self.extractor not in _EXTRACTORS:
            raise InvariantError(f"unknown extractor {self.extractor!r}")
        if isinstance(self.target, list):
            object.__setattr__(self, "target", tuple(self.target))

    def _canonical_target(self, scenario: GridScenario):
        if self.extractor == "goal":
            return scenario.resolve_goal(self.target)
        return self.target

    def matches(self, scenario: GridScenario, model: AgentModel) -> bool:
        value = _EXTRACTORS[self.extractor](scenario, model)
        return value == self._canonical_target(scenario)
