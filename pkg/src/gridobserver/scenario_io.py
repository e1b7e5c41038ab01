"""Text format for scenario files.

Canonical layout, one datum per line::

    grid <width> <height>
    start <col> <row>
    moves <comma-separated directions>
    norevisit <true|false>
    <height rows of width glyphs>      . free  # wall  <>^v one-way  A-Z object
    model <id> goal=<label> beta=<value|inf>   (one line per explicit model)
    m0 prior=<p>
    priors <p1>,<p2>,...               (explicit-model priors, declaration order)

Serialization of a parsed file is byte-identical for files in canonical form
(floats rendered by repr, moves in up,down,left,right order, one trailing
newline).
"""

from __future__ import annotations

import math

from .errors import GridWorldError, InvariantError, ParseError
from .scenario import (
    DIRECTIONS,
    AgentModel,
    Cell,
    GridScenario,
    HypothesisSet,
    make_m0,
)


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else repr(float(x))


def _parse_float(token: str, line_no: int, what: str) -> float:
    if token == "inf":
        return math.inf
    try:
        return float(token)
    except ValueError:
        raise ParseError(line_no, f"bad {what} {token!r}") from None


def _expect_key(token: str, key: str, line_no: int) -> str:
    if not token.startswith(key + "="):
        raise ParseError(line_no, f"expected {key}=<value>, got {token!r}")
    return token[len(key) + 1 :]


def parse_scenario(text: str) -> tuple[GridScenario, HypothesisSet]:
    """Parse scenario text, validating every type invariant.

    Raises ParseError (with the offending 1-based line number) for malformed
    syntax and InvariantError for semantic violations such as priors that do
    not sum to one.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def get(i: int) -> str:
        if i >= len(lines):
            raise ParseError(i + 1, "unexpected end of file")
        return lines[i]

    head = get(0).split()
    if len(head) != 3 or head[0] != "grid":
        raise ParseError(1, "expected 'grid <width> <height>'")
    try:
        width, height = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError(1, "grid dimensions must be integers") from None

    head = get(1).split()
    if len(head) != 3 or head[0] != "start":
        raise ParseError(2, "expected 'start <col> <row>'")
    try:
        start = (int(head[1]), int(head[2]))
    except ValueError:
        raise ParseError(2, "start coordinates must be integers") from None

    head = get(2).split()
    if len(head) != 2 or head[0] != "moves":
        raise ParseError(3, "expected 'moves <dir>,<dir>,...'")
    moves = head[1].split(",")
    for move in moves:
        if move not in DIRECTIONS:
            raise ParseError(3, f"unknown direction {move!r}")

    head = get(3).split()
    if len(head) != 2 or head[0] != "norevisit" or head[1] not in ("true", "false"):
        raise ParseError(4, "expected 'norevisit <true|false>'")
    no_revisit = head[1] == "true"

    rows = []
    for r in range(height):
        line_no = 5 + r
        row_text = get(4 + r)
        if len(row_text) != width:
            raise ParseError(line_no, f"expected {width} glyphs, got {len(row_text)}")
        row = []
        for ch in row_text:
            try:
                row.append(Cell.from_glyph(ch))
            except InvariantError:
                raise ParseError(line_no, f"unknown cell glyph {ch!r}") from None
        rows.append(tuple(row))

    models: list[AgentModel] = []
    i = 4 + height
    while i < len(lines) and lines[i].startswith("model "):
        line_no = i + 1
        parts = lines[i].split()
        if len(parts) != 4:
            raise ParseError(line_no, "expected 'model <id> goal=<label> beta=<value>'")
        goal = _expect_key(parts[2], "goal", line_no)
        beta = _parse_float(_expect_key(parts[3], "beta", line_no), line_no, "beta")
        models.append(AgentModel(id=parts[1], goal=goal, beta=beta))
        i += 1
    if not models:
        raise ParseError(i + 1, "expected at least one model line")

    parts = get(i).split()
    if len(parts) != 2 or parts[0] != "m0":
        raise ParseError(i + 1, "expected 'm0 prior=<p>'")
    m0_prior = _parse_float(_expect_key(parts[1], "prior", i + 1), i + 1, "prior")
    i += 1

    parts = get(i).split()
    if len(parts) != 2 or parts[0] != "priors":
        raise ParseError(i + 1, "expected 'priors <p1>,<p2>,...'")
    try:
        model_priors = [float(tok) for tok in parts[1].split(",")]
    except ValueError:
        raise ParseError(i + 1, "priors must be numbers") from None
    if len(model_priors) != len(models):
        raise ParseError(i + 1, f"expected {len(models)} priors, got {len(model_priors)}")
    i += 1
    if i < len(lines):
        raise ParseError(i + 1, f"unexpected trailing line {lines[i]!r}")

    scenario = GridScenario(
        width=width,
        height=height,
        cells=tuple(rows),
        start=start,
        allowed_moves=frozenset(moves),
        no_revisit=no_revisit,
    )
    for model in models:
        scenario.resolve_goal(model.goal)  # goals must name object cells
    hs = HypothesisSet(
        models=tuple(models),
        m0=make_m0(),
        priors=tuple(model_priors) + (m0_prior,),
    )
    return scenario, hs


def serialize_scenario(scenario: GridScenario, hs: HypothesisSet) -> str:
    """Render scenario and hypotheses in canonical form."""
    out = [
        f"grid {scenario.width} {scenario.height}",
        f"start {scenario.start[0]} {scenario.start[1]}",
        "moves " + ",".join(d for d in DIRECTIONS if d in scenario.allowed_moves),
        "norevisit " + ("true" if scenario.no_revisit else "false"),
    ]
    for row in scenario.cells:
        out.append("".join(cell.to_glyph() for cell in row))
    for model in hs.models:
        goal = model.goal if isinstance(model.goal, str) else _goal_label(scenario, model.goal)
        out.append(f"model {model.id} goal={goal} beta={_fmt(model.beta)}")
    out.append(f"m0 prior={_fmt(hs.m0_prior)}")
    out.append("priors " + ",".join(_fmt(p) for p in hs.priors[:-1]))
    return "\n".join(out) + "\n"


def _goal_label(scenario: GridScenario, goal) -> str:
    cell = scenario.cell(scenario.resolve_goal(goal))
    if cell.label is None:
        raise GridWorldError(f"goal {goal} has no object label to serialize")
    return cell.label


def load_scenario_file(path) -> tuple[GridScenario, HypothesisSet]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_scenario(fh.read())
