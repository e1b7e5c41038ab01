"""Command-line front end: score trajectories, plan behaviors, reproduce checks.

Output is plain CSV with floats fixed to six decimals and deterministic row
order, so identical inputs give byte-identical files on every platform.
Errors print one machine-readable line to stderr (error<TAB>type<TAB>message)
and exit non-zero.
"""

from __future__ import annotations

import argparse
import sys

from .errors import GridWorldError, InvalidActionError
from .observer import ObserverState
from .planner import Objective, objective_value, plan
from .reproduce import RUNNERS
from .scenario import DIRECTION_OF_LETTER, ParameterSelector, Trace
from .scenario_io import load_scenario_file
from .scores import report_for_state

WEIGHT_KEYS = {
    "e": "explicability",
    "l": "legibility",
    "p": "predictability",
    "d": "deception",
    "o": "obfuscation",
}


def build_prefix(scenario, letters: str) -> Trace:
    """Walk the action letters from the start, validating each step."""
    trace = Trace.empty(scenario.start)
    for i, ch in enumerate(letters):
        direction = DIRECTION_OF_LETTER.get(ch)
        if direction is None:
            raise InvalidActionError(f"step {i}: unknown action letter {ch!r}")
        visited = set(trace.states) if scenario.no_revisit else frozenset()
        target = scenario.step_target(trace.terminal, direction, visited)
        if target is None:
            raise InvalidActionError(f"step {i}: cannot move {direction} from {trace.terminal}")
        trace = Trace(states=trace.states + (target,), actions=trace.actions + (direction,))
    return trace


def _parse_theta(spec: str) -> ParameterSelector:
    if "=" not in spec:
        raise GridWorldError(f"--theta expects <extractor>=<target>, got {spec!r}")
    name, target = spec.split("=", 1)
    if name == "beta":
        return ParameterSelector("beta", float(target))
    return ParameterSelector(name, target)


def _parse_weights(spec: str) -> dict[str, float]:
    weights = {}
    for part in spec.split(","):
        if "=" not in part:
            raise GridWorldError(f"--weights expects k=v pairs, got {part!r}")
        key, value = part.split("=", 1)
        name = WEIGHT_KEYS.get(key, key)
        if name not in WEIGHT_KEYS.values():
            raise GridWorldError(f"unknown weight key {key!r}")
        weights[name] = float(value)
    return weights


def _selector_and_label(args, hs, true_model):
    if args.theta is not None:
        selector = _parse_theta(args.theta)
        label = selector.target if isinstance(selector.target, str) else repr(selector.target)
        return selector, label
    if true_model is not None and isinstance(true_model.goal, str):
        return ParameterSelector("goal", true_model.goal), true_model.goal
    return None, "none"


def _find_model(hs, model_id: str):
    for model in hs.models:
        if model.id == model_id:
            return model
    raise GridWorldError(f"no model {model_id!r} in scenario file")


def _report_rows(scenario, hs, full, selector, true_model_id, label):
    rows = [f"step,explicability,legibility_{label},predictability_remaining,deception,obfuscation"]
    for k in range(len(full) + 1):
        state = ObserverState.observe(scenario, hs, full.prefix(k))
        rep = report_for_state(
            state, intended=full.suffix(k), selector=selector, true_model_id=true_model_id
        )
        rows.append(
            f"{k},{rep.explicability:.6f},{rep.legibility:.6f},"
            f"{rep.predictability:.6f},{rep.deception:.6f},{rep.obfuscation:.6f}"
        )
    return rows


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def cmd_score(args) -> int:
    scenario, hs = load_scenario_file(args.scenario)
    true_model = _find_model(hs, args.true_model) if args.true_model else None
    selector, label = _selector_and_label(args, hs, true_model)
    full = build_prefix(scenario, args.path)
    true_id = true_model.id if true_model else None
    _emit(_report_rows(scenario, hs, full, selector, true_id, label), args.out)
    return 0


def cmd_plan(args) -> int:
    scenario, hs = load_scenario_file(args.scenario)
    true_model = _find_model(hs, args.true_model)
    selector, label = _selector_and_label(args, hs, true_model)
    objective = Objective(
        weights=_parse_weights(args.weights),
        selector=selector,
        aggregation="mean_over_prefixes" if args.agg == "mean" else "final_prefix",
        optimal_only=args.optimal_only,
    )
    trace, reports = plan(scenario, hs, true_model, objective)
    lines = [f"trace {trace.action_string}", f"objective {objective_value(reports, objective):.6f}"]
    lines += _report_rows(scenario, hs, trace, selector, true_model.id, label)
    _emit(lines, args.out)
    return 0


def cmd_reproduce(args) -> int:
    ok, lines = RUNNERS[args.property]()
    for line in lines:
        print(line)
    if args.property == "appendix":
        # Reconstruction deviations are reported, not treated as failures.
        return 0
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gridobserver",
        description="Score, plan, and reproduce interpretable grid-world behavior.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="per-step interpretability scores along a path")
    p_score.add_argument("--scenario", required=True)
    p_score.add_argument("--path", required=True, help="action letters, e.g. RRDDL")
    p_score.add_argument("--theta", help="legibility parameter, e.g. goal=C")
    p_score.add_argument("--true-model", help="model id used for the deception column")
    p_score.add_argument("--out", help="CSV output path (default stdout)")
    p_score.set_defaults(func=cmd_score)

    p_plan = sub.add_parser("plan", help="choose the behavior optimizing a weighted objective")
    p_plan.add_argument("--scenario", required=True)
    p_plan.add_argument("--true-model", required=True)
    p_plan.add_argument("--weights", required=True, help="e.g. e=1,l=0,p=0,d=0,o=0")
    p_plan.add_argument("--theta", help="legibility parameter, e.g. goal=C")
    p_plan.add_argument("--optimal-only", action="store_true")
    p_plan.add_argument("--agg", choices=("mean", "final"), default="final")
    p_plan.add_argument("--out", help="output path (default stdout)")
    p_plan.set_defaults(func=cmd_plan)

    p_rep = sub.add_parser("reproduce", help="re-run a documented property check")
    p_rep.add_argument("--property", required=True, choices=sorted(RUNNERS))
    p_rep.set_defaults(func=cmd_reproduce)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GridWorldError as exc:
        sys.stderr.write(f"error\t{type(exc).__name__}\t{exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error\tOSError\t{exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
