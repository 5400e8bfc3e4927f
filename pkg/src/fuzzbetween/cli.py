"""``fuzzbetween`` command-line interface.

Exit codes: 0 ok, 1 property failure, 2 unknown name, 3 type mismatch,
4 malformed input (including guard violations), 5 two characterizations that
must agree disagreed.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings
from typing import Sequence

from . import __version__, checks, crisp, fuzzy, hfuzzy, hyperbolic
from .core import DEFAULT_TOL, LEBESGUE, LevelMeasure, check_psd, intersection_kernel, kernel_metric, subset_label
from .errors import (
    FuzzBetweenError,
    GuardExceededError,
    InputError,
    TheoremMismatchError,
    UniverseMismatchError,
    UnknownNameError,
    ValidationError,
)
from .hfuzzy import HLevel
from .report import FORMATS, Report
from .workspace import SECTIONS, Workspace, load_workspace, object_to_json

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_UNKNOWN_NAME = 2
EXIT_TYPE_MISMATCH = 3
EXIT_INPUT = 4
EXIT_THEOREM_MISMATCH = 5

METRICS = ("jaccard", "dsigma", "dr:<r>", "D", "DH", "kernel")
MODES = ("crisp", "pointwise", "alpha", "hyper", "h-alpha")
MAX_SEED = 2**64 - 1


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; here 2 means 'unknown name'."""

    def error(self, message: str):  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= v <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2**64 - 1], got {v}")
    return v


def _tol(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance must be a number, got {text!r}") from None
    if not (math.isfinite(v) and v >= 0.0):
        raise argparse.ArgumentTypeError(f"tolerance must be finite and >= 0, got {v}")
    return v


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Registered on the main parser and on every subcommand so the flags may
    # appear before or after the subcommand name.  Subparsers use SUPPRESS
    # defaults so they never overwrite a value given before the subcommand.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("global options")
    g.add_argument("--workspace", metavar="PATH", default=d(None),
                   help="JSON document, CSV table, or directory of them")
    g.add_argument("--format", choices=FORMATS, default=d("json"), help="report rendering (default json)")
    g.add_argument("--seed", type=_seed, default=d(0), help="seed for generated instances (default 0)")
    g.add_argument("--tol", type=_tol, default=d(DEFAULT_TOL),
                   help=f"absolute tolerance for zero tests (default {DEFAULT_TOL:g})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzbetween", description="Set and fuzzy-set distances and betweenness.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("dist", help="distance between two named objects")
    _global_flags(p, suppress=True)
    p.add_argument("--metric", required=True, help="one of: " + ", ".join(METRICS))
    p.add_argument("--eta", default="lebesgue", help="level measure name for D / DH (default lebesgue)")
    p.add_argument("--kernel", help="kernel name for --metric kernel (default: intersection kernel)")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("between", help="is C between A and B?")
    _global_flags(p, suppress=True)
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--witness", action="store_true", help="include the decomposition when between")
    p.add_argument("--gap", action="store_true", help="include the triangle gap of the matching distance")
    p.add_argument("--eta", default="lebesgue", help="level measure for the fuzzy gap (default lebesgue)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = sub.add_parser("cut", help="strong alpha-cut of a membership function, or a-cut of a D-valued one")
    _global_flags(p, suppress=True)
    lv = p.add_mutually_exclusive_group(required=True)
    lv.add_argument("--alpha", type=float, help="level in [0, 1] for a membership function")
    lv.add_argument("--level", help="a1,a2 with a1 +- a2 in [0, 1], for a D-valued function")
    p.add_argument("name")

    p = sub.add_parser("check", help="run the property suites")
    _global_flags(p, suppress=True)
    p.add_argument("--suite", default="all", choices=(*checks.SUITES, "all"))
    p.add_argument("--exhaustive", type=int, default=checks.MAX_EXHAUSTIVE,
                   help=f"largest universe for exhaustive scans (1..{checks.MAX_EXHAUSTIVE})")
    p.add_argument("--grid", type=int, default=checks.MAX_GRID,
                   help=f"levels of the membership grid (2..{checks.MAX_GRID})")

    p = sub.add_parser("show", help="list the workspace or print one object")
    _global_flags(p, suppress=True)
    p.add_argument("name", nargs="?")
    return parser


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _require_workspace(args) -> Workspace:
    if not args.workspace:
        raise InputError("this command needs --workspace PATH")
    return load_workspace(args.workspace)


def _eta(ws: Workspace, name: str) -> LevelMeasure:
    if name == "lebesgue" and "lebesgue" not in ws.levels:
        return LEBESGUE
    return ws.get(name, "levels")


def _members(s) -> list[str]:
    return list(s.members)


def cmd_dist(args, report: Report) -> int:
    ws = _require_workspace(args)
    metric = args.metric
    report.inputs.update(lhs=args.lhs, rhs=args.rhs, metric=metric)
    if metric in ("jaccard", "dsigma"):
        a = ws.get(args.lhs, "sets")
        b = ws.get(args.rhs, "sets")
        m = ws.common_measure(args.lhs, args.rhs)
        if metric == "jaccard":
            j = crisp.jaccard(a, b)
            report.results.update(index=j.index, distance=j.distance)
        else:
            report.results["distance"] = crisp.d_sigma(m, a, b)
    elif metric.startswith("dr:"):
        r = _parse_r(metric[3:])
        f, g = ws.get(args.lhs, "fuzzy"), ws.get(args.rhs, "fuzzy")
        m = ws.common_measure(args.lhs, args.rhs)
        report.inputs["r"] = "inf" if math.isinf(r) else r
        report.results["distance"] = fuzzy.d_r(m, f, g, r)
    elif metric == "D":
        f, g = ws.get(args.lhs, "fuzzy"), ws.get(args.rhs, "fuzzy")
        m = ws.common_measure(args.lhs, args.rhs)
        report.inputs["eta"] = args.eta
        report.results["distance"] = fuzzy.metric_D(m, _eta(ws, args.eta), f, g)
    elif metric == "DH":
        a, b = ws.get(args.lhs, "hfuzzy"), ws.get(args.rhs, "hfuzzy")
        m = ws.common_measure(args.lhs, args.rhs)
        report.inputs["eta"] = args.eta
        d = hfuzzy.h_metric_D(m, _eta(ws, args.eta), a, b)
        report.results.update(plus=d.plus, minus=d.minus, a=d.a, b=d.b)
    elif metric == "kernel":
        _dist_kernel(ws, args, report)
    else:
        raise InputError(f"unknown metric {metric!r}; expected one of {', '.join(METRICS)}")
    return EXIT_OK


def _parse_r(text: str) -> float:
    try:
        r = float(text)
    except ValueError:
        raise InputError(f"--metric dr:<r>: r must be a number or 'inf', got {text!r}") from None
    if not r >= 1.0:
        raise InputError(f"--metric dr:<r>: r must be >= 1, got {text}")
    return r


def _dist_kernel(ws: Workspace, args, report: Report) -> None:
    if args.kernel is None:
        # intersection kernel sigma(A & B) on the power set of the sets' universe
        a, b = ws.get(args.lhs, "sets"), ws.get(args.rhs, "sets")
        m = ws.common_measure(args.lhs, args.rhs)
        K = intersection_kernel(a.universe, m)
        labels = subset_label(a.members), subset_label(b.members)
        report.inputs["kernel"] = "intersection"
    else:
        K = ws.get(args.kernel, "kernels")
        labels = tuple(_kernel_label(ws, K, name) for name in (args.lhs, args.rhs))
        report.inputs["kernel"] = args.kernel
    report.inputs["labels"] = list(labels)
    psd = check_psd(K)
    report.verdicts["psd"] = psd
    if not psd:
        warnings.warn("kernel matrix is not positive semi-definite; the distance may not be a metric")
    report.results["distance"] = kernel_metric(K, *labels)


def _kernel_label(ws: Workspace, K, name: str) -> str:
    if name in K.index:
        return name
    if name in ws.sets:
        label = subset_label(ws.sets[name].members)
        if label in K.index:
            return label
    raise UnknownNameError(f"{name!r} is not a label of the kernel (labels: {list(K.labels)})")


def cmd_between(args, report: Report) -> int:
    ws = _require_workspace(args)
    mode = args.mode
    names = (args.a, args.b, args.c)
    report.inputs.update(a=args.a, b=args.b, c=args.c, mode=mode)
    if mode == "crisp":
        a, b, c = (ws.get(n, "sets") for n in names)
        m = ws.common_measure(*names)
        verdict = crisp.is_between(a, b, c)
        report.verdicts["between"] = verdict
        if args.witness and verdict:
            report.results["witness"] = _members(crisp.between_decomposition(a, b, c))
        if args.gap:
            gap = crisp.triangle_gap(m, a, b, c)
            report.results["gap"] = gap
            report.verdicts["gap_zero"] = abs(gap) <= args.tol
    elif mode in ("pointwise", "alpha"):
        f, g, c = (ws.get(n, "fuzzy") for n in names)
        m = ws.common_measure(*names)
        point = fuzzy.is_pointwise_between(f, g, c)
        alpha = fuzzy.is_alpha_between(f, g, c)
        report.verdicts.update(between=point if mode == "pointwise" else alpha, pointwise=point, alpha=alpha)
        if point != alpha:
            raise TheoremMismatchError(f"alpha-cut betweenness ({alpha}) disagrees with pointwise ({point})")
        if args.witness and point:
            report.results["witness"] = fuzzy.witness_decomposition(f, g, c).as_mapping()
        if args.gap:
            report.inputs["eta"] = args.eta
            gap = fuzzy.metric_D_triangle_gap(m, _eta(ws, args.eta), f, g, c)
            report.results["gap"] = gap
            report.verdicts["gap_zero"] = abs(gap) <= args.tol
    elif mode == "hyper":
        z, w, x = (ws.get(n, "hyperbolic") for n in names)
        iv = hyperbolic.h_interval(z, w)
        verdict = x in iv
        report.verdicts["between"] = verdict
        report.results.update(meet=iv.lo.to_mapping(), join=iv.hi.to_mapping())
        if args.witness and verdict:
            report.results["witness"] = iv.parameter(x).to_mapping()
        if args.gap:
            raise InputError("--gap: hyperbolic numbers carry no distance; use mode h-alpha for D_H")
    elif mode == "h-alpha":
        a, b, c = (ws.get(n, "hfuzzy") for n in names)
        m = ws.common_measure(*names)
        order = hfuzzy.h_is_between(a, b, c)
        cuts = hfuzzy.h_is_a_between(a, b, c)
        report.verdicts.update(between=cuts, hyperbolic_order=order, a_cuts=cuts)
        if order != cuts:
            raise TheoremMismatchError(f"a-cut betweenness ({cuts}) disagrees with the hyperbolic order ({order})")
        if args.witness and order:
            z = hfuzzy.h_witness_decomposition(a, b, c)
            report.results["witness"] = {"mu1": z.mu1.as_mapping(), "mu2": z.mu2.as_mapping()}
        if args.gap:
            report.inputs["eta"] = args.eta
            plus, minus = hfuzzy.h_metric_D_triangle_gap(m, _eta(ws, args.eta), a, b, c)
            report.results["gap"] = {"plus": plus, "minus": minus}
            report.verdicts["gap_zero"] = abs(plus) <= args.tol and abs(minus) <= args.tol
    return EXIT_OK


def cmd_cut(args, report: Report) -> int:
    ws = _require_workspace(args)
    report.inputs["name"] = args.name
    if args.alpha is not None:
        f = ws.get(args.name, "fuzzy")
        report.inputs["alpha"] = args.alpha
        try:
            report.results["members"] = _members(fuzzy.strong_alpha_cut(f, args.alpha))
        except ValidationError as exc:
            raise InputError(f"--alpha: {exc}") from exc
        return EXIT_OK
    m = ws.get(args.name, "hfuzzy")
    try:
        a1, a2 = (float(v) for v in args.level.split(","))
        level = HLevel(a1, a2)
    except ValueError as exc:
        raise InputError(f"--level: expected 'a1,a2' with a1 + a2 and a1 - a2 in [0, 1] ({exc})") from exc
    report.inputs["level"] = {"alpha1": level.alpha1, "alpha2": level.alpha2}
    along_p, along_q = hfuzzy.h_alpha_cut_pair(m, level)
    report.results.update(
        members=_members(along_p & along_q),
        along_P=_members(along_p),
        along_Q=_members(along_q),
        thresholds=list(level.thresholds),
    )
    return EXIT_OK


def cmd_check(args, report: Report) -> int:
    report.inputs.update(suite=args.suite, seed=args.seed, exhaustive=args.exhaustive,
                         grid=args.grid, tol=args.tol)
    try:
        config = checks.CheckConfig(exhaustive=args.exhaustive, grid=args.grid, tol=args.tol)
    except GuardExceededError as exc:
        raise InputError(str(exc)) from exc
    outcome = checks.run_checks(args.suite, args.seed, config)
    suites = {}
    for suite, props in outcome.items():
        passed = all(p.passed for p in props)
        suites[suite] = {"passed": passed, "properties": [p.to_dict() for p in props]}
        report.verdicts[suite] = passed
        for p in props:
            if not p.passed:
                report.counterexamples.append({"suite": suite, "property": p.name, "case": p.counterexample})
    report.results["suites"] = suites
    report.verdicts["all_passed"] = all(report.verdicts[s] for s in outcome)
    return EXIT_OK if report.verdicts["all_passed"] else EXIT_PROPERTY_FAILURE


def cmd_show(args, report: Report) -> int:
    ws = _require_workspace(args)
    if args.name is None:
        report.results["objects"] = {k: v for k, v in ws.names().items() if v}
        return EXIT_OK
    report.inputs["name"] = args.name
    found = [k for k in SECTIONS if args.name in ws.section(k)]
    if not found:
        raise UnknownNameError(f"no object named {args.name!r} in the workspace")
    for kind in found:
        entry = object_to_json(ws, kind, args.name)
        if kind == "hyperbolic":
            z = ws.hyperbolic[args.name]
            entry = {**entry, "plus": z.plus, "minus": z.minus}
        elif kind == "hfuzzy":
            mat = ws.hfuzzy[args.name].matrices()
            entry = {**entry, "matrices": {e: mat[i].tolist() for i, e in enumerate(ws.hfuzzy[args.name].universe)}}
        report.results[kind] = entry
    return EXIT_OK


COMMANDS = {
    "dist": cmd_dist,
    "between": cmd_between,
    "cut": cmd_cut,
    "check": cmd_check,
    "show": cmd_show,
}


def _exit_code(exc: FuzzBetweenError) -> int:
    code = getattr(exc, "exit_code", None)
    if code is not None:
        return code
    if isinstance(exc, UniverseMismatchError):
        return EXIT_TYPE_MISMATCH
    # validation failures, guard violations, null-cone inverses
    return EXIT_INPUT


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    report = Report(command={"name": args.command, "argv": argv})
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            status = COMMANDS[args.command](args, report)
        except FuzzBetweenError as exc:
            status = _exit_code(exc)
            report.error = str(exc)
            print(f"error: {exc}", file=stderr)
    report.warnings = [str(w.message) for w in caught if issubclass(w.category, UserWarning)]
    report.exit_status = status
    stdout.write(report.render(args.format))
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
