"""Command-line interface.

Commands: classify, member, nbhd, converge, compare, check, explain.
``--json`` switches to a machine-readable record; identical invocations
(including seeds) print byte-identical JSON.  Exit codes: 0 success,
1 usage error, 2 expression parse error, 3 verification failure,
4 undecidable-membership abort.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .descriptive import compare_topologies, infer, subset
from .geometry import Point, rat_to_str
from .harness import SuiteConfig, SamplingError, UnknownSuite, run_suite, suite_names
from .setdsl import ParseError, parse, to_text
from .theorems import UnknownProperty, classify, explain
from .topology import (
    SequenceFamily,
    TangentCircle,
    TopologySpec,
    UndecidableMembership,
    Vertical,
    decide_convergence,
    local_base_element,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VERIFICATION = 3
EXIT_UNDECIDABLE = 4


class UsageError(ValueError):
    pass


def _fractions(text: str, want: int, what: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != want:
        raise UsageError(f"{what} needs {want} coordinate(s), got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational in {what}: {exc}") from exc


def _parse_point(text: str, dimension: int) -> Point:
    coords = _fractions(text, dimension, "--point")
    try:
        return Point(coords)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_boundary_point(text: str, dimension: int) -> tuple[Fraction, ...]:
    return _fractions(text, dimension - 1, "--point")


def _parse_topology(text: str, dimension: int) -> TopologySpec:
    name = text.strip().lower()
    if name == "euclidean":
        return TopologySpec.euclidean(dimension)
    if name == "niemytzki":
        return TopologySpec.niemytzki(dimension)
    return TopologySpec.modified(parse(text, dimension), dimension)


_FAMILY_RE = re.compile(
    r"\s*(?P<name>vertical|tangent-circle)\s*\(\s*\((?P<coords>[^)]*)\)\s*;\s*(?P<param>[^)]+)\)\s*"
)


def _parse_family(text: str, dimension: int) -> SequenceFamily:
    m = _FAMILY_RE.fullmatch(text)
    if m is None:
        raise UsageError(
            "family syntax: vertical((coords);rat) or tangent-circle((coords);rat)"
        )
    coords = _fractions(m.group("coords"), dimension - 1, "family anchor")
    try:
        param = Fraction(m.group("param").strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad family parameter: {exc}") from exc
    anchor = Point.boundary(*coords)
    if m.group("name") == "vertical":
        return Vertical(anchor, param)
    return TangentCircle(anchor, param)


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(human)


def _verdict_lines(block: dict) -> str:
    return "\n".join(f"  {name}: {value}" for name, value in block.items())


def _cmd_classify(args) -> int:
    expr = parse(args.set, args.dimension)
    report = classify(expr, args.dimension)
    payload = report.to_json()
    payload["set_classes"] = infer(expr).to_json()
    human = (
        f"space: {report.space}   dimension: {report.dimension}\n"
        + _verdict_lines(payload["properties"])
        + "\nboundary subspace:\n"
        + _verdict_lines(payload["boundary_subspace"])
        + "\n(use `explain` for rule citations)"
    )
    _emit(payload, args.json, human)
    return EXIT_OK


def _cmd_member(args) -> int:
    expr = parse(args.set, args.dimension)
    point = _parse_boundary_point(args.point, args.dimension)
    from .setdsl import member

    verdict = member(expr, point)
    payload = {
        "set": to_text(expr),
        "point": [rat_to_str(c) for c in point],
        "membership": verdict.value,
    }
    _emit(payload, args.json, verdict.value)
    return EXIT_OK


def _cmd_nbhd(args) -> int:
    topo = _parse_topology(args.topology, args.dimension)
    point = _parse_point(args.point, args.dimension)
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --eps: {exc}") from exc
    element = local_base_element(topo, point, eps)
    payload = {
        "topology": topo.to_json(),
        "point": point.to_json(),
        "eps": rat_to_str(eps),
        "neighborhood": element.to_json(),
    }
    human = (
        f"{element.kind} at ({','.join(element.center.to_json())}) "
        f"radius {rat_to_str(element.radius)}"
    )
    _emit(payload, args.json, human)
    return EXIT_OK


def _cmd_converge(args) -> int:
    topo = _parse_topology(args.topology, args.dimension)
    fam = _parse_family(args.family, args.dimension)
    verdict = decide_convergence(fam, topo, fam.anchor)
    payload = {
        "family": fam.to_json(),
        "topology": topo.to_json(),
        **verdict.to_json(),
    }
    if verdict.converges is None:
        human = "inconclusive (finite prefix)"
    elif verdict.converges:
        human = "converges to the anchor\n" + "\n".join(
            f"  certificate: {c.to_json()}" for c in verdict.certificates
        )
    else:
        lines = ["does not converge (the prefix is discrete)"]
        for cert in verdict.certificates:
            record = cert.to_json()
            if record["kind"] == "blocking-neighborhood":
                nbhd = record["neighborhood"]
                lines.append(
                    f"  blocking neighborhood: {nbhd['kind']} at "
                    f"({','.join(nbhd['center'])}) radius {nbhd['radius']}"
                )
            else:
                lines.append(f"  {record['kind']}: {len(record['entries'])} isolating balls")
        human = "\n".join(lines)
    _emit(payload, args.json, human)
    return EXIT_OK


def _cmd_compare(args) -> int:
    eA = parse(args.set_a, args.dimension)
    eB = parse(args.set_b, args.dimension)
    order = compare_topologies(eA, eB, budget=args.budget, seed=args.seed)
    sub = subset(eA, eB, budget=args.budget, seed=args.seed)
    payload = {
        "set_a": to_text(eA),
        "set_b": to_text(eB),
        "subset_a_in_b": sub.value,
        "relation": order.value,
    }
    _emit(payload, args.json, f"tau(A) vs tau(B): {order.value}")
    return EXIT_OK


def _cmd_check(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        samples=args.samples,
        seed=args.seed,
        dimension=args.dimension,
    )
    result = run_suite(cfg)
    payload = result.to_json()
    human = (
        f"suite {result.suite} (n={result.dimension}, samples={result.samples}, "
        f"seed={result.seed}): {result.checks} checks, "
        f"{len(result.failures)} failures, {result.elapsed:.2f}s"
    )
    if result.failures:
        first = result.failures[0]
        human += f"\n  first counterexample (sample {first.index}): {first.check} {first.data}"
    _emit(payload, args.json, human)
    return EXIT_OK if result.ok else EXIT_VERIFICATION


def _cmd_explain(args) -> int:
    report = classify(parse(args.set, args.dimension), args.dimension)
    steps = explain(report, args.property)
    payload = {
        "space": report.space,
        "property": args.property,
        "verdict": report.to_json()["properties"].get(args.property)
        if not args.property.startswith("boundary.")
        else report.to_json()["boundary_subspace"].get(args.property.split(".", 1)[1]),
        "trace": [s.to_json() for s in steps],
    }
    lines = [f"{args.property}:"]
    for s in steps:
        lines.append(f"  [{s.rule}] \"{s.citation}\" -> {s.verdict}")
        for key, value in s.inputs.items():
            lines.append(f"        {key} = {value}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--dimension", type=int, default=2, help="session dimension n >= 2 (default 2)")
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="niemytzki",
        description="Exact classification of tangent-ball topologies on the closed half-space.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("classify", help="property report for (X_n, tau(A))")
    _add_common(p)
    p.add_argument("--set", required=True, help="boundary-set expression A")
    p.set_defaults(handler=_cmd_classify)

    p = commands.add_parser("member", help="membership of a boundary point in A")
    _add_common(p)
    p.add_argument("--set", required=True)
    p.add_argument("--point", required=True, help="n-1 comma-separated rationals")
    p.set_defaults(handler=_cmd_member)

    p = commands.add_parser("nbhd", help="basic neighborhood of a point")
    _add_common(p)
    p.add_argument("--topology", required=True, help="euclidean, niemytzki, or a set expression")
    p.add_argument("--point", required=True, help="n comma-separated rationals")
    p.add_argument("--eps", required=True)
    p.set_defaults(handler=_cmd_nbhd)

    p = commands.add_parser("converge", help="convergence of a closed-form family")
    _add_common(p)
    p.add_argument("--family", required=True, help="vertical((coords);rat) or tangent-circle((coords);rat)")
    p.add_argument("--topology", required=True)
    p.set_defaults(handler=_cmd_converge)

    p = commands.add_parser("compare", help="order of tau(A) versus tau(B)")
    _add_common(p)
    p.add_argument("--set-a", required=True)
    p.add_argument("--set-b", required=True)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_compare)

    p = commands.add_parser("check", help="run a verification suite")
    _add_common(p)
    p.add_argument("--suite", required=True, help=f"one of {', '.join(suite_names())}")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(handler=_cmd_check)

    p = commands.add_parser("explain", help="trace one property's verdict")
    _add_common(p)
    p.add_argument("--set", required=True)
    p.add_argument("--property", required=True)
    p.set_defaults(handler=_cmd_explain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        if getattr(args, "dimension", 2) < 2:
            raise UsageError("dimension must be at least 2")
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UndecidableMembership as exc:
        print(f"undecidable: {exc}", file=sys.stderr)
        return EXIT_UNDECIDABLE
    except (UsageError, UnknownSuite, UnknownProperty, SamplingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
