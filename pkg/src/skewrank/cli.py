"""Command-line interface: rank, classify, reduce, verify, and gen.

Exit codes: 0 success, 1 input parse failure, 2 unsupported shape or size
cap.  JSON output (``--json``) is byte-deterministic for a fixed invocation
and seed, and validates against the schema shipped as ``cli_schema.json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from . import classify as builders
from .classify import tree_classification, unicyclic_classification
from .errors import SizeCapError, UnsupportedShapeError
from .graphs import (
    Graph,
    GraphFormatError,
    classify_shape,
    diameter,
    graph6,
    parse_graph,
    serialize_graph,
)
from .matching import matching_number
from .oracle import (
    ZFORCE_CAP,
    available_checks,
    brute_min_skew_rank,
    env_rank_cap,
    run_sweep,
    skew_zero_forcing_number,
)
from .ranks import StarReductionTrace, minimum_skew_rank, smr_path
from .witness import SkewIntMatrix, min_witness_search

PARSE_ERROR = 1
UNSUPPORTED = 2


@dataclass
class RankReport:
    """Everything the rank command knows about one input graph."""

    graph6: str
    shape: str
    smr: int
    max_smr: int
    match: int
    method: str
    trace: StarReductionTrace | None = None
    witness: SkewIntMatrix | None = None
    lower_bound: int | None = None
    certified: bool = False

    def to_json_dict(self) -> dict:
        return {
            "type": "rank-report",
            "graph6": self.graph6,
            "shape": self.shape,
            "minimum_skew_rank": self.smr,
            "maximum_skew_rank": self.max_smr,
            "matching_number": self.match,
            "method": self.method,
            "trace": None
            if self.trace is None
            else {"steps": len(self.trace.steps), "terminal": self.trace.kind},
            "witness": None if self.witness is None else self.witness.to_text(),
            "lower_bound": self.lower_bound,
            "certified": self.certified,
        }


def load_schema() -> dict:
    """The JSON schema covering every ``--json`` output."""
    text = resources.files(__package__).joinpath("cli_schema.json").read_text()
    return json.loads(text)


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as handle:
        return handle.read()


def _parse_input(source: str, fmt: str) -> Graph:
    return parse_graph(_read_input(source), fmt)


def _emit(payload: dict, as_json: bool, human_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(human_lines))


def _cmd_rank(args: argparse.Namespace) -> int:
    g = _parse_input(args.input, args.format)
    shape = classify_shape(g)
    cap = env_rank_cap(10)
    trace = None
    try:
        cert = minimum_skew_rank(g)
        value, method, trace = cert.value, cert.method, cert.trace
    except UnsupportedShapeError:
        if g.edge_count > cap:
            print(
                f"unsupported shape: not tree/unicyclic (|E| exceeds oracle cap {cap})",
                file=sys.stderr,
            )
            return UNSUPPORTED
        if g.n > ZFORCE_CAP:
            print(
                f"unsupported shape: not tree/unicyclic (n exceeds forcing cap {ZFORCE_CAP})",
                file=sys.stderr,
            )
            return UNSUPPORTED
        floor = g.n - skew_zero_forcing_number(g)
        upper = brute_min_skew_rank(g, cap=cap, stop_at=floor)
        if floor != upper:
            print(
                f"unsupported shape: oracle bounds do not close ({floor}..{upper})",
                file=sys.stderr,
            )
            return UNSUPPORTED
        value, method = upper, "oracle"
    match = matching_number(g)
    report = RankReport(
        graph6=graph6(g),
        shape=shape.kind,
        smr=value,
        max_smr=2 * match,
        match=match,
        method=method,
        trace=trace,
    )
    if args.certify or args.witness:
        witness = min_witness_search(g, value, (1, 2, 3), rng=args.seed)
        if witness is None:
            witness = min_witness_search(g, value, (1, 2, 3, 4, 5), rng=args.seed)
        report.witness = witness
    if args.certify:
        if g.n <= ZFORCE_CAP:
            report.lower_bound = g.n - skew_zero_forcing_number(g)
        elif shape.kind in ("tree", "unicyclic"):
            report.lower_bound = smr_path(diameter(g) + 1)
        report.certified = (
            report.witness is not None
            and report.witness.rank() == value
            and report.lower_bound == value
        )
    lines = [
        f"graph6: {report.graph6}",
        f"shape: {report.shape}",
        f"minimum skew rank: {report.smr}",
        f"maximum skew rank: {report.max_smr}",
        f"matching number: {report.match}",
        f"method: {report.method}",
    ]
    if report.trace is not None:
        lines.append(f"reduction: {len(report.trace.steps)} steps to a {report.trace.kind}")
    if args.certify:
        lines.append(f"lower bound: {report.lower_bound}")
        lines.append(f"certified: {str(report.certified).lower()}")
    if args.witness:
        if report.witness is None:
            lines.append("witness: none found with entries up to 5")
        else:
            lines.append("witness:")
            lines.append(report.witness.to_text().rstrip("\n"))
    _emit(report.to_json_dict(), args.json, lines)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _parse_input(args.input, args.format)
    shape = classify_shape(g)
    if shape.kind == "tree":
        verdict = tree_classification(g)
    elif shape.kind == "unicyclic":
        verdict = unicyclic_classification(g)
    else:
        print(
            f"unsupported shape: classification needs a tree or connected "
            f"unicyclic graph, got {shape.kind}",
            file=sys.stderr,
        )
        return UNSUPPORTED
    payload = {
        "type": "classify-report",
        "graph6": graph6(g),
        "kind": shape.kind,
        "holds": verdict.holds,
        "case": verdict.case,
        "path_order": verdict.path_order,
        "clause": verdict.clause,
        "detail": verdict.detail,
    }
    outcome = "holds" if verdict.holds else f"fails (clause {verdict.clause})"
    lines = [
        f"graph6: {payload['graph6']}",
        f"rank equals diametrical path value: {outcome}",
        f"case: {verdict.case} (path on {verdict.path_order} vertices)",
        f"detail: {verdict.detail}",
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _parse_input(args.input, args.format)
    try:
        cert = minimum_skew_rank(g)
    except UnsupportedShapeError as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return UNSUPPORTED
    if classify_shape(g).kind != "unicyclic":
        print(
            "unsupported shape: the reduction applies to connected unicyclic graphs",
            file=sys.stderr,
        )
        return UNSUPPORTED
    trace = cert.trace
    terminal_value = cert.value - trace.s
    payload = {
        "type": "reduce-report",
        "graph6": graph6(g),
        "steps": [
            {
                "center": step.star.center,
                "leaves": list(step.star.leaves),
                "remaining_graph6": graph6(step.remaining),
            }
            for step in trace.steps
        ],
        "s": trace.s,
        "terminal": {
            "kind": trace.kind,
            "graph6": graph6(trace.terminal),
            "value": terminal_value,
        },
        "value": cert.value,
    }
    lines = [f"graph6: {payload['graph6']}"]
    for idx, step in enumerate(trace.steps, 1):
        lines.append(
            f"step {idx}: remove star (center {step.star.center}, leaves "
            f"{list(step.star.leaves)}); s={2 * idx}; remaining {graph6(step.remaining)}"
        )
    if not trace.steps:
        lines.append("no pendant stars to remove")
    lines.append(
        f"terminal: {trace.kind} {graph6(trace.terminal)} with value {terminal_value}"
    )
    lines.append(f"minimum skew rank: {terminal_value} + {trace.s} = {cert.value}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = args.checks.split(",") if args.checks else None
    report = run_sweep(
        args.family, args.n, checks=checks, seed=args.seed, jobs=args.jobs
    )
    if args.json:
        text = report.to_json()
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
    if args.csv:
        text = report.to_csv()
        if args.csv == "-":
            print(text, end="")
        else:
            with open(args.csv, "w", encoding="utf-8") as handle:
                handle.write(text)
    if not args.json or args.json != "-":
        print(f"family {report.family}, n={report.n}: {report.graph_count} graphs")
        for cid, tally in sorted(report.checks.items()):
            print(f"  {cid}: {tally['pass']} pass, {tally['fail']} fail")
        for note in report.notes:
            print(f"  note: {note}")
        for ce in report.counterexamples[:20]:
            print(f"  counterexample [{ce.check}] {ce.graph6}: {ce.details}")
    return 0 if report.ok else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    name = args.builder
    params = args.params
    if name == "path":
        g = builders.path(_int(params, 0))
    elif name == "cycle":
        g = builders.cycle(_int(params, 0))
    elif name == "n-sun":
        g = builders.n_sun(_int(params, 0))
    elif name == "centipede":
        legs = _parse_attachment_spec(params[1]) if len(params) > 1 else {}
        g = builders.centipede(_int(params, 0), legs)
    elif name == "dandelion":
        if len(params) < 2:
            raise ValueError("dandelion needs a cycle length and an attachment spec")
        g = builders.dandelion(_int(params, 0), _parse_attachment_spec(params[1]))
    elif name == "pineapple":
        if len(params) != 4:
            raise ValueError("pineapple needs: variant n j i")
        g = builders.pineapple_graph(*(int(p) for p in params))
    else:
        raise ValueError(f"unknown builder {name!r}")
    print(serialize_graph(g, args.format), end="")
    return 0


def _int(params: list[str], idx: int) -> int:
    if len(params) <= idx:
        raise ValueError("missing numeric parameter")
    return int(params[idx])


def _parse_attachment_spec(spec: str) -> dict[int, int]:
    """Parse '2:1,3:2' into {2: 1, 3: 2}."""
    out: dict[int, int] = {}
    for item in spec.split(","):
        if not item:
            continue
        idx, _, count = item.partition(":")
        out[int(idx)] = int(count) if count else 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="Exact minimum skew rank of trees and unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument(
            "--format",
            choices=("auto", "edge-list", "graph6"),
            default="auto",
            help="input format (default: auto-detect)",
        )
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_rank = sub.add_parser("rank", help="compute the minimum skew rank")
    add_io(p_rank)
    p_rank.add_argument("--witness", action="store_true", help="print a witness matrix")
    p_rank.add_argument(
        "--certify",
        action="store_true",
        help="attach a witness and an independent lower bound",
    )
    p_rank.add_argument("--seed", type=int, default=0, help="randomized-search seed")
    p_rank.set_defaults(func=_cmd_rank)

    p_classify = sub.add_parser(
        "classify", help="decide rank equality with the diametrical path"
    )
    add_io(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_reduce = sub.add_parser("reduce", help="print the pendant-star reduction trace")
    add_io(p_reduce)
    p_reduce.set_defaults(func=_cmd_reduce)

    p_verify = sub.add_parser("verify", help="run an enumeration sweep of checks")
    p_verify.add_argument("family", choices=("trees", "unicyclic", "labeled"))
    p_verify.add_argument("n", type=int)
    p_verify.add_argument(
        "--checks",
        help="comma-separated check ids (default: all applicable); "
        f"known: {', '.join(cid for cid, _ in available_checks())}",
    )
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", metavar="PATH", help="write the JSON report (- for stdout)")
    p_verify.add_argument("--csv", metavar="PATH", help="write the CSV summary (- for stdout)")
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="emit fixture graphs")
    p_gen.add_argument(
        "builder",
        choices=("path", "cycle", "centipede", "n-sun", "dandelion", "pineapple"),
    )
    p_gen.add_argument("params", nargs="*", help="builder parameters")
    p_gen.add_argument(
        "--format", choices=("graph6", "edge-list"), default="graph6"
    )
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except UnsupportedShapeError as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UNSUPPORTED


if __name__ == "__main__":
    raise SystemExit(main())
