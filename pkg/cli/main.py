"""
Command-line front end.

    python -m cli metafib gen --r pow2 --k 10 --format csv
    python -m cli twd chain --model binary --end fib --k 8
    python -m cli yoccoz build --classes 1/3,2/3 --depth 3 --dot out.dot

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from cli.formatters import OutputFormat, render, to_json
from cli.refs import parse_id_list, parse_int_list, parse_rspec, resolve_end, resolve_model
from config import LOG_CONFIG, TWD_CONFIG, YOCCOZ_CONFIG, check_config
from errors import LabError, PreconditionFailed
from metafib import (
    MetaFibSeq,
    RSpec,
    check_doubling,
    check_lower_bound,
    check_plateau_jump,
    check_upper_bound,
    gamma,
    generate,
    growth_report,
    infer_r,
)
from puzzle import load_puzzle, puzzle_to_dot, return_nest, tree_of_puzzle, validate_markov
from twd import ReturnAnalyzer, ReturnChain, chain_r_values, validate
from yoccoz import YoccozPuzzleBuilder, parse_classes

logger = logging.getLogger(__name__)


# ====================== METAFIB ======================

def _sequence_rows(seq: MetaFibSeq, r) -> List[Dict]:
    return [{"k": k, "r": r(k), "n": seq.n(k)} for k in range(1, seq.K + 1)]


def cmd_metafib_gen(args) -> str:
    r = parse_rspec(args.r)
    seq = generate(r, args.k)
    rows = _sequence_rows(seq, r)
    payload = {
        "spec": r.model_dump(mode="json", exclude_none=True),
        "window": [seq.k_lo, seq.K],
        "values": seq.values,
        "r": r.values(seq.K),
    }
    return render(payload, args.format, rows=rows, columns=["k", "r", "n"])


def cmd_metafib_infer(args) -> str:
    seq = MetaFibSeq.from_values(parse_int_list(args.values))
    r = infer_r(seq)
    rows = _sequence_rows(seq, r)
    return render({"r": r.values(seq.K), "values": seq.values}, args.format, rows=rows, columns=["k", "r", "n"])


def cmd_metafib_bounds(args) -> str:
    r = parse_rspec(args.r)
    seq = generate(r, args.k)
    checks = []
    if args.J is not None:
        checks.append(check_lower_bound(seq, args.J))
    if args.M is not None:
        checks.append(check_upper_bound(seq, r, args.M))
        checks.append(check_plateau_jump(seq, r, args.M))
    checks.append(check_doubling(seq, r))
    payload = [c.model_dump(mode="json") for c in checks]
    rows = [{"bound": c.bound, "passed": c.passed, "first_violation": c.first_violation} for c in checks]
    return render(payload, args.format, rows=rows)


def cmd_metafib_gamma(args) -> str:
    result = gamma(args.r, args.tol)
    payload = result.model_dump(mode="json")
    if args.report is not None:
        seq = generate(RSpec.constant(args.r), args.report)
        payload["report"] = growth_report(seq, args.r, args.tol).model_dump(mode="json")
    return render(payload, args.format, rows=[result.model_dump(mode="json")])


# ====================== TWD ======================

def _chain_payload(chain: ReturnChain) -> Dict:
    try:
        r = chain_r_values(chain)
    except PreconditionFailed as e:
        logger.warning(f"no r-table for this chain: {e}")
        r = None
    return {
        "k": list(chain.indices()),
        "l": chain.levels,
        "n": chain.times,
        "r": r,
        "nonrecurrent_at": chain.nonrecurrent_at,
    }


def _chain_rows(payload: Dict) -> List[Dict]:
    r = payload["r"] or [None] * len(payload["k"])
    return [{"k": k, "l": l, "n": n, "r": rk} for k, l, n, rk in zip(payload["k"], payload["l"], payload["n"], r)]


def cmd_twd_validate(args) -> str:
    report = validate(resolve_model(args.model), args.depth)
    payload = report.model_dump(mode="json")
    payload["clean"] = report.clean
    rows = [v.model_dump(mode="json") for v in report.violations]
    return render(payload, args.format, rows=rows, columns=["kind", "witness", "detail"])


def cmd_twd_chain(args) -> str:
    analyzer = ReturnAnalyzer(resolve_model(args.model))
    chain = analyzer.minimal_return_chain(
        resolve_end(args.end), l0=args.l0, K=args.k, n_max=args.n_max, k_lo=args.k_lo, scan_budget=args.scan,
    )
    payload = _chain_payload(chain)
    return render(payload, args.format, rows=_chain_rows(payload), columns=["k", "l", "n", "r"])


def cmd_twd_period(args) -> str:
    analyzer = ReturnAnalyzer(resolve_model(args.model))
    report = analyzer.detect_period(resolve_end(args.end), args.probe, args.n_max, args.window)
    payload = report.model_dump(mode="json")
    payload["periodic"] = report.periodic
    return render(payload, args.format, rows=[{"period": report.period, "probe_level": report.probe_level}])


# ====================== PUZZLE ======================

def cmd_puzzle_validate(args) -> str:
    report = validate_markov(load_puzzle(args.puzzle))
    payload = report.model_dump(mode="json")
    payload["clean"] = report.clean
    rows = [v.model_dump(mode="json") for v in report.violations]
    return render(payload, args.format, rows=rows, columns=["kind", "witness", "detail"])


def cmd_puzzle_tree(args) -> str:
    puzzle = load_puzzle(args.puzzle)
    if args.format == OutputFormat.DOT:
        return puzzle_to_dot(puzzle)
    tree = tree_of_puzzle(puzzle)
    payload = tree.to_json()
    rows = [dict(v, image=next((f["to"] for f in payload["F"] if f["from"] == v["id"]), None))
            for v in payload["vertices"]]
    return render(payload, args.format, rows=rows, columns=["id", "level", "parent", "image"])


def _nest_output(nest, fmt: str) -> str:
    payload = nest.model_dump(mode="json")
    rows = [{"k": nest.k_lo + i, "l": l, "n": n, "piece": p}
            for i, (l, n, p) in enumerate(zip(nest.levels, nest.times, nest.pieces))]
    return render(payload, fmt, rows=rows, columns=["k", "l", "n", "piece"])


def cmd_puzzle_nest(args) -> str:
    puzzle = load_puzzle(args.puzzle)
    nest = return_nest(puzzle, parse_id_list(args.nest), l0=args.l0, K=args.k, k_lo=args.k_lo)
    return _nest_output(nest, args.format)


# ====================== YOCCOZ ======================

def cmd_yoccoz_build(args) -> str:
    builder = YoccozPuzzleBuilder(parse_classes(args.classes), args.depth)
    puzzle = builder.build()
    if args.dot:
        Path(args.dot).write_text(puzzle_to_dot(puzzle))
    if args.format == OutputFormat.DOT:
        return puzzle_to_dot(puzzle)
    rows = [{"depth": d, "pieces": c} for d, c in puzzle.counts().items()]
    return render(puzzle.to_json(), args.format, rows=rows, columns=["depth", "pieces"])


def cmd_yoccoz_nest(args) -> str:
    builder = YoccozPuzzleBuilder(parse_classes(args.classes), args.depth)
    nest = return_nest(builder.build(), builder.critical_nest(), l0=args.l0, K=args.k, k_lo=args.k_lo)
    return _nest_output(nest, args.format)


# ====================== PARSER ======================

def _add_format(parser: argparse.ArgumentParser, choices=("json", "csv"), default="json"):
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="returns-lab", description="Return times of trees with dynamics")
    groups = parser.add_subparsers(dest="group", required=True)

    # metafib
    metafib = groups.add_parser("metafib", help="variable-r meta-Fibonacci sequences").add_subparsers(
        dest="command", required=True)

    p = metafib.add_parser("gen", help="generate n_1..n_K")
    p.add_argument("--r", required=True, help="r ref, e.g. pow2, const:2, indicator:pow2:2:1")
    p.add_argument("--k", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_metafib_gen)

    p = metafib.add_parser("infer", help="recover r(k) from values")
    p.add_argument("--values", required=True, help="comma-separated n_1..n_K")
    _add_format(p)
    p.set_defaults(func=cmd_metafib_infer)

    p = metafib.add_parser("bounds", help="check growth bounds on a generated sequence")
    p.add_argument("--r", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--J", type=int, help="cascade bound for the lower bound")
    p.add_argument("--M", type=int, help="growth factor for the upper bound")
    _add_format(p)
    p.set_defaults(func=cmd_metafib_bounds)

    p = metafib.add_parser("gamma", help="growth constant gamma_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--report", type=int, metavar="K", help="also report n_k / gamma^k for constant r up to K")
    _add_format(p)
    p.set_defaults(func=cmd_metafib_gamma)

    # twd
    twd = groups.add_parser("twd", help="trees with dynamics").add_subparsers(dest="command", required=True)

    p = twd.add_parser("validate", help="check the tree-with-dynamics axioms")
    p.add_argument("--model", required=True)
    p.add_argument("--depth", type=int, default=TWD_CONFIG["validate_depth"])
    _add_format(p)
    p.set_defaults(func=cmd_twd_validate)

    p = twd.add_parser("chain", help="minimal return chain of an end")
    p.add_argument("--model", required=True)
    p.add_argument("--end", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l0", type=int, default=0)
    p.add_argument("--k-lo", dest="k_lo", type=int, default=0)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--scan", type=int, help="levels scanned per chain step")
    _add_format(p)
    p.set_defaults(func=cmd_twd_chain)

    p = twd.add_parser("period", help="minimal period of an end")
    p.add_argument("--model", required=True)
    p.add_argument("--end", required=True)
    p.add_argument("--probe", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_twd_period)

    # puzzle
    puzzle = groups.add_parser("puzzle", help="abstract puzzles").add_subparsers(dest="command", required=True)

    p = puzzle.add_parser("validate", help="Markov report of a puzzle JSON file")
    p.add_argument("--puzzle", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_puzzle_validate)

    p = puzzle.add_parser("tree", help="tree with dynamics of a puzzle")
    p.add_argument("--puzzle", required=True)
    _add_format(p, choices=("json", "csv", "dot"))
    p.set_defaults(func=cmd_puzzle_tree)

    p = puzzle.add_parser("nest", help="minimal return nest through a nest of pieces")
    p.add_argument("--puzzle", required=True)
    p.add_argument("--nest", required=True, help="comma-separated piece ids at consecutive depths")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--l0", type=int, default=0)
    p.add_argument("--k-lo", dest="k_lo", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_puzzle_nest)

    # yoccoz
    yoccoz = groups.add_parser("yoccoz", help="combinatorial Yoccoz puzzles").add_subparsers(
        dest="command", required=True)

    p = yoccoz.add_parser("build", help="puzzle from an invariant angle cycle")
    p.add_argument("--classes", required=True, help='e.g. "1/3,2/3"; several classes separated by ";"')
    p.add_argument("--depth", type=int, default=YOCCOZ_CONFIG["max_depth"])
    p.add_argument("--dot", help="also write the derived tree as DOT to this file")
    _add_format(p, choices=("json", "csv", "dot"))
    p.set_defaults(func=cmd_yoccoz_build)

    p = yoccoz.add_parser("nest", help="return nest of the critical pieces")
    p.add_argument("--classes", required=True)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--l0", type=int, default=0)
    p.add_argument("--k-lo", dest="k_lo", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_yoccoz_nest)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(**LOG_CONFIG)
    check_config()

    command: Callable = args.func
    try:
        output = command(args)
    except LabError as e:
        logger.debug(f"{args.group} {args.command} failed: {e}")
        sys.stderr.write(to_json(e.to_dict()))
        return 1
    except ValueError as e:
        sys.stderr.write(to_json({"error": "invalid_argument", "message": str(e)}))
        return 1

    sys.stdout.write(output)
    return 0


def main():
    sys.exit(run())
