"""Command-line interface.

Exit codes: 0 on success, 1 when a verification suite reports a
counterexample, 2 on invalid input or an exceeded budget.  JSON output is
canonical (sorted keys, no whitespace) so identical inputs give identical
bytes; the text format is for humans and makes no stability promise.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .budget import DEFAULT_BUDGET
from .bounds import (
    BoundReport,
    CodeParams,
    density_experiment,
    ekr_wd,
    griesmer_type,
    i_lower_bound,
    intersecting_dk,
    minimal_code_bound,
    search_shortest_intersecting,
    singleton,
)
from .codes import LinearCode, analyze_code
from .fileio import canonical_json, code_to_dict, parse_code
from .matroid import matroid_from_code, vertical_connectivity
from .qmatroid import q_vertical_connectivity, qmatroid_from_rank_code
from .rankcodes import (
    RankMetricCode,
    is_intersecting_rank,
    min_rank_distance,
    rank_minimal_supports,
)
from .verify import run_suites


def _read_code(path: str):
    if path == "-":
        return parse_code(json.load(sys.stdin))
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(json.load(fh))


def _emit(doc, fmt: str) -> None:
    if fmt == "json":
        print(canonical_json(doc))
    else:
        _emit_text(doc)


def _emit_text(doc, indent: str = "") -> None:
    if isinstance(doc, dict):
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent)
                print()
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{doc}")


def _length_bounds(n: int, k: int, q: int) -> list[BoundReport]:
    gt = griesmer_type(k, q)
    plotkin = i_lower_bound(k, q)
    return [
        BoundReport("length-griesmer-type", True, Fraction(gt), n >= gt),
        BoundReport("length-plotkin-type", True, plotkin, n >= plotkin),
    ]


def _bound_battery(params: CodeParams) -> list[BoundReport]:
    reports = [singleton(params), intersecting_dk(params)]
    reports.extend(_length_bounds(params.n, params.k, params.q))
    reports.append(minimal_code_bound(params))
    if params.t is not None:
        reports.append(ekr_wd(params.n, params.d, params.t, params.q))
    return reports


def _cmd_analyze(args) -> int:
    code = _read_code(args.code)
    if isinstance(code, RankMetricCode):
        intersecting, _ = is_intersecting_rank(code, budget=args.budget)
        doc = {
            "kind": "rank-metric",
            "p": code.extension.base.p,
            "m_ext": code.extension.degree,
            "n": code.n,
            "k": code.k,
            "min_rank_distance": min_rank_distance(code, budget=args.budget),
            "is_intersecting": intersecting,
            "minimal_support_count": len(
                rank_minimal_supports(code, budget=args.budget)
            ),
        }
        _emit(doc, args.format)
        return 0
    report = analyze_code(code, budget=args.budget)
    t = report.intersecting_degree if report.intersecting_degree >= 1 else None
    params = CodeParams(n=report.n, k=report.k, d=report.d, q=report.q, t=t)
    doc = report.to_dict()
    doc["kind"] = "hamming"
    doc["bounds"] = [b.to_dict() for b in _bound_battery(params)]
    _emit(doc, args.format)
    return 0


def _cmd_kappa(args) -> int:
    code = _read_code(args.code)
    if not isinstance(code, LinearCode):
        raise ValueError("kappa expects a Hamming-metric code; use qkappa for rank-metric input")
    kappa, sep = vertical_connectivity(matroid_from_code(code))
    doc = {
        "kappa": kappa,
        "t": None if sep is None else sep.t,
        "lambda": None if sep is None else sep.lambda_value,
        "witness_subset": None if sep is None else list(sep.X),
    }
    _emit(doc, args.format)
    return 0


def _cmd_qkappa(args) -> int:
    code = _read_code(args.code)
    if not isinstance(code, RankMetricCode):
        raise ValueError("qkappa expects a rank-metric code document (with m_ext)")
    kappa, sep = q_vertical_connectivity(
        qmatroid_from_rank_code(code), budget=args.budget
    )
    doc = {
        "kappa": kappa,
        "t": None if sep is None else sep.t,
        "lambda": None if sep is None else sep.lambda_value,
        "a_basis": None if sep is None else [list(r) for r in sep.A.basis.rows()],
        "v_basis": None if sep is None else [list(r) for r in sep.V.basis.rows()],
    }
    _emit(doc, args.format)
    return 0


def _cmd_bounds(args) -> int:
    params = CodeParams(n=args.n, k=args.k, d=args.d, q=args.q, t=args.t)
    _emit([b.to_dict() for b in _bound_battery(params)], args.format)
    return 0


def _cmd_verify(args) -> int:
    reports = run_suites(args.suite, threads=args.threads, budget=args.budget)
    for report in reports:
        if args.format == "json":
            print(canonical_json(report.to_dict()))
        else:
            status = "pass" if report.passed else "fail"
            print(f"{report.suite}: {status} ({report.checks} checks)")
            if not report.passed:
                print(f"  counterexample: {canonical_json(report.counterexample)}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_search_shortest(args) -> int:
    n, witness = search_shortest_intersecting(
        args.k, args.q, args.n_max, budget=args.budget, threads=args.threads
    )
    if args.format == "csv":
        print("k,q,n")
        print(f"{args.k},{args.q},{'' if n is None else n}")
        return 0
    doc: dict = {"k": args.k, "q": args.q, "found": n is not None}
    if n is None:
        doc["n_max"] = args.n_max
    else:
        doc["n"] = n
        doc["witness"] = code_to_dict(witness)
    _emit(doc, args.format)
    return 0


def _cmd_density(args) -> int:
    q_list = [int(part) for part in args.q_list.split(",") if part]
    if not q_list:
        raise ValueError("q list is empty")
    points = density_experiment(
        args.n, args.k, q_list, args.samples, args.seed,
        budget=args.budget, threads=args.threads,
    )
    if args.format == "csv":
        print("q,fraction,samples,seed")
        for point in points:
            print(f"{point.q},{float(point.fraction)},{point.samples},{args.seed}")
        return 0
    doc = [
        {
            "q": point.q,
            "intersecting": point.intersecting,
            "samples": point.samples,
            "fraction": float(point.fraction),
            "seed": args.seed,
        }
        for point in points
    ]
    _emit(doc, args.format)
    return 0


def _add_common(sub, *, formats=("json", "text"), default_format="json") -> None:
    sub.add_argument("--format", choices=list(formats), default=default_format)
    sub.add_argument(
        "--budget", type=int, default=DEFAULT_BUDGET,
        help="object-count ceiling for enumerations (default 10^6)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intercode",
        description="Exact analysis of intersecting codes and their (q-)matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a code document")
    p.add_argument("code", help="path to a code JSON document, or - for stdin")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("kappa", help="vertical connectivity of a code's matroid")
    p.add_argument("code")
    _add_common(p)
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("qkappa", help="vertical connectivity of a rank-metric code's q-matroid")
    p.add_argument("code")
    _add_common(p)
    p.set_defaults(func=_cmd_qkappa)

    p = sub.add_parser("bounds", help="evaluate the bound battery for given parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="intersecting degree, if known")
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="run the replication suites")
    p.add_argument("suite", choices=["classical", "q", "all"])
    p.add_argument("--threads", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search-shortest", help="shortest intersecting code of dimension k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, formats=("json", "csv", "text"))
    p.set_defaults(func=_cmd_search_shortest)

    p = sub.add_parser("density", help="Monte Carlo intersecting fraction per field size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q-list", required=True, help="comma-separated field sizes")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, formats=("csv", "json", "text"), default_format="csv")
    p.set_defaults(func=_cmd_density)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
