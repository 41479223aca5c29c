"""Command-line entry point: ``smdt <subcommand> ...``.

Results go to stdout (JSON by default, CSV where tabular), diagnostics to
stderr.  Exit status: 0 ok, 1 failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .census import CSV_COLUMNS, census, nielsen_table
from .errors import SmdtError
from .kmp import build_automaton, transfer_matrix
from .oracle import evasive_certificate, exact_complexity
from .pattern import Pattern, bifixes, is_bifix_free, periods
from .search import (
    TextOracle,
    find_bifix_free,
    find_general,
    query_budget,
    worst_case_queries,
)
from .spectral import DEFAULT_HORIZON, DEFAULT_TOL, charpoly_det, root_profile, skolem_verdict
from .tuza import b1_bound, b2_bound, census_b1_b2, tuza_verdict
from .verify import LEVELS, run_all


def _emit(obj, fmt: str = "json", out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv" and isinstance(obj, list) and obj and isinstance(obj[0], dict):
        w = csv.DictWriter(out, fieldnames=list(obj[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(obj)
    else:
        out.write(json.dumps(obj, indent=2) + "\n")


def _pattern(args) -> Pattern:
    return Pattern.parse(args.pattern, args.sigma)


def cmd_analyze(args) -> int:
    p = _pattern(args)
    ps = periods(p)
    report = {
        "pattern": str(p),
        "sigma": p.sigma,
        "m": p.m,
        "periods": list(ps.periods),
        "c": ps.gcd_c,
        "bifixes": sorted(bifixes(p)),
        "bifix_free": is_bifix_free(p),
        "tuza": tuza_verdict(p).as_dict(),
    }
    if p.sigma == 2:
        report["charpoly"] = charpoly_det(p).desc
        report["skolem"] = skolem_verdict(p, args.horizon).as_dict()
    _emit(report)
    return 0


def cmd_automaton(args) -> int:
    p = _pattern(args)
    aut = build_automaton(p)
    report = {
        "pattern": str(p),
        "states": p.m + 1,
        "accepting": aut.accepting,
        "delta": {str(q): list(aut.delta[q - 1]) for q in range(1, p.m + 2)},
    }
    if p.sigma == 2:
        report["transfer_matrix"] = transfer_matrix(p).tolist()
    _emit(report)
    return 0


def cmd_search(args) -> int:
    p = _pattern(args)
    searcher = find_bifix_free if args.algorithm == "bifix-free" else find_general
    if args.worst_case:
        if args.n is None:
            raise SmdtError("--worst-case needs --n")
        worst = worst_case_queries(p, args.n, searcher)
        _emit({"pattern": str(p), "n": args.n, "max_queries": worst, "budget": query_budget(p, args.n)})
        return 0
    if args.text is None:
        raise SmdtError("search needs a text unless --worst-case is given")
    text = tuple(int(ch) for ch in args.text)
    out = searcher(TextOracle(text), p)
    _emit(
        {
            "found": out.found,
            "position": out.first_occurrence,
            "queries": out.queries_used,
            "budget": query_budget(p, len(text)),
        }
    )
    return 0


def cmd_complexity(args) -> int:
    p = _pattern(args)
    if args.table:
        rows = [
            {"n": n, "D": d, "evasive_at_n": flag}
            for n, d, flag in evasive_certificate(p, args.n, n_min=args.n_min)
        ]
        _emit(rows, "csv" if args.format == "csv" else "json")
    else:
        _emit(exact_complexity(p, args.n).as_dict())
    return 0


def cmd_tuza(args) -> int:
    _emit(tuza_verdict(_pattern(args)).as_dict())
    return 0


def cmd_spectral(args) -> int:
    p = _pattern(args)
    poly = charpoly_det(p)
    _emit(
        {
            "pattern": str(p),
            "charpoly": poly.desc,
            "charpoly_text": str(poly),
            "root_profile": root_profile(poly, args.tol).as_dict(),
            "skolem": skolem_verdict(p, args.horizon, args.tol).as_dict(),
        }
    )
    return 0


def cmd_census(args) -> int:
    rows = [census(m, args.sigma, jobs=args.jobs) for m in args.length]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(r.csv_values())
    else:
        _emit([r.as_dict() for r in rows])
    return 0


def cmd_census_b(args) -> int:
    rows = []
    for m in args.length:
        n1, n2 = census_b1_b2(m, args.sigma)
        bound1, bound2 = b1_bound(m, args.sigma), b2_bound(m, args.sigma)
        rows.append(
            {
                "m": m,
                "sigma": args.sigma,
                "b1": n1,
                "b2": n2,
                "b1_bound": bound1,
                "b2_bound": bound2,
                "b1_margin": bound1 - n1,
                "b2_margin": bound2 - n2,
            }
        )
    _emit(rows, args.format)
    return 0


def cmd_nielsen(args) -> int:
    sigmas = args.sigma_list or [2]
    rows = [r.as_dict() for r in nielsen_table(sigmas, args.m, jobs=args.jobs)]
    _emit(rows, args.format)
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.level, seed=args.seed, jobs=args.jobs)
    for r in results:
        print(r.line(), flush=True)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")

    pat = argparse.ArgumentParser(add_help=False)
    pat.add_argument("pattern", help="digit string, e.g. 1010")
    pat.add_argument("--sigma", type=int, default=None, help="alphabet size (default: inferred)")

    parser = argparse.ArgumentParser(prog="smdt", description="Decision-tree complexity of string matching.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common, pat], help="periods, bifixes, charpoly and verdicts")
    s.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("automaton", parents=[common, pat], help="KMP transition table and T_p")
    s.set_defaults(func=cmd_automaton)

    s = sub.add_parser("search", parents=[common, pat], help="run the query algorithm on a text")
    s.add_argument("text", nargs="?")
    s.add_argument("--worst-case", action="store_true", help="exhaust all sigma^N texts")
    s.add_argument("--n", type=int)
    s.add_argument("--algorithm", choices=("general", "bifix-free"), default="general")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("complexity", parents=[common, pat], help="exact D_p(n) by minimax")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--n-min", type=int, default=None, help="first row of --table (default m)")
    s.add_argument("--table", action="store_true", help="table of (n, D_p(n)) up to --n")
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("tuza", parents=[common, pat], help="Tuza criteria with witnesses")
    s.set_defaults(func=cmd_tuza)

    s = sub.add_parser("spectral", parents=[common, pat], help="charpoly, roots and algebraic verdict")
    s.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.set_defaults(func=cmd_spectral)

    s = sub.add_parser("census", parents=[common], help="classify every pattern of the given lengths")
    s.add_argument("--length", "--m", type=int, nargs="+", required=True)
    s.add_argument("--sigma", type=int, default=2)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("census-b", parents=[common], help="exact |B1|, |B2| and bound margins")
    s.add_argument("--length", "--m", type=int, nargs="+", required=True)
    s.add_argument("--sigma", type=int, default=2)
    s.set_defaults(func=cmd_census_b)

    s = sub.add_parser("nielsen", parents=[common], help="bifix-free fractions against the known limits")
    s.add_argument("--sigma", dest="sigma_list", type=int, action="append")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_nielsen)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    s.add_argument("--level", choices=LEVELS, default="desk")
    s.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SmdtError as exc:
        print(f"smdt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
