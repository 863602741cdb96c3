"""Command-line front end.  Exit codes: 0 success, 1 a check failed, 2 usage error."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import TriDyckError
from .lattice import build_lattice, interval_polynomial
from .partition import (
    Partition,
    enumerate_triangular_partitions,
    format_partition,
    is_triangular,
    parse_partition,
    slope_bounds,
)
from .poly import homogenize
from .schur import a_lambda_polynomial, decompose_schur_2var, decompose_schur_3var
from .simsym import enumerate_sim_sym
from .tableaux import (
    row_regular_tableau,
    statistics,
    top_down_tableau,
    triangular_tableau,
)
from .verify import SUITES, SuiteBounds, run_suite


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


def _tableau(lam: Partition, kind: str):
    if kind == "triangular":
        return triangular_tableau(lam)
    if kind == "topdown":
        return top_down_tableau(lam)
    if kind.startswith("rowregular:"):
        if len(lam) != 2:
            raise UsageError("row-regular tableaux need a 2-part shape")
        try:
            i = int(kind.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad row-regular index in {kind!r}") from exc
        return row_regular_tableau(lam[0], lam[1], i)
    raise UsageError(f"unknown tableau kind {kind!r}")


def cmd_check_triangular(args) -> int:
    lam = args.partition
    tri = is_triangular(lam)
    out = {"partition": list(lam), "triangular": tri}
    text = f"{format_partition(lam)}: {'triangular' if tri else 'not triangular'}"
    if lam:
        lo, hi = slope_bounds(lam)
        out["slope_bounds"] = [str(lo), str(hi)]
        text += f" (slope bounds {lo}, {hi})"
    _emit(out, args.json, text)
    return 0


def cmd_enumerate(args) -> int:
    shapes = enumerate_triangular_partitions(args.size)
    if args.count:
        _emit({"size": args.size, "count": len(shapes)}, args.json, str(len(shapes)))
    else:
        _emit([list(p) for p in shapes], args.json, "\n".join(format_partition(p) for p in shapes))
    return 0


def cmd_stats(args) -> int:
    theta = _tableau(args.lam, args.tableau)
    st = statistics(theta, args.mu)
    print(json.dumps(st.to_json()))
    return 0


def cmd_tableau(args) -> int:
    theta = _tableau(args.lam, args.kind)
    _emit(theta.to_json(), args.json, theta.to_text())
    return 0


def cmd_aqt(args) -> int:
    p = a_lambda_polynomial(args.lam)
    if args.schur:
        exp = decompose_schur_2var(p)
        _emit({"polynomial": p.to_json(), "schur": exp.to_json(), "positive": exp.is_positive()},
              args.json, str(exp))
    else:
        _emit(p.to_json(), args.json, str(p))
    return 0


def cmd_simsym(args) -> int:
    found = enumerate_sim_sym(args.lam)
    if args.list:
        _emit([t.to_json() for t in found], args.json, "\n".join(t.to_text() for t in found))
    else:
        _emit({"shape": list(args.lam), "count": len(found)}, args.json, str(len(found)))
    return 0


def cmd_lattice(args) -> int:
    lat = build_lattice(args.lam)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(lat.to_dot())
    if args.stats or not args.json:
        stats = {"nodes": len(lat), "covers": len(lat.covers), "intervals": lat.interval_count()}
        _emit(stats, args.json, f"nodes {stats['nodes']}  covers {stats['covers']}  intervals {stats['intervals']}")
    else:
        print(json.dumps(lat.to_json()))
    return 0


def cmd_intervals(args) -> int:
    theta = _tableau(args.lam, args.tableau)
    p = interval_polynomial(args.lam, theta)
    out = {"polynomial": p.to_json()}
    text = str(p)
    if args.schur3:
        exp = decompose_schur_3var(homogenize(p, args.lam.size))
        out["schur3"] = exp.to_json()
        text += "\n" + str(exp)
    _emit(out, args.json, text)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, SuiteBounds(max_size=args.max_size, slow=args.slow))
    if args.json_file:
        with open(args.json_file, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    if args.json:
        sys.stdout.write(report.dumps())
    else:
        counts = report.summary()
        print(f"{report.suite}: {'PASS' if report.passed else 'FAIL'}  "
              + "  ".join(f"{k}={v}" for k, v in counts.items()))
        for case in report.failures():
            print(f"  fail {case.input}: {json.dumps(case.details)}")
    return 0 if report.passed else 1


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except TriDyckError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 2 on usage errors
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tridyck", description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check-triangular")
    p.add_argument("partition", type=_partition_arg)
    p.set_defaults(func=cmd_check_triangular)

    p = sub.add_parser("enumerate-triangular")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--tableau", default="triangular")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("tableau")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--kind", default="triangular")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("aqt")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--schur", action="store_true")
    p.set_defaults(func=cmd_aqt)

    p = sub.add_parser("simsym")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_simsym)

    p = sub.add_parser("lattice")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("intervals")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--tableau", default="topdown")
    p.add_argument("--schur3", action="store_true")
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("verify")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-size", type=int)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--json", dest="json_file", metavar="FILE")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tridyck: error: {exc}", file=sys.stderr)
        return 2
    except TriDyckError as exc:
        print(f"tridyck: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
