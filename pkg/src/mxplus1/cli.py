"""Command-line surface binding the library into reproducible runs.

Exit codes are a stable contract: 0 success (and, for `oracle`, table
agreement), 1 verified-property failure (oracle mismatch, periodicity
violation), 2 usage error.  Identical flags produce byte-identical
output, so runs can be diffed and wired into CI directly.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .density import MAX_SERIES_K, density_series
from .diophantine import (MAX_CYCLE_SEARCH_K, classify, equation_of_vector,
                          find_cycles, residue_of_vector)
from .oracle import MAX_ORACLE_K, count_window, discrepancy_scan
from .trajectory import (MapParams, iterate, parity_vector,
                         stopping_time_actual, stopping_time_coefficient)

MAX_PERIODICITY_K = 20


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _map_params(args) -> MapParams:
    return MapParams(args.m)


def _density_table(series, variant: str) -> str:
    cols = {"both": ("Terras", "new"), "terras": ("Terras",), "new": ("new",)}[variant]
    lines = ["  ".join(["k".rjust(6)] + [c.rjust(14) for c in cols])]
    for pt in series.points:
        vals = {"Terras": pt.F_terras, "new": pt.F_new}
        row = [str(pt.k).rjust(6)] + [f"{vals[c]:.8g}".rjust(14) for c in cols]
        lines.append("  ".join(row))
    return "\n".join(lines) + "\n"


def _cmd_density(args) -> int:
    if args.k_max < 0:
        return _usage_error("--k-max must be non-negative")
    if args.k_max > MAX_SERIES_K:
        return _usage_error(f"--k-max exceeds the practical bound ({MAX_SERIES_K})")
    if args.every < 1:
        return _usage_error("--every must be positive")
    series = density_series(_map_params(args), args.k_max, args.every)
    if args.format == "csv":
        text = report.to_csv(series)
    elif args.format == "json":
        text = report.to_json(series, variant=args.variant)
    elif args.format == "plot":
        text = report.to_plot_data(series)
    else:
        text = _density_table(series, args.variant)
    _write(text, args.out)
    return 0


def _cmd_oracle(args) -> int:
    if not 1 <= args.k <= MAX_ORACLE_K:
        return _usage_error(f"--k must be in 1..{MAX_ORACLE_K} (brute-force budget)")
    if args.offset < 1:
        return _usage_error("--offset must be >= 1")
    if args.jobs < 1:
        return _usage_error("--jobs must be >= 1")
    rep = count_window(_map_params(args), args.k, args.offset, jobs=args.jobs)
    if args.format == "json":
        text = report.to_json([rep])
    else:
        text = (
            f"m {rep.m} k {rep.k} offset {rep.offset}\n"
            f"table_N {rep.table_N}\n"
            f"count_coefficient_gt {rep.count_coefficient_gt}\n"
            f"count_coefficient_ge {rep.count_coefficient_ge}\n"
            f"count_actual_gt {rep.count_actual_gt}\n"
            f"discrepancy {rep.discrepancy}\n"
            f"match {'yes' if rep.matches_table else 'no'}\n"
        )
    _write(text, args.out)
    return 0 if rep.matches_table else 1


def _cmd_trajectory(args) -> int:
    if args.steps < 0:
        return _usage_error("--steps must be non-negative")
    traj = iterate(_map_params(args), args.n, args.steps)
    _write(" ".join(str(v) for v in traj.values) + "\n", args.out)
    return 0


def _cmd_stopping(args) -> int:
    if args.n < 1:
        return _usage_error("--n must be >= 1 for stopping times")
    if args.cap < 1:
        return _usage_error("--cap must be positive")
    p = _map_params(args)
    actual = stopping_time_actual(p, args.n, args.cap)
    coeff = stopping_time_coefficient(p, args.n, args.cap)
    _write(f"actual: {actual}\ncoefficient: {coeff}\n", args.out)
    return 0


def _cmd_vector(args) -> int:
    if args.k < 1:
        return _usage_error("--k must be positive")
    p = _map_params(args)
    w = parity_vector(p, args.n, args.k)
    eq = equation_of_vector(p, w)
    r = residue_of_vector(p, w)
    # a is odd and b a power of two, so a != b for every non-empty vector
    kind = classify(eq).value
    text = (
        f"bits {''.join(map(str, w.bits))}\n"
        f"equation {eq.c} = {eq.b}y - {eq.a}x\n"
        f"residue {r} mod {1 << args.k}\n"
        f"classification {kind}\n"
    )
    _write(text, args.out)
    return 0


def _cmd_cycles(args) -> int:
    if not 1 <= args.k_max <= MAX_CYCLE_SEARCH_K:
        return _usage_error(f"--k-max must be in 1..{MAX_CYCLE_SEARCH_K}")
    cycles = find_cycles(_map_params(args), args.k_max)
    if args.format == "json":
        text = report.to_json(cycles, m=args.m)
    else:
        text = "".join(" ".join(str(v) for v in c.values) + "\n" for c in cycles)
    _write(text, args.out)
    return 0


def _cmd_verify_periodicity(args) -> int:
    if not 1 <= args.k <= MAX_PERIODICITY_K:
        return _usage_error(f"--k must be in 1..{MAX_PERIODICITY_K}")
    if args.start < 0:
        return _usage_error("--start must be non-negative")
    p = _map_params(args)
    width = 1 << args.k
    seen = set()
    repeats_ok = True
    for n in range(args.start, args.start + width):
        bits = parity_vector(p, n, args.k).bits
        seen.add(bits)
        if parity_vector(p, n + width, args.k).bits != bits:
            repeats_ok = False
    distinct_ok = len(seen) == width
    text = (
        f"m {args.m} k {args.k} start {args.start}\n"
        f"distinct {len(seen)} of {width}\n"
        f"repetition {'ok' if repeats_ok else 'violated'}\n"
        f"{'PASS' if distinct_ok and repeats_ok else 'FAIL'}\n"
    )
    _write(text, args.out)
    return 0 if distinct_ok and repeats_ok else 1


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--m", type=int, default=3,
                     help="odd multiplier >= 3 (3 and 5 are the classic maps)")
    sub.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mxplus1",
        description="Stopping-time distribution tables for mx+1 maps, "
                    "with an exact column recursion and a brute-force cross-check.")
    subs = parser.add_subparsers(dest="command", required=True)

    d = subs.add_parser("density", help="run the column recursion and export the series")
    _add_common(d)
    d.add_argument("--k-max", type=int, required=True, help="last column to compute")
    d.add_argument("--every", type=int, default=1, help="emit a point every this many k")
    d.add_argument("--variant", choices=("new", "terras", "both"), default="both")
    d.add_argument("--format", choices=("csv", "json", "plot", "table"), default="csv")
    d.set_defaults(func=_cmd_density)

    o = subs.add_parser("oracle", help="brute-force a window and compare with the table")
    _add_common(o)
    o.add_argument("--k", type=int, required=True, help="window is 2**k starts, k steps")
    o.add_argument("--offset", type=int, default=1, help="first integer of the window")
    o.add_argument("--jobs", type=int, default=1, help="worker processes")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=_cmd_oracle)

    t = subs.add_parser("trajectory", help="print a trajectory")
    _add_common(t)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--steps", type=int, required=True)
    t.set_defaults(func=_cmd_trajectory)

    s = subs.add_parser("stopping", help="both stopping-time notions side by side")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int, default=1000)
    s.set_defaults(func=_cmd_stopping)

    v = subs.add_parser("vector", help="parity vector, its equation and residue class")
    _add_common(v)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.set_defaults(func=_cmd_vector)

    c = subs.add_parser("cycles", help="enumerate cycles up to a vector length")
    _add_common(c)
    c.add_argument("--k-max", type=int, required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=_cmd_cycles)

    vp = subs.add_parser("verify-periodicity",
                         help="check vector distinctness and window repetition")
    _add_common(vp)
    vp.add_argument("--k", type=int, required=True)
    vp.add_argument("--start", type=int, default=1)
    vp.set_defaults(func=_cmd_verify_periodicity)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
