"""Stable text serialization of series, cycles and oracle reports.

Counts and powers of two are always written as exact decimal strings;
they outgrow doubles long before the recursion slows down.  Floats are
rendered with 9 significant digits, switching to scientific notation
below 0.1.  Output uses LF line endings throughout.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Union

from .density import DensityPoint, DensitySeries
from .diophantine import Cycle
from .oracle import OracleReport

CSV_HEADER = "k,N,pow2k,shaded,F_new,F_terras,G"

_LOG10_2 = math.log10(2.0)


def format_float(x: float) -> str:
    """9 significant digits; scientific with unpadded exponent under 0.1."""
    if x == 0:
        return "0.00000000"
    if x < 0:
        return "-" + format_float(-x)
    mant, exp = f"{x:.8e}".split("e")
    e = int(exp)
    if e >= -1:
        return f"{x:.{8 - e}f}"
    return f"{mant}e{e}"


def to_csv(series: DensitySeries) -> str:
    lines = [CSV_HEADER]
    for pt in series.points:
        lines.append(",".join((
            str(pt.k),
            str(pt.N),
            str(1 << pt.k),
            str(pt.shaded_count),
            format_float(pt.F_new),
            format_float(pt.F_terras),
            format_float(pt.G),
        )))
    return "\n".join(lines) + "\n"


def _density_record(m: int, pt: DensityPoint, variant: str) -> dict:
    return {
        "k": pt.k,
        "N": str(pt.N),
        "pow2k": str(1 << pt.k),
        "shaded": str(pt.shaded_count),
        "F_new": pt.F_new,
        "F_terras": pt.F_terras,
        "G": pt.G,
        "m": m,
        "variant": variant,
    }


def _cycle_record(m: int, cycle: Cycle) -> dict:
    return {"m": m, "length": cycle.length, "values": [str(v) for v in cycle.values]}


def _oracle_record(rep: OracleReport) -> dict:
    return {
        "m": rep.m,
        "k": rep.k,
        "offset": rep.offset,
        "table_N": str(rep.table_N),
        "count_coefficient_gt": str(rep.count_coefficient_gt),
        "count_coefficient_ge": str(rep.count_coefficient_ge),
        "count_actual_gt": str(rep.count_actual_gt),
        "discrepancy": rep.discrepancy,
    }


Record = Union[DensityPoint, Cycle, OracleReport]


def to_json(records: Union[DensitySeries, Iterable[Record]], *, m: int | None = None,
            variant: str = "both") -> str:
    """One JSON object per line per record.  DensityPoint records need m
    (taken from the series when one is passed); OracleReport carries its
    own.  Big counts become exact decimal strings, never numbers."""
    if isinstance(records, DensitySeries):
        m = records.m
        records = records.points
    lines = []
    for rec in records:
        if isinstance(rec, DensityPoint):
            if m is None:
                raise ValueError("m is required to serialize density points")
            obj = _density_record(m, rec, variant)
        elif isinstance(rec, Cycle):
            if m is None:
                raise ValueError("m is required to serialize cycles")
            obj = _cycle_record(m, rec)
        elif isinstance(rec, OracleReport):
            obj = _oracle_record(rec)
        else:
            raise TypeError(f"cannot serialize {type(rec).__name__}")
        lines.append(json.dumps(obj, separators=(",", ":")))
    return "\n".join(lines) + "\n" if lines else ""


def to_plot_data(series: DensitySeries) -> str:
    """Two whitespace-separated columns, k and log10(F_new), computed
    from the exact integers so deep tails never underflow."""
    lines = [f"# m={series.m}", "# k log10_F_new"]
    for pt in series.points:
        val = math.log10(pt.N) - pt.k * _LOG10_2
        lines.append(f"{pt.k} {val:.10g}")
    return "\n".join(lines) + "\n"
