"""Streaming big-integer recursion for the stopping-time table.

Column k of the table counts, out of any 2**k consecutive starts, how
many have a given number i of odd steps in their first k parity bits
while never having seen the slope m**i' / 2**j drop below 1.  Columns
follow the Pascal rule value(i,k) = value(i-1,k-1) + value(i,k-1), with
one twist: a cell whose row fails m**i > 2**k is zeroed.  Because
consecutive powers of m are at least a factor 3 apart, at most one row
can fail per column; its would-be value is the column's "shaded" count,
the number of starts whose slope drops below 1 at exactly this k.

Only the current column is kept in memory, so the recursion streams to
large k.  Every entry is an exact integer; floats appear only in the
emitted distribution values F = N / 2**k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bigmath import GREATER, cmp_pow, ratio_to_float
from .trajectory import MapParams


class ShadedCell(NamedTuple):
    row: int
    count: int


@dataclass(frozen=True)
class DensityColumn:
    """One table column: contiguous nonzero rows i_min..k plus the cell
    zeroed at this k, if any.  N is the exact sum of the stored rows."""

    m: int
    k: int
    i_min: int
    rows: tuple[int, ...]
    shaded: ShadedCell | None
    N: int

    def row(self, i: int) -> int:
        """Stored count for row i; zeroed and never-populated rows read 0."""
        if self.i_min <= i <= self.k:
            return self.rows[i - self.i_min]
        return 0

    def items(self) -> list[tuple[int, int]]:
        return [(self.i_min + t, v) for t, v in enumerate(self.rows)]

    @property
    def shaded_count(self) -> int:
        return self.shaded.count if self.shaded else 0


@dataclass(frozen=True)
class DensityPoint:
    """Snapshot of the distribution at one k.

    F_new counts starts whose slope stays >= 1 through all k steps
    (strict survival); F_terras additionally counts those whose slope
    first drops exactly at k, i.e. the shaded cell; G = 1 - F_new.
    """

    k: int
    N: int
    shaded_count: int
    F_new: float
    F_terras: float
    G: float


@dataclass(frozen=True)
class DensitySeries:
    m: int
    points: list[DensityPoint]


MAX_SERIES_K = 100_000
MAX_BINOMIAL_K = 10_000


def initial_column(p: MapParams) -> DensityColumn:
    """Column k = 0: a single survivor row (0 iterations reject nobody)."""
    return DensityColumn(m=p.m, k=0, i_min=0, rows=(1,), shaded=None, N=1)


def next_column(col: DensityColumn) -> DensityColumn:
    """Advance the recursion by one column.

    Candidate rows run from the old i_min to the new k; each candidate
    is the Pascal sum of its two parents (absent parents read 0, so the
    top candidate equals the old top row and the bottom one equals the
    old bottom row, which stays 1 forever).  The top candidate is then
    the only row that can fail the exact power test m**i > 2**k: if it
    does, it becomes the shaded cell and is dropped.  The column total
    is recomputed by direct summation, leaving the doubling identity
    N(k) = 2*N(k-1) - shaded(k) as an independent cross-check.
    """
    m = col.m
    k = col.k + 1
    old = col.rows
    cand = [old[0]]
    for t in range(1, len(old)):
        cand.append(old[t - 1] + old[t])
    cand.append(old[-1])
    i_min = col.i_min
    shaded = None
    if cmp_pow(m, i_min, k) != GREATER:
        if cand[0] > 0:
            shaded = ShadedCell(row=i_min, count=cand[0])
        cand = cand[1:]
        i_min += 1
    return DensityColumn(m=m, k=k, i_min=i_min, rows=tuple(cand),
                         shaded=shaded, N=sum(cand))


def _point(col: DensityColumn) -> DensityPoint:
    f_new = ratio_to_float(col.N, col.k)
    f_terras = ratio_to_float(col.N + col.shaded_count, col.k)
    return DensityPoint(k=col.k, N=col.N, shaded_count=col.shaded_count,
                        F_new=f_new, F_terras=f_terras, G=1.0 - f_new)


def density_series(p: MapParams, k_max: int, stride: int = 1) -> DensitySeries:
    """Run the recursion to k_max, emitting a point at every multiple of
    stride and at k_max itself (k = 0 is always emitted)."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if k_max > MAX_SERIES_K:
        raise ValueError(f"k_max={k_max} exceeds the practical bound {MAX_SERIES_K}")
    if stride < 1:
        raise ValueError("stride must be positive")
    col = initial_column(p)
    points = [_point(col)]
    for k in range(1, k_max + 1):
        col = next_column(col)
        if k % stride == 0 or k == k_max:
            points.append(_point(col))
    return DensitySeries(m=p.m, points=points)


def binomial_reference(k_max: int) -> list[tuple[int, ...]]:
    """Pascal triangle columns 0..k_max via the plain two-parent sum,
    the same recursion as the table but with no zeroing.  Column sums
    are 2**k; entry (i, k) dominates the table's value at (i, k)."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if k_max > MAX_BINOMIAL_K:
        raise ValueError(f"k_max={k_max} exceeds the practical bound {MAX_BINOMIAL_K}")
    triangle = [(1,)]
    for _ in range(k_max):
        prev = triangle[-1]
        col = [1]
        for t in range(1, len(prev)):
            col.append(prev[t - 1] + prev[t])
        col.append(1)
        triangle.append(tuple(col))
    return triangle
