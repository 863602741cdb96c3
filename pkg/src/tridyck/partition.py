"""Partitions, cells and the exact slope geometry of triangular partitions.

Conventions: ``Partition.parts[0]`` is the longest part and is drawn as the
bottom row of a French Ferrers diagram.  A cell is ``(row, col)`` with both
coordinates 0-based, so the 1-indexed part ``lambda_j`` is ``p[j - 1]``.

All slopes are :class:`fractions.Fraction` values; no floating point is used
anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutsideShape,
    ContainmentError,
    EmptyPartition,
    NotAPartition,
    NotTriangular,
)


class Cell(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))`` and compares equal to the plain tuple
    ``(3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for x in parts:
            if x < 0:
                raise NotAPartition(f"negative part in {tuple(parts)}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotAPartition(f"{tuple(parts)} is not weakly decreasing")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part ``i``; reads 0 past the end."""
        return self[i] if 0 <= i < len(self) else 0

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def cells(self) -> Iterator[Cell]:
        """Cells row by row, bottom row first, left to right."""
        for r, length in enumerate(self):
            for c in range(length):
                yield Cell(r, c)

    def has_cell(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return 0 <= r < len(self) and 0 <= c < self[r]


@lru_cache(maxsize=None)
def _conjugate(p: Partition) -> Partition:
    if not p:
        return p
    return Partition(sum(1 for x in p if x > c) for c in range(p[0]))


def parse_partition(text: str) -> Partition:
    """Parse ``"7,6,4,3,1"``; ``""`` and ``"0"`` give the empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise NotAPartition(f"cannot parse partition {text!r}") from exc
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    p = tuple(p)
    return ",".join(str(x) for x in p) if p else "0"


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """True iff ``inner_i <= outer_i`` for every i (missing parts read as 0)."""
    outer, inner = Partition(outer), Partition(inner)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def require_contains(outer: Partition, inner: Partition) -> None:
    if not contains(outer, inner):
        raise ContainmentError(f"{inner!r} is not contained in {outer!r}")


def _check_cell(p: Partition, c: tuple[int, int]) -> None:
    if not p.has_cell(c):
        raise CellOutsideShape(f"cell {tuple(c)} is not in {p!r}")


def arm(p: Partition, c: tuple[int, int]) -> int:
    """Number of cells strictly right of ``c`` in its row."""
    p = Partition(p)
    _check_cell(p, c)
    return p[c[0]] - c[1] - 1


def leg(p: Partition, c: tuple[int, int]) -> int:
    """Number of cells strictly above ``c`` in its column."""
    p = Partition(p)
    _check_cell(p, c)
    return p.conjugate()[c[1]] - c[0] - 1


def cell_slope_interval(p: Partition, c: tuple[int, int]) -> tuple[Fraction, Fraction]:
    """Admissible interval ``(leg/h, (leg+1)/h)`` with ``h = arm + leg + 1``."""
    a, l = arm(p, c), leg(p, c)
    h = a + l + 1
    return Fraction(l, h), Fraction(l + 1, h)


@lru_cache(maxsize=None)
def _slope_bounds(p: Partition) -> tuple[Fraction, Fraction]:
    conj = p.conjugate()
    lo, hi = Fraction(0), Fraction(1)
    for r, c in p.cells():
        a = p[r] - c - 1
        l = conj[c] - r - 1
        h = a + l + 1
        lo = max(lo, Fraction(l, h))
        hi = min(hi, Fraction(l + 1, h))
    return lo, hi


def slope_bounds(p: Iterable[int]) -> tuple[Fraction, Fraction]:
    """``(max_c v-(c), min_c v+(c))`` over all cells of a non-empty partition."""
    p = Partition(p)
    if not p:
        raise EmptyPartition("slope bounds of the empty partition are undefined")
    return _slope_bounds(p)


def is_triangular(p: Iterable[int]) -> bool:
    p = Partition(p)
    if not p:
        return True
    lo, hi = _slope_bounds(p)
    return lo < hi


def require_triangular(p: Partition) -> None:
    if not is_triangular(p):
        raise NotTriangular(f"{p!r} is not triangular")


def mean_slope(p: Iterable[int]) -> Fraction:
    """Midpoint of the open slope interval of a triangular partition.

    The empty partition has the full interval ``(0, 1)`` by convention.
    """
    p = Partition(p)
    require_triangular(p)
    if not p:
        return Fraction(1, 2)
    lo, hi = _slope_bounds(p)
    return (lo + hi) / 2


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def enumerate_triangular_partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("size must be non-negative")
    return [p for p in partitions_of(n) if is_triangular(p)]


def triangular_partitions_up_to(n: int) -> list[Partition]:
    out = []
    for k in range(n + 1):
        out.extend(enumerate_triangular_partitions(k))
    return out


@lru_cache(maxsize=256)
def _subpartitions(p: Partition) -> tuple[Partition, ...]:
    found: list[tuple[int, ...]] = [()]
    for bound in p:
        nxt = []
        for prefix in found:
            cap = min(bound, prefix[-1]) if prefix else bound
            for x in range(cap + 1):
                nxt.append(prefix + (x,))
        found = nxt
    subs = {Partition(t) for t in found}
    return tuple(sorted(subs, key=lambda s: (s.size, tuple(s))))


def enumerate_subpartitions(p: Iterable[int]) -> list[Partition]:
    """Every ``mu`` contained in ``p`` once, ordered by size then lexicographically."""
    return list(_subpartitions(Partition(p)))


@dataclass(frozen=True)
class TriangularDyckPath:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        require_triangular(self.outer)
        require_contains(self.outer, self.inner)


def area(path: TriangularDyckPath) -> int:
    return path.outer.size - path.inner.size


def mean_similar_test(lam: Partition):
    """Return a predicate ``(arm, leg) -> bool`` for similarity against ``lam``.

    Uses the integer form of ``leg/h < N/D <= (leg+1)/h``.
    """
    mean = mean_slope(lam)
    num, den = mean.numerator, mean.denominator

    def similar(a: int, l: int) -> bool:
        h = a + l + 1
        return l * den < num * h <= (l + 1) * den

    return similar
