"""Schur polynomials in two or three variables, Schur expansions, and the
area/sim generating polynomials of a tableau."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NotSymmetric, ReconstructionMismatch
from .partition import (
    Partition,
    TriangularDyckPath,
    enumerate_subpartitions,
    require_triangular,
)
from .poly import MultiPoly
from .tableaux import (
    StandardTableau,
    deficit_count,
    slope_similar_cells,
    triangular_tableau,
)


@dataclass(frozen=True)
class SSYTableau:
    """Semistandard filling, bottom row first: rows weakly increase, columns strictly."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def content(self, max_entry: int) -> tuple[int, ...]:
        counts = [0] * max_entry
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)


def enumerate_ssyt(shape: Iterable[int], max_entry: int) -> list[SSYTableau]:
    """Row-by-row backtracking with column-strictness pruning."""
    lam = Partition(shape)
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    if len(lam) > max_entry:
        return []
    conj = lam.conjugate()
    out: list[SSYTableau] = []
    rows: list[list[int]] = []

    def fill_row(r: int, row: list[int]) -> None:
        c = len(row)
        if c == lam[r]:
            rows.append(row)
            if r + 1 == len(lam):
                out.append(SSYTableau(lam, tuple(tuple(x) for x in rows)))
            else:
                fill_row(r + 1, [])
            rows.pop()
            return
        lo = row[-1] if row else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        # leave room for the cells still to come above this one
        hi = max_entry - (conj[c] - 1 - r)
        for x in range(lo, hi + 1):
            fill_row(r, row + [x])

    if not lam:
        return [SSYTableau(lam, ())]
    fill_row(0, [])
    return out


@lru_cache(maxsize=None)
def _schur(shape: Partition, arity: int) -> MultiPoly:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for t in enumerate_ssyt(shape, arity):
        acc[t.content(arity)] += 1
    return MultiPoly(arity, acc)


def schur_polynomial(shape: Iterable[int], arity: int) -> MultiPoly:
    return _schur(Partition(shape), arity)


def format_shape(nu: Partition) -> str:
    return ",".join(str(x) for x in nu)


@dataclass(frozen=True)
class SchurExpansion:
    """Finite integer combination of Schur polynomials."""

    coefficients: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for nu, c in self.coefficients.items():
            if c != 0:
                clean[Partition(nu)] = int(c)
        ordered = dict(sorted(clean.items(), key=lambda kv: (-kv[0].size, tuple(-x for x in kv[0]))))
        object.__setattr__(self, "coefficients", ordered)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients.values())

    def to_polynomial(self, arity: int) -> MultiPoly:
        total = MultiPoly.zero(arity)
        for nu, c in self.coefficients.items():
            total = total + schur_polynomial(nu, arity).scale(c)
        return total

    def restrict_length(self, max_rows: int) -> "SchurExpansion":
        return SchurExpansion({nu: c for nu, c in self.coefficients.items() if len(nu) <= max_rows})

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self.coefficients == other.coefficients
        if isinstance(other, Mapping):
            return self == SchurExpansion(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients.items()))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for nu, c in self.coefficients.items():
            name = f"s[{format_shape(nu)}]"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"shape": list(nu), "coef": c} for nu, c in self.coefficients.items()]


def is_qt_symmetric(p: MultiPoly) -> bool:
    if p.arity != 2:
        raise ValueError("expects a (q, t) polynomial")
    return all(p.coefficient((b, a)) == c for (a, b), c in p.items())


def decompose_schur_2var(p: MultiPoly) -> SchurExpansion:
    """Expand a symmetric ``(q, t)`` polynomial in two-row Schur polynomials,
    one homogeneous degree at a time."""
    if not is_qt_symmetric(p):
        raise NotSymmetric("polynomial is not symmetric in q and t")
    coeffs: dict[Partition, int] = {}
    for n in p.degree_parts():
        prev = 0
        for a in range(n // 2 + 1):
            ca = p.coefficient((n - a, a))
            if ca != prev:
                coeffs[Partition((n - a, a))] = ca - prev
            prev = ca
    exp = SchurExpansion(coeffs)
    if exp.to_polynomial(2) != p:
        raise ReconstructionMismatch("two-variable Schur expansion does not reproduce its input")
    return exp


def decompose_schur_3var(p: MultiPoly) -> SchurExpansion:
    """Leading-term elimination in ``(q, t, r)``.

    Repeatedly takes the lexicographically greatest monomial; its exponent
    must be weakly decreasing, otherwise the input is not symmetric.
    """
    if p.arity != 3:
        raise ValueError("expects a (q, t, r) polynomial")
    rest = p
    coeffs: dict[Partition, int] = defaultdict(int)
    while not rest.is_zero():
        lead = max(exp for exp, _ in rest.items())
        c = rest.coefficient(lead)
        if not (lead[0] >= lead[1] >= lead[2]):
            raise NotSymmetric(f"leading monomial {lead} is not a partition")
        nu = Partition(lead)
        coeffs[nu] += c
        rest = rest - schur_polynomial(nu, 3).scale(c)
    exp = SchurExpansion(coeffs)
    if exp.to_polynomial(3) != p:
        raise ReconstructionMismatch("three-variable Schur expansion does not reproduce its input")
    return exp


def a_theta_polynomial(theta: StandardTableau) -> MultiPoly:
    """Sum of ``q^area t^sim`` over all sub-shapes, with sim taken w.r.t. ``theta``."""
    lam = theta.shape
    require_triangular(lam)
    n = lam.size
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for mu in enumerate_subpartitions(lam):
        size = mu.size
        acc[(n - size, size - deficit_count(theta, mu))] += 1
    return MultiPoly(2, acc)


@lru_cache(maxsize=512)
def _a_lambda(lam: Partition) -> MultiPoly:
    return a_theta_polynomial(triangular_tableau(lam))


def a_lambda_polynomial(p: Iterable[int]) -> MultiPoly:
    lam = Partition(p)
    require_triangular(lam)
    return _a_lambda(lam)


def a_lambda_by_slopes(p: Iterable[int]) -> MultiPoly:
    """Same polynomial as :func:`a_lambda_polynomial`, counting slope-similar
    cells directly instead of going through a tableau."""
    lam = Partition(p)
    require_triangular(lam)
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for mu in enumerate_subpartitions(lam):
        sim = len(slope_similar_cells(TriangularDyckPath(lam, mu)))
        acc[(lam.size - mu.size, sim)] += 1
    return MultiPoly(2, acc)
