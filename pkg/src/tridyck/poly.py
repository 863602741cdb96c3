"""Sparse integer polynomials in two variables ``(q, t)`` or three ``(q, t, r)``."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .errors import DegreeOverflow

VAR_NAMES = ("q", "t", "r")

Exponent = tuple[int, ...]


def _canonical_key(exp: Exponent):
    return (-sum(exp), tuple(-e for e in exp))


class MultiPoly:
    """Immutable mapping from exponent vectors to nonzero integer coefficients.

    Coefficients are Python integers, so they never overflow.
    """

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if arity not in (2, 3):
            raise ValueError(f"arity must be 2 or 3, got {arity}")
        self.arity = arity
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for arity {arity}")
            acc[exp] += int(coef)
        self._terms = {e: acc[e] for e in sorted(acc, key=_canonical_key) if acc[e] != 0}
        self._hash = None

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def one(cls, arity: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): coef})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, int):
            return self == MultiPoly(self.arity, {(0,) * self.arity: other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, tuple(self._terms.items())))
        return self._hash

    def _check(self, other: "MultiPoly") -> None:
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        return MultiPoly(self.arity, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, k: int) -> "MultiPoly":
        return MultiPoly(self.arity, {e: k * c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiPoly(self.arity, acc)

    __rmul__ = __mul__

    def degree_parts(self) -> dict[int, dict[Exponent, int]]:
        """Terms grouped by total degree."""
        out: dict[int, dict[Exponent, int]] = defaultdict(dict)
        for e, c in self._terms.items():
            out[sum(e)][e] = c
        return dict(out)

    def max_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def to_json(self) -> dict:
        return {
            "vars": list(VAR_NAMES[: self.arity]),
            "terms": [{"exp": list(e), "coef": c} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        arity = len(data["vars"])
        return cls(arity, [(t["exp"], t["coef"]) for t in data["terms"]])

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, coef in self._terms.items():
            factors = []
            for name, e in zip(VAR_NAMES, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {str(self)!r})"


def substitute(p: MultiPoly, assignments: Sequence[int | None]) -> MultiPoly:
    """Partial evaluation: ``None`` keeps a variable, an integer substitutes it.

    The arity is unchanged; substituted variables end with exponent 0.
    """
    if len(assignments) != p.arity:
        raise ValueError("one assignment per variable is required")
    acc: dict[Exponent, int] = defaultdict(int)
    for exp, coef in p.items():
        new_exp = []
        for e, val in zip(exp, assignments):
            if val is None:
                new_exp.append(e)
            else:
                coef *= val ** e
                new_exp.append(0)
        acc[tuple(new_exp)] += coef
    return MultiPoly(p.arity, acc)


def evaluate(p: MultiPoly, values: Sequence[int]) -> int:
    return substitute(p, list(values)).coefficient((0,) * p.arity)


def homogenize(p: MultiPoly, n: int) -> MultiPoly:
    """Send ``q^a t^b`` to ``q^a t^b r^(n-a-b)``."""
    if p.arity != 2:
        raise ValueError("homogenize expects a (q, t) polynomial")
    out = {}
    for (a, b), c in p.items():
        if a + b > n:
            raise DegreeOverflow(f"term q^{a} t^{b} exceeds degree {n}")
        out[(a, b, n - a - b)] = c
    return MultiPoly(3, out)


def drop_last_variable(p: MultiPoly) -> MultiPoly:
    """Set ``r = 1`` and return the result as a ``(q, t)`` polynomial."""
    if p.arity != 3:
        raise ValueError("expects a (q, t, r) polynomial")
    acc: dict[Exponent, int] = defaultdict(int)
    for (a, b, _), c in p.items():
        acc[(a, b)] += c
    return MultiPoly(2, acc)


def parse_polynomial(text: str, arity: int) -> MultiPoly:
    """Inverse of ``str(MultiPoly)``.  The ``*`` signs are optional, so
    ``"2q^2t + q t"`` also parses."""
    names = VAR_NAMES[:arity]
    src = text.replace("-", "+-").replace(" ", "")
    acc: dict[Exponent, int] = defaultdict(int)
    for chunk in src.split("+"):
        if not chunk:
            continue
        sign = -1 if chunk.startswith("-") else 1
        chunk = chunk.lstrip("-").replace("*", "")
        k = 0
        while k < len(chunk) and chunk[k].isdigit():
            k += 1
        coef = int(chunk[:k]) if k else 1
        exp = [0] * arity
        rest = chunk[k:]
        while rest:
            name = rest[0]
            if name not in names:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            rest = rest[1:]
            power = 1
            if rest.startswith("^"):
                j = 1
                while j < len(rest) and rest[j].isdigit():
                    j += 1
                power = int(rest[1:j])
                rest = rest[j:]
            exp[names.index(name)] += power
        acc[tuple(exp)] += sign * coef
    return MultiPoly(arity, acc)
