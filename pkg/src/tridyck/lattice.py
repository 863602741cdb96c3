"""The nu-Tamari lattice on sub-shapes of a triangular partition.

Elements are all sub-partitions of ``base``.  A cover ``mu -> alpha`` means
``alpha`` is obtained from ``mu`` by one rotation; ``base`` is the bottom
element and the empty partition the top.  Every cover removes at least one
cell, so ordering nodes by size gives a topological order.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ContainmentError, ShapeMismatch
from .partition import (
    Partition,
    contains,
    enumerate_subpartitions,
    format_partition,
    require_contains,
    require_triangular,
)
from .poly import MultiPoly
from .tableaux import StandardTableau, statistics


def cover_rotations(lam: Iterable[int], mu: Iterable[int]) -> list[Partition]:
    """Shapes reachable from ``mu`` by one rotation, ordered by the rotated line.

    Rotating at line ``j`` (0-based here) with ``mu[j] > mu[j+1]``: let
    ``v = lam[j] - mu[j]``, walk down from ``j-1`` while the gap
    ``lam[k] - mu[k]`` exceeds ``v``, and shorten by one every line from the
    first such ``k`` through ``j``.
    """
    lam, mu = Partition(lam), Partition(mu)
    require_contains(lam, mu)
    out: list[Partition] = []
    seen = set()
    for j in range(len(mu)):
        if mu[j] <= mu.part(j + 1):
            continue
        v = lam[j] - mu[j]
        start = j
        while start > 0 and lam[start - 1] - mu[start - 1] > v:
            start -= 1
        parts = list(mu)
        for k in range(start, j + 1):
            parts[k] -= 1
        alpha = Partition(parts)
        if alpha not in seen:
            seen.add(alpha)
            out.append(alpha)
    return out


@dataclass(frozen=True)
class Interval:
    lower: int
    upper: int
    distance: int


class Lattice:
    """Hasse diagram of the nu-Tamari order on sub-shapes of ``base``."""

    def __init__(self, base: Partition, nodes: list[Partition], covers: list[tuple[int, int]]):
        self.base = base
        self.nodes = nodes
        self.index = {p: k for k, p in enumerate(nodes)}
        self.covers = covers
        succ: list[list[int]] = [[] for _ in nodes]
        for u, v in covers:
            succ[u].append(v)
        self.successors = succ

    def __len__(self) -> int:
        return len(self.nodes)

    @cached_property
    def longest_distances(self) -> list[dict[int, int]]:
        """``longest_distances[u][v]`` is the longest cover chain from ``u`` up to ``v``.

        Nodes are stored in increasing size, covers point to smaller shapes,
        so filling from the front sees every successor first.
        """
        dist: list[dict[int, int]] = [None] * len(self.nodes)  # type: ignore[list-item]
        for u in range(len(self.nodes)):
            d = {u: 0}
            for w in self.successors[u]:
                for v, k in dist[w].items():
                    if d.get(v, -1) < k + 1:
                        d[v] = k + 1
            dist[u] = d
        return dist

    @cached_property
    def reach(self) -> list[int]:
        """Bitset of nodes reachable from each node (itself included)."""
        bits = [0] * len(self.nodes)
        for u in range(len(self.nodes)):
            b = 1 << u
            for w in self.successors[u]:
                b |= bits[w]
            bits[u] = b
        return bits

    def precedes(self, tau: Partition, mu: Partition) -> bool:
        """``tau`` below or equal to ``mu`` in the lattice order."""
        return bool(self.reach[self.index[Partition(tau)]] >> self.index[Partition(mu)] & 1)

    def distance(self, tau: Partition, mu: Partition) -> int | None:
        return self.longest_distances[self.index[Partition(tau)]].get(self.index[Partition(mu)])

    def interval_count(self) -> int:
        return sum(bin(b).count("1") for b in self.reach)

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "nodes": [list(p) for p in self.nodes],
            "covers": [[u, v] for u, v in self.covers],
        }

    def to_dot(self) -> str:
        lines = ["digraph nu_tamari {", "  rankdir=BT;"]
        for k, p in enumerate(self.nodes):
            lines.append(f'  n{k} [label="{format_partition(p)}"];')
        for u, v in self.covers:
            lines.append(f"  n{u} -> n{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


_LATTICE_CACHE: dict[Partition, Lattice] = {}


def build_lattice(lam: Iterable[int]) -> Lattice:
    lam = Partition(lam)
    require_triangular(lam)
    cached = _LATTICE_CACHE.get(lam)
    if cached is not None:
        return cached
    nodes = enumerate_subpartitions(lam)
    index = {p: k for k, p in enumerate(nodes)}
    covers = []
    for u, mu in enumerate(nodes):
        for alpha in cover_rotations(lam, mu):
            covers.append((u, index[alpha]))
    lattice = Lattice(lam, nodes, covers)
    if len(_LATTICE_CACHE) > 64:
        _LATTICE_CACHE.clear()
    _LATTICE_CACHE[lam] = lattice
    return lattice


def enumerate_intervals(lattice: Lattice) -> Iterator[Interval]:
    for u, row in enumerate(lattice.longest_distances):
        for v in sorted(row):
            yield Interval(u, v, row[v])


def interval_polynomial(lam: Iterable[int], theta: StandardTableau) -> MultiPoly:
    """Sum over intervals of ``q^distance t^sim(upper end)`` with sim w.r.t. ``theta``."""
    lam = Partition(lam)
    if theta.shape != lam:
        raise ShapeMismatch(f"tableau shape {theta.shape!r} differs from {lam!r}")
    lattice = build_lattice(lam)
    sims = [statistics(theta, mu).sim for mu in lattice.nodes]
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for row in lattice.longest_distances:
        for v, d in row.items():
            acc[(d, sims[v])] += 1
    return MultiPoly(2, acc)


def _two_part(lam: Iterable[int], mu: Iterable[int]) -> tuple[int, int, int, int]:
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > 2:
        raise ValueError(f"{lam!r} is not a 2-partition")
    if not contains(lam, mu):
        raise ContainmentError(f"{mu!r} is not contained in {lam!r}")
    m, n = lam.part(0), lam.part(1)
    return m, n, m - mu.part(0), n - mu.part(1)


def two_part_side(lam: Iterable[int], mu: Iterable[int]) -> str:
    """``left`` / ``center`` / ``right`` for ``mu = (m-i, n-j)`` by the sign of ``i - j``."""
    _, _, i, j = _two_part(lam, mu)
    if i < j:
        return "left"
    if i == j:
        return "center"
    return "right"


def red_line_distances(lattice: Lattice, mu: Iterable[int]) -> dict[int, int]:
    """Distance counts ``{d: #tau}`` over the elements ``tau`` below ``mu`` that
    keep a full row of the 2-partition base, i.e. ``tau = (m, *)`` or ``(*, n)``."""
    m, n = lattice.base.part(0), lattice.base.part(1)
    v = lattice.index[Partition(mu)]
    out: dict[int, int] = defaultdict(int)
    for u, tau in enumerate(lattice.nodes):
        if tau.part(0) != m and tau.part(1) != n:
            continue
        d = lattice.longest_distances[u].get(v)
        if d is not None:
            out[d] += 1
    return dict(sorted(out.items()))
