"""Standard Young tableaux on triangular shapes and the area/sim/deficit statistics."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InternalError, InvalidTableau, ParameterOutOfRange
from .partition import (
    Cell,
    Partition,
    TriangularDyckPath,
    enumerate_subpartitions,
    is_triangular,
    mean_similar_test,
    mean_slope,
    require_contains,
    require_triangular,
)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of labels, bottom row first.

    ``rows[r][c]`` is the label of cell ``(r, c)``.  Construction validates
    that the labels are exactly ``1..n`` and increase along rows and up
    columns.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        try:
            shape = Partition(len(row) for row in rows)
        except ValueError as exc:
            raise InvalidTableau(f"row lengths of {rows} do not form a partition") from exc
        if any(len(row) == 0 for row in rows):
            raise InvalidTableau("empty row inside a tableau")
        n = shape.size
        if sorted(x for row in rows for x in row) != list(range(1, n + 1)):
            raise InvalidTableau(f"labels of {rows} are not 1..{n}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c > 0 and row[c - 1] >= x:
                    raise InvalidTableau(f"row {r} is not increasing in {rows}")
                if r > 0 and rows[r - 1][c] >= x:
                    raise InvalidTableau(f"column {c} is not increasing in {rows}")

    @cached_property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        return self.rows[r][c]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        """Map from label to cell."""
        return {x: Cell(r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def prefix_shape(self, k: int) -> Partition:
        """Shape formed by the cells labelled ``<= k``."""
        return Partition(sum(1 for x in row if x <= k) for row in self.rows)

    def to_text(self) -> str:
        return "".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return self.to_text()


def parse_tableau(text: str) -> StandardTableau:
    """Inverse of :meth:`StandardTableau.to_text`, e.g. ``"[1,2,4][3,5]"``."""
    groups = re.findall(r"\[([^\[\]]*)\]", text)
    if not groups or re.sub(r"\[[^\[\]]*\]", "", text).strip():
        raise InvalidTableau(f"cannot parse tableau {text!r}")
    rows = [tuple(int(tok) for tok in g.split(",") if tok.strip()) for g in groups]
    return StandardTableau(tuple(rows))


@dataclass(frozen=True)
class PathStatistics:
    area: int
    sim: int
    deficit: int

    def to_json(self) -> dict[str, int]:
        return {"area": self.area, "sim": self.sim, "deficit": self.deficit}


def slope_similar_cells(path: TriangularDyckPath) -> set[Cell]:
    """Cells of the inner shape whose admissible interval in the inner shape
    contains the outer shape's mean slope (half-open on the left)."""
    lam, mu = path.outer, path.inner
    similar = mean_similar_test(lam)
    conj = mu.conjugate()
    out = set()
    for r, c in mu.cells():
        if similar(mu[r] - c - 1, conj[c] - r - 1):
            out.add(Cell(r, c))
    return out


def _is_mean_similar(lam: Partition, mu: Partition, similar) -> bool:
    conj = mu.conjugate()
    return all(similar(mu[r] - c - 1, conj[c] - r - 1) for r, c in mu.cells())


def _addable_cells(lam: Partition, mu: Partition) -> list[Cell]:
    out = []
    for r in range(len(lam)):
        c = mu.part(r)
        if c < lam[r] and (r == 0 or mu.part(r - 1) > c):
            out.append(Cell(r, c))
    return out


def _add_cell(mu: Partition, cell: Cell) -> Partition:
    parts = list(mu) + [0] * (cell.row + 1 - len(mu))
    parts[cell.row] += 1
    return Partition(parts)


def _rows_from_positions(shape: Partition, order: Iterable[Cell]) -> StandardTableau:
    rows = [[0] * length for length in shape]
    for label, (r, c) in enumerate(order, start=1):
        rows[r][c] = label
    return StandardTableau(tuple(tuple(row) for row in rows))


def triangular_tableau(p: Iterable[int]) -> StandardTableau:
    """The unique tableau whose every prefix is a mean-similar sub-shape.

    Built greedily: each step adds the one addable cell keeping the grown
    shape mean-similar.  Any step with zero or several candidates raises
    :class:`InternalError`.
    """
    lam = Partition(p)
    require_triangular(lam)
    similar = mean_similar_test(lam)
    mu = Partition()
    order = []
    for _ in range(lam.size):
        candidates = [c for c in _addable_cells(lam, mu)
                      if _is_mean_similar(lam, _add_cell(mu, c), similar)]
        if len(candidates) != 1:
            raise InternalError(
                f"greedy step on {lam!r} from {mu!r} found {len(candidates)} valid cells")
        order.append(candidates[0])
        mu = _add_cell(mu, candidates[0])
    return _rows_from_positions(lam, order)


def triangular_tableau_by_sweep(p: Iterable[int]) -> StandardTableau:
    """Fast equivalent of :func:`triangular_tableau`: sort cells by the sweep key
    ``mean*(col+1) + (1-mean)*(row+1)``, ties broken by ``col - row`` descending."""
    lam = Partition(p)
    require_triangular(lam)
    mean = mean_slope(lam)
    one = Fraction(1)

    def key(cell: Cell):
        r, c = cell
        return (mean * (c + 1) + (one - mean) * (r + 1), r - c)

    return _rows_from_positions(lam, sorted(lam.cells(), key=key))


def top_down_tableau(p: Iterable[int]) -> StandardTableau:
    """Labels from ``|p|`` downwards, one row-end cell per row per top-to-bottom pass."""
    lam = Partition(p)
    remaining = list(lam)
    rows = [[0] * length for length in lam]
    label = lam.size
    while label > 0:
        for r in range(len(lam) - 1, -1, -1):
            if remaining[r] > 0:
                remaining[r] -= 1
                rows[r][remaining[r]] = label
                label -= 1
    return StandardTableau(tuple(tuple(row) for row in rows))


def row_regular_range(m: int, n: int) -> range:
    """Valid indices ``i`` of row-regular tableaux on ``(m, n)``."""
    return range(1, m - 2 * (n - 1) + 1)


def row_regular_tableau(m: int, n: int, i: int) -> StandardTableau:
    """Two-row tableau whose upper row is ``n+i, n+i+2, ..., n+i+2(n-1)``."""
    if n < 1 or not is_triangular((m, n)):
        raise ParameterOutOfRange(f"({m},{n}) is not a triangular 2-partition")
    if i not in row_regular_range(m, n):
        raise ParameterOutOfRange(
            f"row-regular index {i} outside 1..{m - 2 * (n - 1)} for ({m},{n})")
    upper = tuple(n + i + 2 * k for k in range(n))
    taken = set(upper)
    lower = tuple(x for x in range(1, m + n + 1) if x not in taken)
    return StandardTableau((lower, upper))


def maximal_row_regular_index(m: int, n: int) -> int:
    return m - 2 * (n - 1)


def deficit_cells(theta: StandardTableau, mu: Iterable[int]) -> set[Cell]:
    """Literal pair scan: hook corners of every label inversion between ``mu``
    and the complement of ``mu`` in the tableau's shape."""
    lam = theta.shape
    mu = Partition(mu)
    require_contains(lam, mu)
    inside = list(mu.cells())
    outside = [c for c in lam.cells() if not mu.has_cell(c)]
    out = set()
    for r1, c1 in inside:
        x = theta.rows[r1][c1]
        for r2, c2 in outside:
            if r1 != r2 and c1 != c2 and x > theta.rows[r2][c2]:
                out.add(Cell(min(r1, r2), min(c1, c2)))
    return out


def deficit_count(theta: StandardTableau, mu: Partition) -> int:
    """Number of deficit cells, one local test per cell of ``mu``.

    A cell ``d`` of ``mu`` is a deficit cell iff the largest label of its arm
    inside ``mu`` exceeds the smallest label of its leg outside ``mu``, or the
    same with arm and leg exchanged.  Agrees with :func:`deficit_cells`.
    """
    rows = theta.rows
    lam = theta.shape
    lam_conj = lam.conjugate()
    mu_conj = mu.conjugate()
    count = 0
    for r, mr in enumerate(mu):
        lr = lam[r]
        row = rows[r]
        arm_out = row[mr] if mr < lr else None
        arm_in = row[mr - 1]
        for c in range(mr):
            mc = mu_conj[c]
            if mr - 1 > c and mc < lam_conj[c] and arm_in > rows[mc][c]:
                count += 1
            elif mc - 1 > r and arm_out is not None and rows[mc - 1][c] > arm_out:
                count += 1
    return count


def statistics(theta: StandardTableau, mu: Iterable[int]) -> PathStatistics:
    lam = theta.shape
    mu = Partition(mu)
    require_contains(lam, mu)
    d = deficit_count(theta, mu)
    return PathStatistics(area=lam.size - mu.size, sim=mu.size - d, deficit=d)


def enumerate_standard_tableaux(p: Iterable[int]) -> list[StandardTableau]:
    """All standard tableaux of shape ``p``, in lexicographic order of the
    sequence of rows receiving labels 1, 2, ...."""
    lam = Partition(p)
    n = lam.size
    out: list[StandardTableau] = []
    filled = [0] * len(lam)
    rows = [[0] * length for length in lam]

    def rec(label: int) -> None:
        if label > n:
            out.append(StandardTableau(tuple(tuple(row) for row in rows)))
            return
        for r in range(len(lam)):
            c = filled[r]
            if c < lam[r] and (r == 0 or filled[r - 1] > c):
                rows[r][c] = label
                filled[r] += 1
                rec(label + 1)
                filled[r] -= 1

    rec(1)
    return out


def iter_row_words(p: Partition) -> Iterator[tuple[int, ...]]:
    """Yamanouchi-style words: entry ``k`` is the row receiving label ``k+1``."""
    lam = Partition(p)
    n = lam.size
    filled = [0] * len(lam)
    word: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for r in range(len(lam)):
            c = filled[r]
            if c < lam[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                word.append(r)
                yield from rec()
                word.pop()
                filled[r] -= 1

    return rec()


def tableau_from_row_word(p: Partition, word: Sequence[int]) -> StandardTableau:
    lam = Partition(p)
    rows: list[list[int]] = [[] for _ in lam]
    for label, r in enumerate(word, start=1):
        rows[r].append(label)
    return StandardTableau(tuple(tuple(row) for row in rows))


def all_statistics(theta: StandardTableau) -> dict[Partition, PathStatistics]:
    return {mu: statistics(theta, mu) for mu in enumerate_subpartitions(theta.shape)}
