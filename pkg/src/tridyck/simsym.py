"""Sim-sym tableaux and the two-row theory: closed form of the generating
polynomial, the (deficit, area) parametrisation of sub-shapes, and the
characterisation of sim-sym tableaux by row-regularity."""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import ParameterOutOfRange
from .partition import Partition, enumerate_subpartitions, is_triangular, require_triangular
from .report import FAIL, PASS, CaseResult
from .schur import SchurExpansion, a_lambda_polynomial, a_theta_polynomial
from .tableaux import (
    StandardTableau,
    iter_row_words,
    row_regular_range,
    row_regular_tableau,
    statistics,
    tableau_from_row_word,
)


def is_sim_sym(theta: StandardTableau) -> bool:
    return a_theta_polynomial(theta) == a_lambda_polynomial(theta.shape)


class _DeficitProgram:
    """Deficit test of every (sub-shape, cell) pair compiled to label comparisons.

    A cell ``d`` of ``mu`` is a deficit cell iff ``T[a] > T[b]`` for one of at
    most two ``(a, b)`` cell-index pairs fixed by ``mu`` and ``d``; see
    :func:`tridyck.tableaux.deficit_count`.
    """

    def __init__(self, lam: Partition):
        self.lam = lam
        self.subshapes = enumerate_subpartitions(lam)
        cell_index = {c: k for k, c in enumerate(lam.cells())}
        lam_conj = lam.conjugate()
        pairs: list[tuple[int, int, int]] = []  # (subshape, bigger, smaller)
        slots: list[tuple[int, int]] = []       # (subshape, cell slot) per pair
        slot = 0
        for s, mu in enumerate(self.subshapes):
            mu_conj = mu.conjugate()
            for r, mr in enumerate(mu):
                for c in range(mr):
                    mc = mu_conj[c]
                    if mr - 1 > c and mc < lam_conj[c]:
                        pairs.append((s, cell_index[(r, mr - 1)], cell_index[(mc, c)]))
                        slots.append((s, slot))
                    if mc - 1 > r and mr < lam[r]:
                        pairs.append((s, cell_index[(mc - 1, c)], cell_index[(r, mr)]))
                        slots.append((s, slot))
                    slot += 1
        arr = np.array(pairs, dtype=np.int64).reshape(-1, 3)
        self.big = arr[:, 1]
        self.small = arr[:, 2]
        self.slot_of_pair = np.array([sl for _, sl in slots], dtype=np.int64)
        self.slot_count = slot
        slot_owner = np.zeros(slot, dtype=np.int64)
        k = 0
        for s, mu in enumerate(self.subshapes):
            slot_owner[k:k + mu.size] = s
            k += mu.size
        self.slot_owner = slot_owner
        self.sizes = np.array([mu.size for mu in self.subshapes], dtype=np.int64)

    def sims(self, labels: np.ndarray) -> np.ndarray:
        """``labels[t, cell]`` to ``sim[t, subshape]`` for a batch of tableaux."""
        hits = labels[:, self.big] > labels[:, self.small]
        batch = labels.shape[0]
        flags = np.zeros((batch, self.slot_count), dtype=bool)
        # a cell counts once even when both of its comparisons fire
        np.logical_or.at(flags, (slice(None), self.slot_of_pair), hits)
        deficits = np.zeros((batch, len(self.subshapes)), dtype=np.int64)
        np.add.at(deficits, (slice(None), self.slot_owner), flags)
        return self.sizes[None, :] - deficits


def _signature(lam: Partition, sims: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    n = lam.size
    areas = n - sizes
    codes = areas[None, :] * (n + 1) + sims
    batch = sims.shape[0]
    out = np.zeros((batch, (n + 1) * (n + 1)), dtype=np.int64)
    rows = np.repeat(np.arange(batch), sims.shape[1])
    np.add.at(out, (rows, codes.ravel()), 1)
    return out


def enumerate_sim_sym(p: Iterable[int], batch_size: int = 4096) -> list[StandardTableau]:
    """All sim-sym tableaux of shape ``p`` by exhaustive search, in the order of
    :func:`tridyck.tableaux.enumerate_standard_tableaux`."""
    lam = Partition(p)
    require_triangular(lam)
    if not lam:
        return [StandardTableau(())]
    program = _DeficitProgram(lam)
    target = a_lambda_polynomial(lam)
    n = lam.size
    want = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    for (a, s), c in target.items():
        want[a * (n + 1) + s] = c
    cells = list(lam.cells())
    cell_pos = {c: k for k, c in enumerate(cells)}
    found: list[StandardTableau] = []
    words = iter_row_words(lam)
    while True:
        chunk = []
        for w in words:
            chunk.append(w)
            if len(chunk) == batch_size:
                break
        if not chunk:
            break
        labels = np.zeros((len(chunk), n), dtype=np.int64)
        for t, w in enumerate(chunk):
            filled = [0] * len(lam)
            for label, r in enumerate(w, start=1):
                labels[t, cell_pos[(r, filled[r])]] = label
                filled[r] += 1
        sig = _signature(lam, program.sims(labels), program.sizes)
        for t in np.nonzero((sig == want[None, :]).all(axis=1))[0]:
            found.append(tableau_from_row_word(lam, chunk[t]))
        if len(chunk) < batch_size:
            break
    return found


def enumerate_sim_sym_slow(p: Iterable[int]) -> list[StandardTableau]:
    """Reference implementation: polynomial comparison tableau by tableau."""
    from .tableaux import enumerate_standard_tableaux

    lam = Partition(p)
    require_triangular(lam)
    return [t for t in enumerate_standard_tableaux(lam) if is_sim_sym(t)]


def closed_form_a_lambda_2part(m: int, n: int) -> SchurExpansion:
    if not is_triangular((m, n)) or n > m:
        raise ParameterOutOfRange(f"({m},{n}) is not a triangular 2-partition")
    return SchurExpansion({Partition((m + n - 2 * d, d)): 1 for d in range(min(n, m - n) + 1)})


def special_two_five_tableau(m: int) -> StandardTableau:
    """The tableau of shape ``(m, 2)`` with upper row ``[2, 5]``."""
    if m < 3:
        raise ParameterOutOfRange("shape (m, 2) with upper row [2, 5] needs m >= 3")
    lower = tuple(x for x in range(1, m + 3) if x not in (2, 5))
    return StandardTableau((lower, (2, 5)))


def row_regular_set(m: int, n: int) -> list[StandardTableau]:
    return [row_regular_tableau(m, n, i) for i in row_regular_range(m, n)]


def expected_sim_sym_set(m: int, n: int) -> list[StandardTableau]:
    out = row_regular_set(m, n)
    if n == 2:
        special = special_two_five_tableau(m)
        if special not in out:
            out.append(special)
    return out


def imp_path(m: int, n: int, i: int, d: int, a: int) -> Partition:
    """Sub-shape of ``(m, n)`` with deficit ``d`` and area ``a`` for the
    ``i``-row-regular tableau."""
    if n < 1 or not is_triangular((m, n)):
        raise ParameterOutOfRange(f"({m},{n}) is not a triangular 2-partition")
    if i not in row_regular_range(m, n):
        raise ParameterOutOfRange(f"row-regular index {i} out of range for ({m},{n})")
    if not 0 <= d <= min(n, m - n):
        raise ParameterOutOfRange(f"deficit {d} out of range for ({m},{n})")
    if not d <= a <= m + n - 2 * d:
        raise ParameterOutOfRange(f"area {a} out of range for deficit {d} on ({m},{n})")
    theta = row_regular_tableau(m, n, i)
    upper = set(theta.rows[1])
    if a == d:
        if m + n not in upper:
            mu = Partition((m, n - d))
        else:
            mu = Partition((m - d, n))
    elif a <= m - d - i + 2:
        keep = m + n - (a - d)
        m2 = sum(1 for x in theta.rows[0] if x <= keep)
        n2 = sum(1 for x in theta.rows[1] if x <= keep)
        if keep not in upper:
            mu = Partition((m2, n2 - d))
        else:
            mu = Partition((m2 - d, n2))
    else:
        mu = Partition((m + n - a - d, d))
    if __debug__:
        st = statistics(theta, mu)
        assert (st.deficit, st.area) == (d, a), (m, n, i, d, a, mu, st)
    return mu


def deficit_area_pairs(m: int, n: int) -> list[tuple[int, int]]:
    return [(d, a) for d in range(min(n, m - n) + 1) for a in range(d, m + n - 2 * d + 1)]


def verify_simsym_characterization(m: int, n: int) -> CaseResult:
    """Brute-force sim-sym set of ``(m, n)`` against the row-regular prediction."""
    lam = Partition((m, n))
    found = enumerate_sim_sym(lam)
    expected = expected_sim_sym_set(m, n)
    found_set, expected_set = set(found), set(expected)
    ok = found_set == expected_set
    details = {
        "shape": [m, n],
        "claim": "simsym-characterization",
        "pass": ok,
        "count": len(found),
        "witnesses": [t.to_json() for t in found],
    }
    if not ok:
        details["unexpected"] = [t.to_json() for t in found if t not in expected_set]
        details["missing"] = [t.to_json() for t in expected if t not in found_set]
    return CaseResult(input=[m, n], status=PASS if ok else FAIL, details=details)
