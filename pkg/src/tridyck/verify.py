"""Named verification suites over exhaustive ranges of shapes."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import NotSymmetric, UnknownSuite
from .lattice import (
    Lattice,
    build_lattice,
    cover_rotations,
    interval_polynomial,
    red_line_distances,
    two_part_side,
)
from .partition import (
    Partition,
    TriangularDyckPath,
    contains,
    enumerate_subpartitions,
    is_triangular,
    slope_bounds,
    triangular_partitions_up_to,
)
from .poly import drop_last_variable, homogenize
from .reference import reference_expansion, reference_table
from .report import FAIL, NOT_APPLICABLE, PASS, REFERENCE_UNCERTAIN, CaseResult, VerificationReport
from .schur import (
    a_lambda_polynomial,
    a_theta_polynomial,
    decompose_schur_2var,
    decompose_schur_3var,
    is_qt_symmetric,
)
from .simsym import (
    closed_form_a_lambda_2part,
    deficit_area_pairs,
    imp_path,
    is_sim_sym,
    verify_simsym_characterization,
)
from .tableaux import (
    deficit_cells,
    row_regular_range,
    row_regular_tableau,
    slope_similar_cells,
    statistics,
    top_down_tableau,
    triangular_tableau,
)


@dataclass(frozen=True)
class SuiteBounds:
    """Size limit for a suite run.  ``max_size`` is ``None`` for the suite default."""

    max_size: int | None = None
    slow: bool = False


def triangular_two_partitions(max_m: int, min_n: int = 0) -> Iterator[tuple[int, int]]:
    for m in range(1, max_m + 1):
        for n in range(min_n, m + 1):
            if is_triangular((m, n)):
                yield m, n


def _case(inp, ok: bool, **details) -> CaseResult:
    return CaseResult(input=inp, status=PASS if ok else FAIL, details=details)


# -- individual checks -------------------------------------------------------

def two_part_slope_bounds(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Closed form of the slope bounds of ``(m, n)`` for ``1 <= n <= m``.

    The upper bound is attained at ``(0, 0)``, ``(1, 0)`` or, when ``n < m``,
    at ``(0, n)``, the first bottom-row cell with nothing above it.
    """
    upper = min(Fraction(2, m + 1), Fraction(1, n))
    if n < m:
        upper = min(upper, Fraction(1, m - n))
    return Fraction(1, m - n + 2), upper


def check_triangularity(m: int) -> CaseResult:
    """Both characterisations of triangular 2-partitions ``(m, n)`` for one ``m``."""
    bad = []
    for n in range(0, m + 1):
        tri = is_triangular((m, n))
        if tri != (n <= math.ceil(m / 2)) or tri != (n <= m - n + 1):
            bad.append(n)
        if n >= 1 and slope_bounds((m, n)) != two_part_slope_bounds(m, n):
            bad.append(n)
    return _case([m], not bad, bad_n=sorted(set(bad)))


def check_deficit_equals_nonsimilar(lam: Partition) -> CaseResult:
    theta = triangular_tableau(lam)
    bad = []
    for mu in enumerate_subpartitions(lam):
        non_similar = set(mu.cells()) - slope_similar_cells(TriangularDyckPath(lam, mu))
        if deficit_cells(theta, mu) != non_similar:
            bad.append(list(mu))
    return _case(list(lam), not bad, mismatches=bad)


def check_schur_positivity_qt(lam: Partition) -> CaseResult:
    p = a_lambda_polynomial(lam)
    try:
        exp = decompose_schur_2var(p)
    except NotSymmetric:
        return _case(list(lam), False, symmetric=False)
    return _case(list(lam), exp.is_positive(), symmetric=True, expansion=str(exp))


def check_two_part_closed_form(m: int, n: int) -> CaseResult:
    """Closed form for every row-regular tableau plus the (deficit, area) bijection."""
    expected = closed_form_a_lambda_2part(m, n)
    bad_i = []
    bad_bijection = []
    subshapes = set(enumerate_subpartitions((m, n)))
    pairs = deficit_area_pairs(m, n)
    for i in row_regular_range(m, n):
        theta = row_regular_tableau(m, n, i)
        if decompose_schur_2var(a_theta_polynomial(theta)) != expected:
            bad_i.append(i)
        by_pair = {}
        for mu in subshapes:
            st = statistics(theta, mu)
            by_pair.setdefault((st.deficit, st.area), []).append(mu)
        inverse_ok = all(by_pair.get((d, a)) == [imp_path(m, n, i, d, a)] for d, a in pairs)
        if sorted(by_pair) != sorted(pairs) or not inverse_ok:
            bad_bijection.append(i)
    return _case([m, n], not bad_i and not bad_bijection,
                 closed_form=str(expected), bad_indices=bad_i, bad_bijection=bad_bijection)


def qtr_prediction(m: int, n: int):
    return drop_last_variable(closed_form_a_lambda_2part(m, n).to_polynomial(3))


def check_qtr_two_part(m: int, n: int) -> CaseResult:
    lam = Partition((m, n))
    got = interval_polynomial(lam, top_down_tableau(lam))
    want = qtr_prediction(m, n)
    return _case([m, n], got == want, intervals=build_lattice(lam).interval_count())


def check_lattice_conjecture(lam: Iterable[int]) -> CaseResult:
    """Evidence for symmetry and Schur positivity of the top-down interval polynomial.

    Status is ``not-applicable`` when the top-down tableau is not sim-sym.
    Otherwise the polynomial must be symmetric in ``q, t`` with a nonnegative
    two-variable expansion, and must equal any stored reference expansion at
    ``r = 1``.  The single-degree lift through :func:`homogenize` is attempted
    and its outcome recorded, but does not decide the status.
    """
    lam = Partition(lam)
    inp = list(lam)
    theta = top_down_tableau(lam)
    if not is_sim_sym(theta):
        return CaseResult(inp, NOT_APPLICABLE, {"reason": "top-down tableau is not sim-sym"})
    p = interval_polynomial(lam, theta)
    details: dict = {"intervals": build_lattice(lam).interval_count()}
    symmetric = is_qt_symmetric(p)
    details["symmetric"] = symmetric
    ok = symmetric
    if symmetric:
        exp2 = decompose_schur_2var(p)
        details["expansion_qt"] = str(exp2)
        details["positive_qt"] = exp2.is_positive()
        ok = ok and exp2.is_positive()
    try:
        details["homogeneous_lift"] = str(decompose_schur_3var(homogenize(p, lam.size)))
    except NotSymmetric as exc:
        details["homogeneous_lift"] = f"failed: {exc}"
    entry = reference_expansion(lam)
    if entry is not None:
        ref_poly = drop_last_variable(entry.expansion.restrict_length(3).to_polynomial(3))
        match = ref_poly == p and entry.expansion.is_positive()
        details["reference"] = str(entry.expansion)
        details["reference_match"] = match
        if not match:
            if entry.uncertain and ok:
                return CaseResult(inp, REFERENCE_UNCERTAIN, details)
            ok = False
    return CaseResult(inp, PASS if ok else FAIL, details)


def sim_formula_top_down(m: int, n: int, i: int, j: int) -> int:
    """Predicted top-down sim of ``(m-i, n-j)`` inside ``(m, n)``."""
    if i >= j:
        return m + n - 2 * i if i < n else m - i
    return m + n - 2 * j + 1


def level_set_formula(m: int, n: int, s: int) -> set[Partition]:
    """Sub-shapes of ``(m, n)`` predicted to have top-down sim equal to ``s``."""
    out = set()
    if s <= m - n:
        out |= {Partition((s, k)) for k in range(min(s, n) + 1)}
    for i in range(n):
        if s == m + n - 2 * i:
            out |= {Partition((m - i, n - j)) for j in range(i + 1)}
    for j in range(1, n + 1):
        if s == m + n - 2 * j + 1:
            out |= {Partition((m - i, n - j)) for i in range(j)}
    return out


def _polygons(lam: Partition, lat: Lattice) -> list[str]:
    """Check the pentagon / square shapes hanging off nodes with both rotations."""
    m, n = lam.part(0), lam.part(1)
    covers = set(lat.covers)
    idx = lat.index

    def is_chain(chain) -> bool:
        parts = [Partition(x) for x in chain]
        if any(p not in idx for p in parts):
            return False
        return all((idx[a], idx[b]) in covers for a, b in zip(parts, parts[1:]))

    bad = []
    for mu in lat.nodes:
        x, y = mu.part(0), mu.part(1)
        i, j = m - x, n - y
        if not (x > y and y > 0):
            continue
        if i == j:
            chains = [[(x, y), (x, y - 1), (x - 1, y - 1), (x - 2, y - 1)],
                      [(x, y), (x - 1, y), (x - 2, y - 1)]]
        elif i < j:
            chains = [[(x, y), (x, y - 1), (x - 1, y - 1)],
                      [(x, y), (x - 1, y), (x - 1, y - 1)]]
        else:
            chains = [[(x, y), (x - 1, y - 1), (x - 2, y - 1)],
                      [(x, y), (x - 1, y), (x - 2, y - 1)]]
        if not all(is_chain(c) for c in chains):
            bad.append(f"polygon at {list(mu)}")
    return bad


def check_structure_two_part(m: int, n: int) -> CaseResult:
    lam = Partition((m, n))
    lat = build_lattice(lam)
    theta = top_down_tableau(lam)
    bad: list[str] = []
    # rotations
    for mu in lat.nodes:
        x, y = mu.part(0), mu.part(1)
        i, j = m - x, n - y
        expected = set()
        if x > y:
            expected.add(Partition((x - 1, y)))
        if y > 0:
            expected.add(Partition((x, y - 1)) if i <= j else Partition((x - 1, y - 1)))
        if set(cover_rotations(lam, mu)) != expected:
            bad.append(f"rotations of {list(mu)}")
    # comparability and distance by side
    for u, tau in enumerate(lat.nodes):
        dist_row = lat.longest_distances[u]
        side = two_part_side(lam, tau)
        for v, mu in enumerate(lat.nodes):
            d1, d2 = tau.part(0) - mu.part(0), tau.part(1) - mu.part(1)
            if side == "right":
                comparable = contains(tau, mu) and d1 >= d2
                distance = d1
            else:
                comparable = contains(tau, mu)
                distance = d1 + d2
            got = dist_row.get(v)
            if comparable != (got is not None) or (comparable and got != distance):
                bad.append(f"distance {list(tau)} -> {list(mu)}")
            if got is not None and side == "right" and two_part_side(lam, mu) != "right":
                bad.append(f"side of {list(mu)} above right {list(tau)}")
    # sim values and level sets
    sims: dict[int, set[Partition]] = {}
    for mu in lat.nodes:
        i, j = m - mu.part(0), n - mu.part(1)
        s = statistics(theta, mu).sim
        sims.setdefault(s, set()).add(mu)
        if s != sim_formula_top_down(m, n, i, j):
            bad.append(f"sim of {list(mu)}")
    for s in range(m + n + 1):
        if sims.get(s, set()) != level_set_formula(m, n, s):
            bad.append(f"level set {s}")
    # red-line distance polynomials
    for mu in lat.nodes:
        i, j = m - mu.part(0), n - mu.part(1)
        low = j if i > j else i
        if red_line_distances(lat, mu) != {d: 1 for d in range(low, i + j + 1)}:
            bad.append(f"red-line distances of {list(mu)}")
    bad.extend(_polygons(lam, lat))
    return _case([m, n], not bad, problems=bad[:20])


# -- suites ------------------------------------------------------------------

def _shapes_conjecture(bounds: SuiteBounds) -> list[Partition]:
    default_all, default_table = (14, 21) if bounds.slow else (12, 15)
    all_limit = bounds.max_size if bounds.max_size is not None else default_all
    table_limit = bounds.max_size if bounds.max_size is not None else default_table
    shapes = {p for p in triangular_partitions_up_to(all_limit) if p}
    shapes |= {p for p in reference_table() if p.size <= table_limit}
    if bounds.slow:
        shapes.add(Partition((8, 6, 4, 2, 1)))
    return sorted(shapes, key=lambda p: (p.size, tuple(p)))


def _suite_triangularity(b: SuiteBounds):
    limit = b.max_size or 30
    return [check_triangularity(m) for m in range(1, limit + 1)]


def _suite_deficit(b: SuiteBounds):
    limit = b.max_size or 12
    return [check_deficit_equals_nonsimilar(p) for p in triangular_partitions_up_to(limit) if p]


def _suite_positivity(b: SuiteBounds):
    limit = b.max_size or 10
    return [check_schur_positivity_qt(p) for p in triangular_partitions_up_to(limit) if p]


def _suite_closed_form(b: SuiteBounds):
    limit = b.max_size or (20 if b.slow else 16)
    return [check_two_part_closed_form(m, n) for m, n in triangular_two_partitions(limit, 1)]


def _suite_simsym(b: SuiteBounds):
    limit = b.max_size or (14 if b.slow else 12)
    return [verify_simsym_characterization(m, n) for m, n in triangular_two_partitions(limit, 1)]


def _suite_qtr(b: SuiteBounds):
    limit = b.max_size or (26 if b.slow else 20)
    return [check_qtr_two_part(m, n) for m, n in triangular_two_partitions(limit) if m + n <= limit]


def _suite_conjecture(b: SuiteBounds):
    return [check_lattice_conjecture(p) for p in _shapes_conjecture(b)]


def _suite_structure(b: SuiteBounds):
    limit = b.max_size or 12
    return [check_structure_two_part(m, n) for m, n in triangular_two_partitions(limit)]


SUITES: dict[str, Callable[[SuiteBounds], list[CaseResult]]] = {
    "triangularity": _suite_triangularity,
    "deficit-equals-nonsim": _suite_deficit,
    "schur-positivity-qt": _suite_positivity,
    "2part-closed-form": _suite_closed_form,
    "2part-simsym": _suite_simsym,
    "2part-qtr": _suite_qtr,
    "conjecture-lattice": _suite_conjecture,
    "structure-2part": _suite_structure,
}


def run_suite(name: str, bounds: SuiteBounds | None = None) -> VerificationReport:
    if name not in SUITES:
        raise UnknownSuite(name)
    bounds = bounds or SuiteBounds()
    start = time.perf_counter()
    report = VerificationReport(suite=name, cases=SUITES[name](bounds))
    report.wall_time = time.perf_counter() - start
    return report
