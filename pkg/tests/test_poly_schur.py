from itertools import product

import pytest

from tridyck.errors import DegreeOverflow, NotSymmetric
from tridyck.partition import Partition, enumerate_subpartitions, partitions_of
from tridyck.poly import (
    MultiPoly,
    drop_last_variable,
    evaluate,
    homogenize,
    parse_polynomial,
    substitute,
)
from tridyck.schur import (
    SchurExpansion,
    a_lambda_by_slopes,
    a_lambda_polynomial,
    decompose_schur_2var,
    decompose_schur_3var,
    enumerate_ssyt,
    is_qt_symmetric,
    schur_polynomial,
)


def qt(text):
    return parse_polynomial(text, 2)


def qtr(text):
    return parse_polynomial(text, 3)


def complete_homogeneous(k, arity):
    if k < 0:
        return MultiPoly.zero(arity)
    return MultiPoly(arity, {e: 1 for e in product(range(k + 1), repeat=arity) if sum(e) == k})


def jacobi_trudi(shape, arity):
    """Determinant of ``h_{shape_i - i + j}`` by cofactor expansion."""
    shape = list(shape)
    size = len(shape)
    matrix = [[complete_homogeneous(shape[i] - i + j, arity) for j in range(size)] for i in range(size)]

    def det(rows, cols):
        if not rows:
            return MultiPoly.one(arity)
        r, rest = rows[0], rows[1:]
        total = MultiPoly.zero(arity)
        for k, c in enumerate(cols):
            minor = det(rest, cols[:k] + cols[k + 1:])
            term = matrix[r][c] * minor
            total = total + (term if k % 2 == 0 else -term)
        return total

    return det(list(range(size)), list(range(size)))


def test_multipoly_arithmetic():
    p = qt("q + t")
    assert p * p == qt("q^2 + 2qt + t^2")
    assert p - p == 0
    assert (p * 3).coefficient((1, 0)) == 3
    assert str(qt("2q^2t + q^4t")) == "q^4*t + 2*q^2*t"
    assert parse_polynomial("-q + 3", 2) == MultiPoly(2, {(1, 0): -1, (0, 0): 3})


def test_multipoly_json_round_trip():
    p = qtr("q^2r + 5t - 1")
    assert MultiPoly.from_json(p.to_json()) == p
    assert p.to_json()["vars"] == ["q", "t", "r"]


def test_parse_rejects_unknown_variable():
    with pytest.raises(ValueError):
        parse_polynomial("q*r", 2)


def test_substitute_and_evaluate():
    assert evaluate(a_lambda_polynomial((2, 1)), (1, 1)) == 5
    p = qt("q^2t + qt^3")
    assert substitute(p, [None, 2]) == qt("2q^2 + 8q")
    assert evaluate(qtr("qtr + r^2"), (2, 3, 5)) == 55


def test_homogenize():
    assert homogenize(qt("q^2 + t + 1"), 3) == qtr("q^2r + tr^2 + r^3")
    assert drop_last_variable(homogenize(qt("q^2 + t + 1"), 3)) == qt("q^2 + t + 1")
    with pytest.raises(DegreeOverflow):
        homogenize(qt("q^4"), 3)


def test_ssyt_counts():
    # number of SSYT with entries <= 3: s_{2,1}(1,1,1) = 8, s_{3,1}(1,1,1) = 15
    assert len(enumerate_ssyt((2, 1), 3)) == 8
    assert len(enumerate_ssyt((3, 1), 3)) == 15
    assert enumerate_ssyt((1, 1, 1, 1), 3) == []


def test_schur_small_examples():
    assert schur_polynomial((2, 1), 2) == qt("q^2t + qt^2")
    assert schur_polynomial((3, 1), 2) == qt("q^3t + q^2t^2 + qt^3")
    assert schur_polynomial((1, 1, 1), 2) == 0
    assert schur_polynomial((1, 1, 1), 3) == qtr("qtr")


def test_two_row_schur_closed_form():
    for b in range(13):
        for a in range(b + 1):
            expected = MultiPoly(2, {(k, a + b - k): 1 for k in range(a, b + 1)})
            assert schur_polynomial((b, a), 2) == expected


@pytest.mark.parametrize("size", range(1, 7))
def test_schur_matches_jacobi_trudi(size):
    for shape in partitions_of(size):
        for arity in (2, 3):
            assert schur_polynomial(shape, arity) == jacobi_trudi(shape, arity), (shape, arity)


def test_decompose_2var_examples():
    assert decompose_schur_2var(qt("q^2 + qt + t^2 + q + t")) == {Partition((2,)): 1, Partition((1,)): 1}
    assert decompose_schur_2var(qt("q^2t + qt^2 - q^2 - t^2")) == {
        Partition((2, 1)): 1, Partition((2,)): -1, Partition((1, 1)): 1}
    with pytest.raises(NotSymmetric):
        decompose_schur_2var(qt("q^2 + t"))


def test_decompose_3var_round_trip():
    exp = SchurExpansion({Partition((3, 1)): 2, Partition((2, 1, 1)): 1, Partition((1,)): -1, Partition(()): 4})
    assert decompose_schur_3var(exp.to_polynomial(3)) == exp
    with pytest.raises(NotSymmetric):
        decompose_schur_3var(qtr("q^2r"))


def test_expansion_behaviour():
    exp = SchurExpansion({Partition((3, 1)): 1, Partition((5,)): 1, Partition((1, 1, 1, 1)): 2})
    assert str(exp) == "s[5] + s[3,1] + 2*s[1,1,1,1]"
    assert exp.restrict_length(3) == {Partition((5,)): 1, Partition((3, 1)): 1}
    assert exp.is_positive()
    assert not SchurExpansion({Partition((1,)): -1}).is_positive()


def test_qt_symmetry():
    assert is_qt_symmetric(qt("q^2t + qt^2 + 1"))
    assert not is_qt_symmetric(qt("q^2t"))


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1), (3, 2), (4, 2, 1), (3, 2, 1), (4, 3, 1), (5, 3, 1)])
def test_a_lambda_two_routes(lam):
    assert a_lambda_polynomial(lam) == a_lambda_by_slopes(lam)


def test_a_lambda_small_values():
    assert a_lambda_polynomial((2, 1)) == qt("q^3 + q^2t + qt^2 + t^3 + qt")
    assert decompose_schur_2var(a_lambda_polynomial((2, 1))) == {Partition((3,)): 1, Partition((1, 1)): 1}
    assert a_lambda_polynomial((1,)) == qt("q + t")


@pytest.mark.parametrize("lam", [(2, 1), (3, 2), (4, 2, 1), (5, 3, 1)])
def test_a_lambda_counts_sub_shapes(lam):
    assert evaluate(a_lambda_polynomial(lam), (1, 1)) == len(enumerate_subpartitions(lam))
