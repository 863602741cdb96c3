from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, strategies as st

from tridyck.errors import CellOutsideShape, ContainmentError, EmptyPartition, NotAPartition, NotTriangular
from tridyck.partition import (
    Partition,
    TriangularDyckPath,
    area,
    arm,
    cell_slope_interval,
    contains,
    enumerate_subpartitions,
    enumerate_triangular_partitions,
    format_partition,
    is_triangular,
    leg,
    mean_slope,
    parse_partition,
    partitions_of,
    slope_bounds,
)
from tridyck.verify import two_part_slope_bounds

partitions = st.lists(st.integers(1, 7), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_normalises_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition(()).size == 0


def test_partition_rejects_bad_input():
    with pytest.raises(NotAPartition):
        Partition((2, 3))
    with pytest.raises(NotAPartition):
        Partition((2, -1))


@pytest.mark.parametrize("text,parts", [("7,6,4,3,1", (7, 6, 4, 3, 1)), ("", ()), ("0", ()), ("5", (5,))])
def test_parse_and_format(text, parts):
    p = parse_partition(text)
    assert p == parts
    assert parse_partition(format_partition(p)) == p


def test_contains():
    assert contains((7, 6, 4, 3, 1), (5, 5, 3, 2))
    assert contains((3, 2), ())
    assert not contains((3, 2), (3, 3))
    assert not contains((3,), (1, 1))
    with pytest.raises(NotAPartition):
        contains((3, 2), (2, 3))


def test_arm_leg():
    assert (arm((4, 3, 1), (0, 0)), leg((4, 3, 1), (0, 0))) == (3, 2)
    assert (arm((4, 3, 1), (2, 0)), leg((4, 3, 1), (2, 0))) == (0, 0)
    assert (arm((4, 4), (0, 3)), leg((4, 4), (0, 3))) == (0, 1)
    with pytest.raises(CellOutsideShape):
        arm((4, 3, 1), (2, 1))


def test_cell_slope_interval():
    assert cell_slope_interval((4, 3, 1), (0, 0)) == (Fraction(1, 3), Fraction(1, 2))
    assert cell_slope_interval((1,), (0, 0)) == (0, 1)
    assert cell_slope_interval((4, 4), (1, 0))[1] == Fraction(1, 4)


def test_slope_bounds_and_mean():
    assert slope_bounds((4, 3, 1)) == (Fraction(1, 3), Fraction(1, 2))
    assert slope_bounds((3, 2)) == (Fraction(1, 3), Fraction(1, 2))
    assert slope_bounds((1,)) == (0, 1)
    assert mean_slope((7, 6, 4, 3, 1)) == Fraction(45, 112)
    assert mean_slope((3, 2)) == Fraction(5, 12)
    assert mean_slope((1,)) == Fraction(1, 2)
    with pytest.raises(EmptyPartition):
        slope_bounds(())
    with pytest.raises(NotTriangular):
        mean_slope((4, 4))


def test_triangularity_examples():
    assert is_triangular((4, 3, 1))
    assert not is_triangular((4, 4))
    assert is_triangular((1, 1, 1))
    assert not is_triangular((2, 2))
    assert is_triangular(())


def test_two_part_triangularity_range():
    for m in range(1, 31):
        for n in range(m + 1):
            assert is_triangular((m, n)) == (n <= ceil(m / 2)) == (n <= m - n + 1)


def test_two_part_slope_bounds_closed_form():
    for m in range(1, 20):
        for n in range(1, m + 1):
            assert slope_bounds((m, n)) == two_part_slope_bounds(m, n)


def test_printed_two_part_upper_bound_misses_bottom_row_cells():
    # (4,1): the cell (0,1) has admissible interval (0, 1/3), below 2/(m+1) = 2/5
    assert slope_bounds((4, 1))[1] == Fraction(1, 3)
    assert min(Fraction(2, 5), Fraction(1, 1)) == Fraction(2, 5)


def test_enumerate_triangular():
    assert enumerate_triangular_partitions(0) == [()]
    assert enumerate_triangular_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert Partition((3, 2, 1)) in enumerate_triangular_partitions(6)


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_subpartition_counts():
    assert len(enumerate_subpartitions((2, 1))) == 5
    assert len(enumerate_subpartitions((3, 2))) == 9
    assert len(enumerate_subpartitions((4, 2, 1))) == 19


def test_two_part_subpartition_count():
    for m in range(0, 15):
        for n in range(0, m + 1):
            assert len(enumerate_subpartitions((m, n))) == (2 * m - n + 2) * (n + 1) // 2


def test_area():
    assert area(TriangularDyckPath((7, 6, 4, 3, 1), (5, 5, 3, 2))) == 6
    assert area(TriangularDyckPath((3, 2), (3, 2))) == 0
    assert area(TriangularDyckPath((3, 2), ())) == 5
    with pytest.raises(ContainmentError):
        TriangularDyckPath((3, 2), (4,))
    with pytest.raises(NotTriangular):
        TriangularDyckPath((4, 4), ())


@given(partitions)
def test_cell_interval_width(p):
    for c in p.cells():
        lo, hi = cell_slope_interval(p, c)
        assert hi - lo == Fraction(1, arm(p, c) + leg(p, c) + 1)


@given(partitions)
def test_subpartitions_unique_sorted_and_contained(p):
    subs = enumerate_subpartitions(p)
    assert len(set(subs)) == len(subs)
    assert subs == sorted(subs, key=lambda s: (s.size, tuple(s)))
    assert all(contains(p, s) for s in subs)
    assert subs[0] == () and subs[-1] == p


@given(partitions)
def test_conjugate_involution(p):
    assert p.conjugate().conjugate() == p
    assert p.conjugate().size == p.size
