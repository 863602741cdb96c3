import pytest

from tridyck.errors import ParameterOutOfRange
from tridyck.partition import Partition, enumerate_subpartitions, is_triangular
from tridyck.schur import a_lambda_polynomial, a_theta_polynomial, decompose_schur_2var
from tridyck.simsym import (
    closed_form_a_lambda_2part,
    deficit_area_pairs,
    enumerate_sim_sym,
    enumerate_sim_sym_slow,
    expected_sim_sym_set,
    imp_path,
    is_sim_sym,
    row_regular_set,
    special_two_five_tableau,
    verify_simsym_characterization,
)
from tridyck.tableaux import (
    enumerate_standard_tableaux,
    row_regular_tableau,
    statistics,
    top_down_tableau,
    triangular_tableau,
)
from tridyck.verify import triangular_two_partitions


def test_closed_form_examples():
    assert closed_form_a_lambda_2part(3, 2) == {Partition((5,)): 1, Partition((3, 1)): 1}
    assert closed_form_a_lambda_2part(6, 2) == {Partition((8,)): 1, Partition((6, 1)): 1, Partition((4, 2)): 1}
    assert closed_form_a_lambda_2part(4, 0) == {Partition((4,)): 1}
    with pytest.raises(ParameterOutOfRange):
        closed_form_a_lambda_2part(4, 4)


@pytest.mark.parametrize("m,n", list(triangular_two_partitions(10, min_n=1)))
def test_closed_form_matches_expansion(m, n):
    assert decompose_schur_2var(a_lambda_polynomial((m, n))) == closed_form_a_lambda_2part(m, n)


def test_special_tableau():
    assert special_two_five_tableau(6).rows == ((1, 3, 4, 6, 7, 8), (2, 5))
    assert is_sim_sym(special_two_five_tableau(6))
    with pytest.raises(ParameterOutOfRange):
        special_two_five_tableau(2)


def test_three_one_has_three_sim_sym_tableaux():
    # every row-regular tableau of (3,1) is sim-sym and there are m - 2(n-1) = 3 of them
    found = enumerate_sim_sym((3, 1))
    assert len(found) == 3
    assert set(found) == set(row_regular_set(3, 1)) == set(enumerate_standard_tableaux((3, 1)))


@pytest.mark.parametrize("lam", [(3, 2), (6, 2), (4, 2, 1), (4, 3, 1), (3, 2, 1), (5, 3, 1)])
def test_vectorised_route_matches_reference_route(lam):
    assert enumerate_sim_sym(lam) == enumerate_sim_sym_slow(lam)


def test_batch_size_does_not_change_result():
    assert enumerate_sim_sym((5, 3, 1), batch_size=7) == enumerate_sim_sym((5, 3, 1))


@pytest.mark.parametrize("m,n", list(triangular_two_partitions(10, min_n=1)))
def test_two_part_characterization(m, n):
    case = verify_simsym_characterization(m, n)
    assert case.ok, case.details
    assert case.details["count"] == len(expected_sim_sym_set(m, n))


def test_triangular_and_top_down_are_sim_sym():
    for lam in [(3, 2), (4, 2, 1), (3, 2, 1), (5, 3, 1), (7, 6, 4, 3, 1)]:
        assert is_sim_sym(triangular_tableau(lam))
    assert is_sim_sym(top_down_tableau((4, 2, 1)))
    assert not is_sim_sym(top_down_tableau((4, 3, 1)))


def test_imp_path_examples():
    assert imp_path(9, 4, 1, 0, 0) == (9, 4)
    assert imp_path(9, 4, 1, 0, 13) == ()
    assert imp_path(6, 2, 1, 2, 2) == (6,)


@pytest.mark.parametrize("args", [(4, 4, 1, 0, 0), (9, 4, 4, 0, 0), (9, 4, 1, 5, 5), (9, 4, 1, 2, 1), (9, 4, 1, 1, 12)])
def test_imp_path_rejects_out_of_range(args):
    with pytest.raises(ParameterOutOfRange):
        imp_path(*args)


@pytest.mark.parametrize("m,n", list(triangular_two_partitions(9, min_n=1)))
def test_imp_path_is_a_bijection(m, n):
    for i in range(1, m - 2 * (n - 1) + 1):
        theta = row_regular_tableau(m, n, i)
        images = {imp_path(m, n, i, d, a) for d, a in deficit_area_pairs(m, n)}
        assert images == set(enumerate_subpartitions((m, n)))
        for mu in images:
            st = statistics(theta, mu)
            assert imp_path(m, n, i, st.deficit, st.area) == mu


@pytest.mark.parametrize("m,n", list(triangular_two_partitions(12, min_n=1)))
def test_row_regular_deficit_area_pairs_are_unique(m, n):
    expected = sorted(deficit_area_pairs(m, n))
    for theta in row_regular_set(m, n):
        pairs = []
        for mu in enumerate_subpartitions((m, n)):
            st = statistics(theta, mu)
            pairs.append((st.deficit, st.area))
        assert sorted(pairs) == expected


@pytest.mark.parametrize("lam", [(3, 2), (6, 2), (4, 2, 1)])
def test_sim_sym_means_a_theta_equals_a_lambda(lam):
    target = a_lambda_polynomial(lam)
    for theta in enumerate_sim_sym(lam):
        assert a_theta_polynomial(theta) == target


def test_only_triangular_two_parts_are_used():
    assert all(is_triangular(p) for p in triangular_two_partitions(12))
