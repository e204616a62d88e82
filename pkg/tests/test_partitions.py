import pytest
from hypothesis import given, settings, strategies as st

from minorrel.partitions import (
    BiShape, admissible_partitions, bi_predecessors, classify_tshape, gamma_lambda,
    is_admissible, is_pieri_pair, is_shape_relation, is_single_type, one_predecessors,
    one_successors, parse_partition, partition, partitions_of, predecessors, rho_sigma,
    shape_relations_deg3, single_type_candidate, successors, tau, tensor_multiplicity,
    transpose, trivial_extension,
)
from minorrel.symfunc import plethysm_exterior


def small_partitions(max_size=10):
    return st.integers(0, max_size).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_transpose_examples():
    assert transpose(()) == ()
    assert transpose((6, 5, 5, 3, 1)) == (5, 4, 4, 3, 3, 1)
    assert transpose((2, 2)) == (2, 2)


@given(small_partitions())
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


def test_partition_parsing():
    assert parse_partition("4,1,1") == (4, 1, 1)
    assert parse_partition("(3, 3, 0)") == (3, 3)
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_admissible():
    assert is_admissible((2, 2, 2), 2, 3)
    assert is_admissible((4, 1, 1), 2, 3)
    assert not is_admissible((2, 2), 2, 3)


def test_predecessors_examples():
    assert predecessors((4, 2), 2) == [(4,), (3, 1), (2, 2)]
    assert predecessors((4, 1, 1), 2) == [(3, 1)]
    assert predecessors((6,), 2) == [(4,)]
    with pytest.raises(ValueError):
        predecessors((3,), 2)


def test_successors_examples():
    assert successors((2,), 2) == [(4,), (3, 1), (2, 2)]
    assert successors((2,), 2, max_row_length=2) == [(2, 2)]


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_predecessor_successor_duality(t, d):
    for lam in admissible_partitions(t, d):
        for alpha in predecessors(lam, t):
            assert lam in successors(alpha, t)
            assert is_pieri_pair(alpha, lam, t)
        for mu in successors(lam, t):
            assert lam in predecessors(mu, t)


def test_tensor_multiplicity_examples():
    for t in range(1, 5):
        assert tensor_multiplicity((t,), t) == 1
    assert tensor_multiplicity((4, 2), 2) == 3
    assert tensor_multiplicity((2, 2, 2), 2) == 1


def test_trivial_extension():
    assert trivial_extension((2,), 3, 1) == (3, 1, 1)
    assert trivial_extension((4, 1, 1), 3, 0) == (4, 1, 1)
    assert trivial_extension((4, 1, 1), 3, 1) == (5, 2, 2)
    with pytest.raises(ValueError):
        trivial_extension((1, 1, 1, 1), 3)


@given(small_partitions(8))
def test_one_box_duality(mu):
    for nu in one_successors(mu):
        assert mu in one_predecessors(nu)
    for nu in one_predecessors(mu):
        assert mu in one_successors(nu)


def test_single_type_examples():
    assert is_single_type((6,), 2) == (1, 1, 1)
    assert is_single_type((4, 2), 2) is None
    assert is_single_type((4, 1, 1), 2) == (3,)


@pytest.mark.parametrize("t", [2, 3])
def test_hooks_are_single_type(t):
    for d in range(1, 12 // t + 1):
        for lam in admissible_partitions(t, d):
            if len(lam) > 1 and all(x == 1 for x in lam[1:]):
                assert is_single_type(lam, t) is not None


@pytest.mark.parametrize("t", [2, 3])
def test_single_type_matches_plethysm(t):
    for d in range(1, 12 // t + 1):
        tables = {mu: plethysm_exterior(mu, t) for mu in partitions_of(d)}
        for lam in admissible_partitions(t, d):
            hits = [(mu, k) for mu, tab in tables.items() for lam2, k in tab.items() if lam2 == lam]
            expected = hits[0][0] if len(hits) == 1 and hits[0][1] == 1 else None
            assert is_single_type(lam, t) == expected, lam


@pytest.mark.parametrize("t", [2, 3, 4])
def test_single_type_candidate_is_sound(t):
    for d in range(1, 12 // t + 1):
        for lam in admissible_partitions(t, d):
            mu = single_type_candidate(lam, t)
            if mu is not None:
                assert is_single_type(lam, t) == mu


def test_single_type_recursion_not_necessary():
    # single type, but the only predecessor (5,3) is not
    assert single_type_candidate((5, 5), 2) is None
    assert is_single_type((5, 5), 2) == (3, 1, 1)
    assert is_single_type((5, 3), 2) is None


def test_bishape_helpers():
    b = BiShape((3, 3), (4, 1, 1))
    assert b.mirror() == BiShape((4, 1, 1), (3, 3))
    assert not b.is_symmetric()
    assert BiShape.from_json(b.to_json()) == b
    assert str(b) == "(3,3|4,1,1)"
    assert bi_predecessors(gamma_lambda(2, 1), 2) == [BiShape(tau(2, 1), tau(2, 1))]


def test_named_shapes():
    assert gamma_lambda(2, 1) == BiShape((3, 3), (4, 1, 1))
    assert gamma_lambda(3, 1) == BiShape((4, 4, 1), (5, 2, 2))
    assert rho_sigma(3, 2) == BiShape((5, 4), (6, 2, 1))
    assert tau(2, 2) == (4,)


def test_classify_tshape():
    assert set(classify_tshape(2, 3)) == {BiShape((3, 3), (4, 1, 1)), BiShape((4, 1, 1), (3, 3))}
    assert set(classify_tshape(3, 3)) == {BiShape((4, 4, 1), (5, 2, 2)), BiShape((5, 2, 2), (4, 4, 1))}
    assert classify_tshape(5, 4) == []
    assert classify_tshape(1, 3) == []


def test_shape_relations_deg3():
    assert shape_relations_deg3(1, 4, 5) == []
    assert BiShape((3, 3), (4, 1, 1)) in shape_relations_deg3(2, 3, 4)
    found = set(shape_relations_deg3(3, 5, 6))
    assert rho_sigma(3, 2) in found
    assert is_shape_relation(rho_sigma(3, 2), 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4))
def test_admissible_sizes(t, d):
    for lam in admissible_partitions(t, d):
        assert sum(lam) == t * d and len(lam) <= d
