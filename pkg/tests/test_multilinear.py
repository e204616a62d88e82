from itertools import combinations, product

import pytest

from minorrel import linalg
from minorrel.multilinear import (
    TensorElem, added_boxes, bi_tensor, canonical_ext, check_u_invariant, ext, fd_tableau,
    lift_plan, perm_sign, project_fd, reading_tableau, successor_lift, symmetrize, tensor,
    u_action, weight_of, weight_partition, young_symmetrizer,
)
from minorrel.partitions import admissible_partitions, predecessors, transpose
from minorrel.relations import MinorPolynomial
from minorrel.symfunc import dim_schur


def test_perm_sign():
    assert perm_sign((1, 2, 3)) == 1
    assert perm_sign((2, 1, 3)) == -1
    assert perm_sign((3, 1, 2)) == 1


def test_canonical_ext():
    assert canonical_ext((2, 1)) == ((1, 2), -1)
    assert canonical_ext((1, 1)) == (None, 0)


def test_young_symmetrizer_examples():
    Lam = reading_tableau((2,))
    assert not young_symmetrizer(Lam, ((1, 1),))
    assert young_symmetrizer(Lam, ((1, 2),)) == tensor(1, 2) - tensor(2, 1)
    with pytest.raises(ValueError):
        young_symmetrizer(Lam, ((1, 2, 3),))


def test_project_fd_examples():
    assert project_fd(tensor(1, 2), 2) == ext((1, 2))
    assert project_fd(tensor(2, 1), 2) == -ext((1, 2))
    assert not project_fd(tensor(1, 1), 2)
    with pytest.raises(ValueError):
        project_fd(tensor(1, 2, 3), 2)


def test_u_invariance_basic():
    assert check_u_invariant(ext((1,)))
    assert not check_u_invariant(ext((2,)))
    assert check_u_invariant(ext((1, 2)))
    assert not check_u_invariant(ext((1, 3)))
    assert u_action(ext((1,)), 2, 1) == {}


def test_weights():
    assert weight_of(ext((1, 2), (1, 2))) == (2, 2)
    assert weight_partition(weight_of(ext((1, 2), (1, 2)))) == (2, 2)
    with pytest.raises(ValueError):
        weight_of(tensor(1) + tensor(2))


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_symmetric_square_element_is_invariant(t):
    for u in range(t + 1):
        base = tuple(range(1, t - u + 1))
        ground = list(range(t - u + 1, t + u + 1))
        v = TensorElem.zero("ext")
        for I in combinations(ground, u):
            J = tuple(x for x in ground if x not in I)
            v = v + ext(base + I, base + J, coeff=perm_sign(I + J))
        assert v and check_u_invariant(v)
        assert weight_partition(weight_of(v)) == transpose((t + u, t - u))


def test_lift_plan_example():
    g, thresholds, tail = lift_plan((7, 4, 1), (8, 6, 2))
    assert g == 8
    assert tail == [2, 5, 6, 8]
    assert added_boxes((7, 4, 1), (8, 6, 2)) == [(0, [8]), (1, [5, 6]), (2, [2])]


def test_lift_small_example():
    v = successor_lift(reading_tableau((2,)), (2,), (4,), 2)
    assert v and check_u_invariant(v)
    assert weight_of(v) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        successor_lift(reading_tableau((2,)), (2,), (2, 1, 1), 2)


@pytest.mark.parametrize("t,dmax", [(1, 4), (2, 3), (3, 2)])
def test_lifts_are_highest_weight_vectors(t, dmax):
    for d in range(1, dmax + 1):
        for gam in admissible_partitions(t, d):
            for lam in predecessors(gam, t):
                Lam = fd_tableau(lam, t) if lam else ()
                g = project_fd(successor_lift(Lam, lam, gam, t), t)
                assert g and check_u_invariant(g)
                assert weight_partition(weight_of(g)) == transpose(gam)


def test_symmetrize():
    p = symmetrize(bi_tensor(ext((1, 2), (1, 2)), ext((1, 2), (3, 4))))
    assert isinstance(p, MinorPolynomial)
    assert p.degree() == 2
    anti = bi_tensor(ext((1, 2), (1, 3)), ext((1, 2), (1, 2))) - bi_tensor(ext((1, 3), (1, 2)), ext((1, 2), (1, 2)))
    assert not symmetrize(anti)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetrizer_rank_small(n):
    for lam in [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2)]:
        Lam = reading_tableau(lam)
        vecs = []
        fills = [list(combinations(range(1, n + 1), r)) for r in lam]
        for fill in product(*fills):
            v = young_symmetrizer(Lam, fill)
            if v:
                vecs.append(dict(v.items()))
        assert linalg.rank(vecs) == dim_schur(lam, n)
