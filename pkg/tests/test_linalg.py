import random

from hypothesis import given, settings, strategies as st

from minorrel import linalg


def _rows(mat):
    return [{j: x for j, x in enumerate(r) if x} for r in mat]


def _rank_fraction(mat):
    from fractions import Fraction
    m = [[Fraction(x) for x in r] for r in mat]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_matches_fractions(mat):
    assert linalg.rank(_rows(mat)) == _rank_fraction(mat)
    assert linalg.rank_mod(_rows(mat)) == _rank_fraction(mat)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel(mat):
    ncols = len(mat[0])
    ker = linalg.kernel(_rows(mat), range(ncols))
    assert len(ker) == ncols - _rank_fraction(mat)
    for vec in ker:
        assert all(x == 0 for x in linalg.apply(_rows(mat), vec))


def test_echelon_incremental():
    ech = linalg.Echelon()
    assert ech.add({"a": 2, "b": 4})
    assert not ech.add({"a": -1, "b": -2})
    assert ech.add({"b": 1})
    assert ech.contains({"a": 5})
    assert len(ech) == 2


def test_big_entries():
    rng = random.Random(1)
    mat = [[rng.randrange(-10**30, 10**30) for _ in range(5)] for _ in range(4)]
    mat.append([a + b for a, b in zip(mat[0], mat[1])])
    assert linalg.rank(_rows(mat)) == 4
