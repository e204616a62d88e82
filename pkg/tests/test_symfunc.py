import json

import pytest
from hypothesis import given, settings, strategies as st

from minorrel.partitions import BiShape, admissible_partitions, partitions_of, tau, transpose
from minorrel.symfunc import (
    CapExceeded, character, dim_schur, expansion_from_json, expansion_to_json, mult_in_J,
    mult_in_S, plethysm_exterior, powersum_to_schur, quadratic_kernel_shapes,
    schur_to_powersum, sym_power_exterior, z,
)
from math import factorial


def test_character_examples():
    for rho in partitions_of(4):
        assert character((4,), rho) == 1
    assert character((1, 1), (2,)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        character((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    parts = partitions_of(n)
    for rho in parts:
        for sig in parts:
            s = sum(character(lam, rho) * character(lam, sig) for lam in parts)
            assert s == (z(rho) if rho == sig else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_specht_dimensions_sum(n):
    assert sum(character(lam, (1,) * n) ** 2 for lam in partitions_of(n)) == factorial(n)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_schur_powersum_roundtrip(lam):
    assert powersum_to_schur(schur_to_powersum(lam)) == {lam: 1}


def test_plethysm_examples():
    assert plethysm_exterior((3,), 2) == {(4, 1, 1): 1, (3, 3): 1}
    assert plethysm_exterior((1, 1, 1, 1), 2) == {(8,): 1, (6, 2): 1, (4, 4): 1, (4, 2, 2): 1, (2, 2, 2, 2): 1}
    for t in range(1, 5):
        assert plethysm_exterior((1,), t) == {(t,): 1}


def test_sym_power_examples():
    assert set(sym_power_exterior(3, 2)) == {(6,), (4, 2), (2, 2, 2)}
    assert sym_power_exterior(1, 3) == {(3,): 1}
    # tau_u lies in the symmetric square exactly for even u
    assert sym_power_exterior(2, 3) == {(3, 3): 1, (5, 1): 1}
    for t in range(1, 6):
        sq = sym_power_exterior(2, t)
        assert set(sq) == {tau(t, u) for u in range(0, t + 1, 2)}


def _sdim(lam, n):
    # standard Schur functor dimension by hook content, used as an independent check
    from fractions import Fraction
    r = Fraction(1)
    lt = transpose(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            r *= Fraction(n + j - i, row - j + lt[j] - i - 1)
    return int(r)


@pytest.mark.parametrize("t,d", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 3)])
def test_plethysm_dimensions(t, d):
    n = 2 * t + 1
    e = _sdim((1,) * t, n)
    for mu in partitions_of(d):
        lhs = _sdim(transpose(mu), e)
        rhs = sum(k * dim_schur(lam, n) for lam, k in plethysm_exterior(mu, t).items())
        assert lhs == rhs


def test_plethysm_cap():
    with pytest.raises(CapExceeded) as exc:
        plethysm_exterior((1,) * 7, 2)
    assert "cap" in str(exc.value)
    assert plethysm_exterior((1,) * 7, 2, cap=14)


def test_plethysm_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MINORREL_CACHE_DIR", str(tmp_path))
    first = plethysm_exterior((2, 1), 3)
    assert any(tmp_path.iterdir())
    assert plethysm_exterior((2, 1), 3) == first


def test_expansion_json_roundtrip():
    exp = plethysm_exterior((2, 2), 2)
    data = expansion_to_json(exp)
    assert expansion_from_json(json.loads(json.dumps(data))) == exp
    assert data[0]["partition"] == [6, 2]


def test_dim_schur_examples():
    assert dim_schur((2,), 2) == 1
    assert dim_schur((1, 1), 2) == 3
    assert dim_schur((2, 2), 4) == 20
    assert dim_schur((5,), 4) == 0


def test_mult_in_S_and_J():
    assert mult_in_S(BiShape((4, 2), (4, 2)), 2) == 2
    assert mult_in_S(BiShape((6,), (5, 1)), 2) == 0
    assert mult_in_S(BiShape((6,), (4, 2)), 2) == 1
    assert mult_in_J(BiShape((4, 2), (4, 2)), 2) == 1
    assert mult_in_J(BiShape((2, 2), (2, 2)), 2) == 0
    assert mult_in_J(BiShape((3, 1), (1, 1, 1, 1)), 2) == 0


@pytest.mark.parametrize("t,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_cauchy_dimension(t, d):
    # sum over bi-shapes of dim products recovers the symmetric power dimension
    m = n = t + 1
    lams = admissible_partitions(t, d)
    total = sum(mult_in_S(BiShape(a, b), t) * dim_schur(a, m) * dim_schur(b, n)
                for a in lams for b in lams)
    from math import comb
    k = comb(m, t) * comb(n, t)
    assert total == comb(k + d - 1, d)


def test_quadratic_kernel_shapes():
    assert set(quadratic_kernel_shapes(2)) == {BiShape((2, 2), (4,)), BiShape((4,), (2, 2))}
    assert quadratic_kernel_shapes(1) == []
    assert len(quadratic_kernel_shapes(3)) == 4
