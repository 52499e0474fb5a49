import pytest

from superflag.cellsys import family_ring, torus_ring
from superflag.exactalg import LaurentQTA
from superflag.geomsuper import (
    NotPavable, OracleTooLarge, check_alexander, check_counts, check_t1_power, classify_flags, count_series,
    index_ranges_ok, motivic_superpolynomial, oracle_enumerate, oracle_vs_cells, oracle_vs_torus,
    singular_superpolynomial, t1_rule,
)
from superflag.semigroup import semigroup_from_generators
from superflag.torusdim import TorusRing, torus_motivic_super

q = LaurentQTA.monomial(2, 0, 0)
t = LaurentQTA.monomial(0, 2, 0)
a = LaurentQTA.monomial(0, 0, 1)
one = LaurentQTA.monomial(0, 0, 0)


def trefoil(rk, lmax=None):
    ring = torus_ring(2, 3)
    cells = classify_flags(ring, rk, rk if lmax is None else lmax)
    return ring, cells, motivic_superpolynomial(cells).H


def test_oracle_trefoil_rank_one_over_f2():
    res = oracle_enumerate(semigroup_from_generators((2, 3)), [[(1, 2)], [(1, 3)]], 1, 2)
    assert res.strata() == {(0, 0): 2, (0, 1): 1}


def test_oracle_guard():
    with pytest.raises(OracleTooLarge):
        oracle_enumerate(semigroup_from_generators((3, 4)), [[(1, 3)], [(1, 4)]], 2, 3)


@pytest.mark.parametrize("p,q_,rk,prime", [(2, 3, 1, 3), (2, 3, 2, 2), (2, 5, 1, 3), (3, 4, 1, 2)])
def test_oracle_matches_torus_formulas(p, q_, rk, prime):
    ok, bad, n = oracle_vs_torus(p, q_, rk, prime)
    assert ok, bad
    assert n > 0


@pytest.mark.parametrize("rk,prime", [(1, 3), (2, 2)])
def test_oracle_matches_cells(rk, prime):
    ok, got, model = oracle_vs_cells(torus_ring(2, 3), rk, prime, ell=1)
    assert ok, (got, model)


def test_motivic_trefoil_matches_torus_formula():
    for rk in (1, 2):
        _, _, H = trefoil(rk)
        assert H == torus_motivic_super(TorusRing(2, 3), rk)


def test_trefoil_rank_one():
    _, cells, H = trefoil(1)
    assert H == one + q * t + q * a
    assert singular_superpolynomial(cells) == H


def test_alexander_and_negative_control():
    ring, _, H = trefoil(1)
    ok, diff = check_alexander(H, ring.semigroup)
    assert ok and diff.is_zero()
    ok, _ = check_alexander(H + q * a, ring.semigroup)
    assert not ok


def test_t1_power_and_negative_control():
    _, _, H1 = trefoil(1)
    _, _, H2 = trefoil(2)
    ok, _ = check_t1_power(H2, H1, 2)
    assert ok
    ok, diff = check_t1_power(H2 + q, H1, 2)
    assert not ok and diff == q


def test_t1_rule_on_trefoil():
    ring, _, H2 = trefoil(2)
    assert t1_rule(ring, 2, 2) == (one + q + q * a) ** 2


def test_counts_agree_with_polynomial():
    ring, cells, H = trefoil(2)
    full = 4 * ring.semigroup.delta
    for size in (2, 3, 4):
        assert check_counts(H, count_series(cells, size), size, full)
    assert not check_counts(H + q, count_series(cells, 3), 3, full)


def test_index_windows():
    _, _, H1 = trefoil(1)
    assert index_ranges_ok(H1, 1, 1, 2)
    _, _, H2 = trefoil(2)
    # d and ell windows hold; the t window does not (a 1-flag cell has dim 5 > 4)
    assert index_ranges_ok(H2, 1, 2, 2, check_t=False)
    assert not index_ranges_ok(H2, 1, 2, 2)
    assert H2.coeff(2, -2, 1) == 1


def test_singular_strict_refuses_non_affine():
    cells = classify_flags(family_ring(7), 2, 0)
    with pytest.raises(NotPavable):
        singular_superpolynomial(cells)
    assert singular_superpolynomial(cells, strict=False) == motivic_superpolynomial(cells).H
