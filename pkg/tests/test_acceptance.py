"""End-to-end acceptance checks, one group per criterion.

Run with ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end) or directly as a script.
"""
import sys
import time
from functools import lru_cache

import pytest

from superflag.cellsys import family_ring, torus_ring
from superflag.daha import daha_superpolynomial, relation_suite
from superflag.exactalg import specialize
from superflag.geomsuper import check_alexander, check_t1_power, oracle_vs_torus, t1_rule
from superflag.gmod import enumerate_standard_modules
from superflag.harness import geometric_superpolynomial, golden_superpolynomial, reproduce_tables
from superflag.semigroup import family_semigroup, semigroup_from_generators


def criterion(n, text):
    return pytest.mark.criterion(n, text)


@lru_cache(maxsize=None)
def geometric(key, rk, lmax=None):
    ring = family_ring(key) if isinstance(key, int) else torus_ring(*key)
    return geometric_superpolynomial(ring, rk, lmax)


@lru_cache(maxsize=None)
def daha(r, s, rk):
    return daha_superpolynomial(list(r), list(s), rk)


def semigroup_of(key):
    return family_semigroup(key) if isinstance(key, int) else semigroup_from_generators(key)


# ---------------------------------------------------------------- 1

@criterion(1, "standard-module counts and delta for the <4,6,6+v> family")
@pytest.mark.parametrize("v,count,delta", [(7, 25, 8), (9, 29, 9), (15, 41, 12)])
def test_module_counts(v, count, delta):
    t0 = time.time()
    S = family_semigroup(v)
    assert S.delta == delta
    assert len(enumerate_standard_modules(S)) == count
    assert time.time() - t0 < 1


# ---------------------------------------------------------------- 2

ORACLE_RUNS = [
    (2, 3, 1, 3), (2, 3, 1, 2), (2, 3, 2, 3), (2, 3, 2, 2),
    (2, 5, 1, 3), (2, 5, 1, 2), (2, 5, 2, 3), (2, 5, 2, 2),
    (3, 4, 1, 3), (3, 4, 1, 2),
]


@criterion(2, "oracle point counts equal the torus dimension formulas")
@pytest.mark.parametrize("p,q,rk,prime", ORACLE_RUNS)
def test_oracle_vs_torus(p, q, rk, prime):
    ok, bad, n = oracle_vs_torus(p, q, rk, prime, ell=1)
    assert n > 0
    assert ok, bad[:5]


# ---------------------------------------------------------------- 3

@criterion(3, "v=7 rank-2 a^0 part equals the reference polynomial")
def test_v7_a0():
    H = geometric(7, 2, 0).truncate_a(0)
    G = golden_superpolynomial(7)
    assert G.coeff(16, 16, 0) == 14
    assert G.coeff(32, 64, 0) == 1
    assert H == G, H - G


# ---------------------------------------------------------------- 4

@criterion(4, "v=9 rank-2 polynomial against the reference (a^0, a^1, all a at t=1)")
def test_v9_a0_a1():
    H = geometric(9, 2, 1)
    G = golden_superpolynomial(9).truncate_a(1)
    assert H == G, H - G


@criterion(4, "v=9 rank-2 polynomial against the reference (a^0, a^1, all a at t=1)")
def test_v9_t1():
    ring = family_ring(9)
    lhs = t1_rule(ring, 2, 2 * (ring.p - 1))
    assert lhs == specialize(golden_superpolynomial(9), {"t": 1})


@criterion(4, "v=9 rank-2 polynomial against the reference (a^0, a^1, all a at t=1)")
def test_v9_full():
    H = geometric(9, 2)
    assert specialize(H, {"t": 1}) == specialize(golden_superpolynomial(9), {"t": 1})
    assert H == golden_superpolynomial(9)


# ---------------------------------------------------------------- 5

@criterion(5, "potentially non-affine type tables for v=7, 9, 15")
@pytest.mark.parametrize("v", [7, 9, 15])
def test_tables(v):
    rep = reproduce_tables(v)
    assert rep.ok, rep.missing
    if v == 9:
        assert sorted(rep.nonadmissible_pairs) == sorted([
            ((5, 18, 22, 26, 34, 35), (5, 14, 18, 22, 26, 34, 35)),
            ((4, 5, 18, 22, 26, 34, 35), (4, 5, 14, 18, 22, 26, 34, 35)),
        ])


# ---------------------------------------------------------------- 6

@criterion(6, "DAHA relations, B_3, coinvariant symmetry and Macdonald identities")
def test_relation_suite():
    res = relation_suite(nmax=3, weight_size=3)
    bad = [name for name, ok in res if not ok]
    assert not bad
    names = " ".join(name for name, _ in res)
    for tag in ("B3 relation", "phi symmetry", "E_omega_3", "P_omega_1", "evaluation", "quadratic", "pi^n"):
        assert tag in names


# ---------------------------------------------------------------- 7

@criterion(7, "DAHA superpolynomial equals the motivic one for torus knots")
@pytest.mark.parametrize("r,s,rk", [(3, 2, 1), (5, 2, 1), (4, 3, 1), (3, 2, 2)])
def test_daha_vs_motivic(r, s, rk):
    lo, hi = sorted((r, s))
    H = geometric((lo, hi), rk)
    assert daha((r,), (s,), rk) == H, daha((r,), (s,), rk) - H


# ---------------------------------------------------------------- 8

RANK_ONE = [(2, 3), (2, 5), (3, 4), 7, 9]
RANK_TWO = [(2, 3), (2, 5), (3, 4), 7, 9]


@criterion(8, "Alexander identity at rank 1 and t=1 power symmetry at rank 2")
@pytest.mark.parametrize("key", RANK_ONE, ids=str)
def test_alexander(key):
    ok, diff = check_alexander(geometric(key, 1), semigroup_of(key))
    assert ok, diff


@criterion(8, "Alexander identity at rank 1 and t=1 power symmetry at rank 2")
@pytest.mark.parametrize("key", RANK_TWO, ids=str)
def test_t1_power(key):
    ok, diff = check_t1_power(geometric(key, 2), geometric(key, 1), 2)
    assert ok, diff


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
