import random

import pytest

from superflag.daha import (
    LAURENT, RATIONAL, Word, XPoly, apply_pi, apply_T, apply_X, apply_Y, coinvariant, daha_jones,
    daha_superpolynomial, elementary, evaluate_at_rho, gamma_lift, lift_matrix, macdonald_E, macdonald_P,
    newton_to_cable, phi, random_poly, substitute,
)
from superflag.exactalg import LaurentQTA, specialize

q = LaurentQTA.monomial(2, 0, 0)
t = LaurentQTA.monomial(0, 2, 0)
a = LaurentQTA.monomial(0, 0, 1)
one = LaurentQTA.monomial(0, 0, 0)
rt = LaurentQTA.monomial(0, 1, 0)  # t^(1/2)


@pytest.fixture
def polys():
    rng = random.Random(1)
    return {n: [random_poly(n, rng) for _ in range(2)] for n in (2, 3)}


def test_T_on_one():
    assert apply_T(1, XPoly.one(2)) == XPoly.one(2).scale(LAURENT.mono(0, 1))


def test_hecke_relations(polys):
    d = LAURENT.mono(0, 1) - LAURENT.mono(0, -1)
    for f in polys[3]:
        for i in (1, 2):
            assert (apply_T(i, apply_T(i, f)) - apply_T(i, f).scale(d) - f).is_zero()
            assert apply_T(i, apply_T(i, f), inverse=True) == f
        assert apply_T(1, apply_T(2, apply_T(1, f))) == apply_T(2, apply_T(1, apply_T(2, f)))


def test_pi_relations(polys):
    for f in polys[3]:
        assert apply_pi(apply_T(1, f)) == apply_T(2, apply_pi(f))
        assert apply_pi(apply_X(1, 1, f), 3) == apply_X(1, 1, apply_pi(f, 3)).scale(LAURENT.mono(-2, 0))


def test_Y_commute(polys):
    for f in polys[2]:
        assert apply_Y(1, 1, apply_Y(2, 1, f)) == apply_Y(2, 1, apply_Y(1, 1, f))
        assert apply_Y(2, -1, apply_Y(2, 1, f)) == f


def test_coinvariant_phi_symmetry():
    w = Word(0, (("X", 1, 1), ("T", 1, -1), ("Y", 2, 1)))
    e = XPoly.one(2)
    assert coinvariant(w.apply(e)) == coinvariant(phi(w).apply(e))


@pytest.mark.parametrize("r,s,word", [(3, 2, ["+", "-", "-"]), (2, 1, ["+", "-"]), (1, 1, ["-"])])
def test_gamma_lift(r, s, word):
    assert gamma_lift(r, s) == word
    assert [row[0] for row in lift_matrix(word)] == [r, s]


def test_alternative_lift_has_other_second_column():
    alt = gamma_lift(3, 2, alternative=True)
    assert lift_matrix(alt) == ((3, 4), (2, 3))


def test_lift_images_commute():
    x1, x2 = (substitute(gamma_lift(3, 2), Word(0, (("X", j, 1),))) for j in (1, 2))
    f = XPoly.monomial((1, 0))
    assert x1.apply(x2.apply(f)) == x2.apply(x1.apply(f))


def test_coinvariant_and_evaluation():
    assert coinvariant(XPoly.monomial((1, 0))) == rt ** -1
    assert evaluate_at_rho(elementary(1, 2)) == rt + rt ** -1


def test_macdonald_basics():
    assert macdonald_E((1, 0), 2, RATIONAL) == XPoly.monomial((1, 0), RATIONAL)
    assert macdonald_P((1, 1), 2, RATIONAL) == elementary(2, 2).to_ring(RATIONAL)
    P = macdonald_P((2, 0), 2, RATIONAL)
    assert P.is_symmetric()
    E = macdonald_E((0, 1), 2, RATIONAL)
    for j in (1, 2):
        Y = apply_Y(j, 1, E)
        assert Y == E.scale(Y.coeff((0, 1)))


def test_newton_to_cable():
    assert newton_to_cable([3, 2], [2, 1]) == [2, 13]
    assert newton_to_cable([3, 2], [2, 3]) == [2, 15]


def test_jones_values():
    assert daha_jones([1], [1], (1,), 2) == one
    assert daha_jones([3], [2], (1,), 2) == one + q * t - q * t * t
    assert daha_jones([3], [2], (1,), 3) == one + q * t - q * t ** 3


def test_lift_independence():
    for n in (2, 3):
        assert daha_jones([3], [2], (1,), n, alternative=True) == daha_jones([3], [2], (1,), n)


def test_superpolynomials():
    assert daha_superpolynomial([3], [2], 1) == one + q * t + q * a
    assert daha_superpolynomial([5], [2], 1) == one + q * t + q * q * t * t + q * a + q * q * t * a


def test_a_equals_minus_t_rank_restriction():
    H = daha_superpolynomial([3], [2], 1)
    assert specialize(H, {"a": -t}) == one
