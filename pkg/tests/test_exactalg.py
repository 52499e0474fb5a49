import random
from fractions import Fraction

import pytest

from superflag.exactalg import (
    GF, LaurentQTA, MultiPoly, RatFunQT, UniPoly, divide_exact, evaluate, from_json, from_text,
    interpolate_counting_polynomial, pretty, specialize, tilde_normalize, to_json, to_text,
)

q = LaurentQTA.monomial(2, 0, 0)
t = LaurentQTA.monomial(0, 2, 0)
a = LaurentQTA.monomial(0, 0, 1)
one = LaurentQTA.const(1)


def rand_poly(rng, n=4):
    return LaurentQTA({(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(0, 2)): rng.randint(-4, 4)
                       for _ in range(n)})


def test_tilde_normalize_divides_lowest_a_free_monomial():
    assert tilde_normalize(q * t + q * q * t) == one + q
    F = one + q * t + q * a
    assert tilde_normalize(F) == F


def test_tilde_normalize_needs_a_free_part():
    with pytest.raises(ValueError, match="no a-constant part"):
        tilde_normalize(q * a)


def test_tilde_normalize_idempotent():
    rng = random.Random(3)
    for _ in range(20):
        F = rand_poly(rng) + one
        once = tilde_normalize(F)
        assert tilde_normalize(once) == once


def test_specialize_examples():
    F = one + q * t + q * a
    assert specialize(F, {"a": -1, "t": q}) == one + q * q - q
    assert specialize(F, {"t": 1}) == one + q + q * a
    half = LaurentQTA.monomial(1, 1, 0)
    assert specialize(half, {"t": q}) == q


def test_specialize_half_power_needs_a_square():
    with pytest.raises(ValueError):
        specialize(LaurentQTA.monomial(0, 1, 0), {"t": 2})


def test_specialize_composes_over_disjoint_bindings():
    rng = random.Random(5)
    for _ in range(10):
        F = rand_poly(rng)
        F = LaurentQTA({(2 * k[0], 2 * k[1], k[2]): c for k, c in F.items()})
        step = specialize(specialize(F, {"t": 1}), {"a": -1})
        assert step == specialize(F, {"t": 1, "a": -1})


def test_ring_laws():
    rng = random.Random(7)
    for _ in range(20):
        x, y, z = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == LaurentQTA()


def test_divide_exact():
    f = (one + q * t) * (one - t * t + a)
    assert divide_exact(f, one + q * t) == one - t * t + a
    with pytest.raises(ValueError):
        divide_exact(one + q, one + t)


def test_json_and_text_round_trip_in_canonical_order():
    F = LaurentQTA({(1, -3, 0): 5, (0, 0, 0): 1, (4, 2, 2): -12345678901234567890})
    assert from_json(to_json(F)) == F
    assert from_text(to_text(F)) == F
    assert to_text(F).startswith("5*q^(1/2)*t^(-3/2)*a^0 + 1*q^(0)*t^(0)*a^0")


def test_pretty():
    assert pretty(one + q * t + q * a) == "1 + q*t + q*a"


def test_evaluate():
    assert evaluate(one + q * t + q * a, 2, 3, -1) == Fraction(1 + 6 - 2)


def test_interpolation_examples():
    assert interpolate_counting_polynomial([(3, 3), (9, 9), (27, 27)], 1) == UniPoly([0, 1])
    assert interpolate_counting_polynomial([(3, 5), (9, 17)], 1) == UniPoly([-1, 2])
    assert interpolate_counting_polynomial([(3, 4), (9, 10)], 1) == UniPoly([1, 1])


def test_interpolation_rejects_non_polynomial_counts():
    with pytest.raises(ValueError, match="not polynomial-count"):
        interpolate_counting_polynomial([(3, 4), (9, 10), (27, 5)], 1)


def test_finite_field_axioms():
    for p, m in ((2, 1), (3, 2), (2, 3)):
        F = GF(p, m)
        els = list(F.elements())
        assert len(els) == p ** m
        for x in els[1:]:
            assert F.mul(x, F.inv(x)) == 1
        for x in els[:5]:
            for y in els[:5]:
                assert F.add(x, y) == F.add(y, x)
                assert F.mul(x, y) == F.mul(y, x)


def test_multipoly_mod_p():
    P = MultiPoly(["x", "y"], {((0, 1),): 3, ((1, 2),): 2, (): 4})
    red = P.reduce_mod(GF(3))
    assert len(red.terms) == 2
    with pytest.raises(ValueError):
        red.reduce_mod(GF(3))


def test_ratfun_combination_matches_cross_multiplication():
    rng = random.Random(11)
    for _ in range(5):
        a_, b_, c_, d_ = (RatFunQT(rand_poly(rng).truncate_a(0) + LaurentQTA.const(rng.randint(1, 5)))
                          for _ in range(4))
        lhs = a_ / b_ + c_ / d_
        rhs = (a_ * d_ + c_ * b_) / (b_ * d_)
        assert lhs == rhs
        val = lhs.evaluate(4, 9)
        assert val == rhs.evaluate(4, 9)


def test_ratfun_to_laurent():
    R = RatFunQT(one - t * t) / RatFunQT(one - t)
    assert R.to_laurent() == one + t
