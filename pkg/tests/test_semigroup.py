import pytest

from superflag.semigroup import (
    CofiniteSet, family_semigroup, gap_count, is_symmetric, semigroup_from_generators, symmetric_partner,
)


def test_trefoil_semigroup():
    S = semigroup_from_generators((2, 3))
    assert S.gaps == [1] or list(S.gaps) == [1]
    assert (S.delta, S.conductor, S.multiplicity) == (1, 2, 2)


@pytest.mark.parametrize("v,gens,delta,c", [(7, (4, 6, 13), 8, 16), (9, (4, 6, 15), 9, 18), (15, (4, 6, 21), 12, 24)])
def test_family(v, gens, delta, c):
    S = family_semigroup(v)
    assert S.generators == gens
    assert (S.delta, S.conductor) == (delta, c)
    assert S.conductor == 2 * S.delta
    assert is_symmetric(S)


def test_family_rejects_even_v():
    with pytest.raises(ValueError):
        family_semigroup(8)


def test_non_numerical():
    with pytest.raises(ValueError):
        semigroup_from_generators((4, 6))


def test_gap_count():
    full = CofiniteSet.from_elements([], 0)
    assert gap_count(full, 5) == 0
    S = semigroup_from_generators((2, 3))
    assert gap_count(S.elements, 0) == 1 and gap_count(S.elements, 2) == 0
    assert gap_count(semigroup_from_generators((4, 6, 13)).elements, 0) == 8


def test_symmetric_partner_swaps_gaps_and_elements():
    S = family_semigroup(9)
    for g in range(S.conductor):
        assert (g in S) != (symmetric_partner(S, g) in S)


def test_conductor_properties():
    for gens in ((3, 4), (2, 5), (4, 6, 13), (3, 5, 7)):
        S = semigroup_from_generators(gens)
        c = S.conductor
        assert c - 1 not in S
        assert all(n in S for n in range(c, c + 10))
