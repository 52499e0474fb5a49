import pytest

from superflag.exactalg import LaurentQTA, specialize
from superflag.gmod import DeltaFlag, GammaModule, enumerate_flags, rank_module
from superflag.semigroup import CofiniteSet
from superflag.torusdim import TorusRing, dim_cell, dim_change, flag_dim, torus_motivic_super

q = LaurentQTA.monomial(2, 0, 0)
t = LaurentQTA.monomial(0, 2, 0)
a = LaurentQTA.monomial(0, 0, 1)
one = LaurentQTA.const(1)


def test_trefoil_cells():
    R = TorusRing(2, 3)
    S = R.semigroup
    full = GammaModule(S, CofiniteSet.from_elements([], 0))
    assert dim_cell(rank_module((full,)), R) == 0
    assert dim_cell(rank_module((GammaModule(S, S.elements),)), R) == 1
    assert dim_change(S.elements, 1, 1, R) == 0


def test_trefoil_superpolynomial():
    assert torus_motivic_super(TorusRing(2, 3), 1) == one + q * t + q * a


def test_t25_and_t34():
    assert torus_motivic_super(TorusRing(2, 5), 1) == one + q * t + q * q * t * t + q * a + q * q * t * a
    H = torus_motivic_super(TorusRing(3, 4), 1)
    assert H.coeff(6, 0, 2) == 1  # q^3 a^2
    assert H.a_degree() == 2


@pytest.mark.parametrize("p,q_", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_a_degree_is_multiplicity_minus_one(p, q_):
    for rk in (1, 2) if p * q_ < 15 else (1,):
        assert torus_motivic_super(TorusRing(p, q_), rk).a_degree() == rk * (p - 1)


def test_trefoil_alexander_specialization():
    H = torus_motivic_super(TorusRing(2, 3), 1)
    assert specialize(H, {"t": q, "a": -1}) == one - q + q * q


def test_flag_dim_is_cell_dim_plus_changes():
    R = TorusRing(2, 5)
    for fl in enumerate_flags(R.semigroup, 2, 1):
        base = dim_cell(fl.base, R)
        assert flag_dim(fl, R) == base + dim_change(fl.base.merged, fl.added[0], 2, R)
        assert flag_dim(DeltaFlag(fl.base, ()), R) == base


def test_non_coprime_rejected():
    with pytest.raises(ValueError):
        TorusRing(2, 4)
