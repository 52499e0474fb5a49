import pytest

from superflag.gmod import (
    DeltaFlag, GammaModule, dset, enumerate_flags, enumerate_rank_modules, enumerate_standard_modules,
    merged_from_primitive, p_basis, rank_module, reconstruct, sort_components,
)
from superflag.semigroup import CofiniteSet, family_semigroup, semigroup_from_generators

S23 = semigroup_from_generators((2, 3))


def test_trefoil_modules():
    mods = enumerate_standard_modules(S23)
    assert len(mods) == 2
    assert [m.added() for m in mods] == [[], [1]]


@pytest.mark.parametrize("v,count", [(7, 25), (9, 29), (15, 41)])
def test_module_counts(v, count):
    assert len(enumerate_standard_modules(family_semigroup(v))) == count


def test_deg_plus_dev_is_delta():
    S = family_semigroup(9)
    for m in enumerate_standard_modules(S):
        assert m.deg + m.dev == S.delta
        assert m.is_standard


def test_p_basis():
    full = GammaModule(S23, CofiniteSet.from_elements([], 0))
    assert p_basis(full, 2, 3) == (0, 1)
    assert p_basis(GammaModule(S23, S23.elements), 2, 3) == (0, 3)
    S34 = semigroup_from_generators((3, 4))
    assert p_basis(GammaModule(S34, S34.elements), 3, 4) == (0, 4, 8)


def test_rank_two_extremes():
    full = GammaModule(S23, CofiniteSet.from_elements([], 0))
    minimal = GammaModule(S23, S23.elements)
    M = rank_module((full, full))
    assert M.merged.conductor == 0 and M.dev == 2 * S23.delta
    N = rank_module((minimal, minimal))
    assert N.dev == 0 and dset(N).elements == ()
    assert sorted(N.merged.gaps()) == [2, 3]


def test_dsets_and_reconstruction():
    S = family_semigroup(7)
    prims = set()
    for M in enumerate_rank_modules(S, 2):
        D = dset(M)
        assert len(D.elements) == M.dev
        assert reconstruct(S, 2, D.primitive) == D.elements
        assert merged_from_primitive(S, 2, D.primitive) == M.merged
        prims.add(D.primitive)
    assert (5, 14, 18) in prims


def test_rank_one_full_module_dset():
    full = GammaModule(S23, CofiniteSet.from_elements([], 0))
    assert dset(rank_module((full,))).elements == (1,)


def test_trefoil_single_flag():
    flags = list(enumerate_flags(S23, 1, 1))
    assert len(flags) == 1
    assert flags[0].added == (1,) and flags[0].base.dev == 0


def test_zero_flags_are_modules():
    S = family_semigroup(7)
    assert len(list(enumerate_flags(S, 2, 0))) == 25 ** 2


def test_flag_listed_in_v9_table_exists():
    S = family_semigroup(9)
    keys = {fl.key() for fl in enumerate_flags(S, 2, 1)}
    assert ((18, 22, 35), (5, 18, 22)) in keys


def test_sort_components():
    full = GammaModule(S23, CofiniteSet.from_elements([], 0))
    minimal = GammaModule(S23, S23.elements)
    assert [m.delta for m in sort_components((full, minimal))] == [full.delta, minimal.delta]
    assert [m.delta for m in sort_components((minimal, full))] == [full.delta, minimal.delta]
    mods = enumerate_standard_modules(family_semigroup(9))[3:6]
    out = sort_components(mods)
    assert sum(m.deg for m in out) == sum(m.deg for m in mods)


def test_flag_dev_grows_by_one_per_step():
    S = family_semigroup(7)
    mods = enumerate_rank_modules(S, 2)[:40]
    for fl in enumerate_flags(S, 2, 2, mods):
        assert fl.kappa == fl.base.dev + 2
        assert all(a < b for a, b in zip(fl.added, fl.added[1:]))
        assert isinstance(fl, DeltaFlag)
