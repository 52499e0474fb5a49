"""Standard Gamma-modules in rank one and rank rk, D-sets and standard flags.

Rank-rk modules use the rescaled valuation: component i contributes
i + rk*x for each x in its rank-one module, so at rk = 2 every D-set is
reported with elements already multiplied by two.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .semigroup import CofiniteSet, Semigroup


@dataclass(frozen=True)
class GammaModule:
    base: Semigroup
    delta: CofiniteSet

    def __post_init__(self):
        c = self.base.conductor
        for e in range(c):
            if e in self.delta:
                for g in self.base.generators:
                    if e + g not in self.delta:
                        raise ValueError("not closed under the semigroup")

    @property
    def deg(self):
        return len(self.delta.gaps())

    @property
    def dev(self):
        return sum(1 for e in range(self.base.conductor) if e in self.delta and e not in self.base)

    @property
    def is_standard(self):
        return all(g in self.delta for g in range(self.base.conductor) if g in self.base)

    def added(self):
        """Delta minus Gamma."""
        return [e for e in range(self.base.conductor) if e in self.delta and e not in self.base]

    def __contains__(self, n):
        return n in self.delta


def module_from_added(base: Semigroup, added) -> GammaModule:
    """The standard module Gamma ∪ closure(added)."""
    c = base.conductor
    D = _close(set(added), base.generators, lambda e: e < c and e not in base)
    elems = [e for e in range(c) if e in base or e in D]
    return GammaModule(base, CofiniteSet.from_elements(elems, c))


def _close(D, steps, keep):
    stack = list(D)
    while stack:
        d = stack.pop()
        for s in steps:
            e = d + s
            if keep(e) and e not in D:
                D.add(e)
                stack.append(e)
    return D


def enumerate_standard_modules(base: Semigroup) -> list:
    """All standard Gamma-modules, ordered by (|D|, sorted D)."""
    c = base.conductor
    gaps = base.gaps
    keep = lambda e: e < c and e not in base
    seen = set()
    stack = [frozenset()]
    while stack:
        D = stack.pop()
        if D in seen:
            continue
        seen.add(D)
        for g in gaps:
            if g not in D:
                stack.append(frozenset(_close(set(D) | {g}, base.generators, keep)))
    out = []
    for D in sorted(seen, key=lambda D: (len(D), sorted(D))):
        elems = [e for e in range(c) if e in base or e in D]
        out.append(GammaModule(base, CofiniteSet.from_elements(elems, c)))
    return out


def p_basis(delta: GammaModule, p: int, q: int) -> tuple:
    """(a_0, ..., a_{p-1}) with a_j the least element of delta congruent to j*q mod p."""
    if tuple(sorted(delta.base.generators)) != tuple(sorted((p, q))):
        raise ValueError("semigroup is not two-generated by (p, q)")
    out = []
    for j in range(p):
        r = (j * q) % p
        e = r
        while e not in delta:
            e += p
        out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class DSet:
    elements: tuple
    primitive: tuple


@dataclass(frozen=True, eq=False)
class RankModule:
    components: tuple

    def __post_init__(self):
        if not self.components or len({m.base.generators for m in self.components}) != 1:
            raise ValueError("mixed base semigroups")

    @property
    def rank(self):
        return len(self.components)

    @property
    def base(self) -> Semigroup:
        return self.components[0].base

    @cached_property
    def merged(self) -> CofiniteSet:
        rk = self.rank
        bound = rk * self.base.conductor
        elems = [e for e in range(bound) if e // rk in self.components[e % rk].delta]
        return CofiniteSet.from_elements(elems, bound)

    @property
    def dev(self):
        return sum(m.dev for m in self.components)

    @property
    def deg(self):
        return sum(m.deg for m in self.components)

    def __eq__(self, other):
        return isinstance(other, RankModule) and self.merged == other.merged and self.base.generators == other.base.generators

    def __hash__(self):
        return hash((self.merged, self.base.generators))


def rank_module(components) -> RankModule:
    comps = tuple(components)
    if not all(m.is_standard for m in comps):
        raise ValueError("components must be standard")
    return RankModule(comps)


def from_merged(base: Semigroup, rk: int, merged: CofiniteSet) -> RankModule:
    c = base.conductor
    comps = []
    for i in range(rk):
        elems = [x for x in range(c) if i + rk * x in merged]
        comps.append(GammaModule(base, CofiniteSet.from_elements(elems, c)))
    return RankModule(tuple(comps))


def is_rank_module(base: Semigroup, rk: int, merged) -> bool:
    bound = rk * base.conductor
    return all(e + rk * g in merged for e in range(bound) if e in merged for g in base.generators)


def d_elements(base: Semigroup, rk: int, merged) -> tuple:
    bound = rk * base.conductor
    return tuple(e for e in range(bound) if e in merged and e // rk not in base)


def primitive_of(base: Semigroup, rk: int, D) -> tuple:
    Dset = set(D)
    steps = [rk * g for g in range(1, max(D, default=0) + 1) if g in base]
    return tuple(d for d in sorted(Dset) if not any(d - s in Dset for s in steps))


def reconstruct(base: Semigroup, rk: int, primitive) -> tuple:
    bound = rk * base.conductor
    keep = lambda e: e < bound and e // rk not in base
    D = _close(set(primitive), [rk * g for g in base.generators], keep)
    return tuple(sorted(D))


def dset(M: RankModule) -> DSet:
    D = d_elements(M.base, M.rank, M.merged)
    return DSet(D, primitive_of(M.base, M.rank, D))


def dset_primitive(D: DSet) -> tuple:
    return D.primitive


def merged_from_primitive(base: Semigroup, rk: int, primitive) -> CofiniteSet:
    D = set(reconstruct(base, rk, primitive))
    bound = rk * base.conductor
    return CofiniteSet.from_elements([e for e in range(bound) if e // rk in base or e in D], bound)


def enumerate_rank_modules(base: Semigroup, rk: int) -> list:
    """All standard rank-rk modules as tuples of enumerated components."""
    mods = enumerate_standard_modules(base)
    out = [()]
    for _ in range(rk):
        out = [t + (m,) for t in out for m in mods]
    return [RankModule(t) for t in out]


@dataclass(frozen=True)
class DeltaFlag:
    base: RankModule
    added: tuple = field(default=())

    @property
    def ell(self):
        return len(self.added)

    @cached_property
    def deltas(self) -> tuple:
        out = [self.base.merged]
        cur = set(self.base.merged.elements_below(self.base.merged.conductor))
        bound = self.base.merged.conductor
        for g in self.added:
            cur.add(g)
            out.append(CofiniteSet.from_elements(cur, bound))
        return tuple(out)

    def dsets(self) -> tuple:
        b, rk = self.base.base, self.base.rank
        return tuple(DSet(D, primitive_of(b, rk, D)) for D in (d_elements(b, rk, d) for d in self.deltas))

    @property
    def kappa(self):
        return self.base.dev + self.ell

    def key(self):
        """(D_0 dagger, D_ell dagger)."""
        ds = self.dsets()
        return ds[0].primitive, ds[-1].primitive


def extensions(base: Semigroup, rk: int, merged, after=-1):
    """Values g > after with g outside merged and merged ∪ {g} again a module."""
    bound = rk * base.conductor
    steps = [rk * g for g in base.generators]
    return [g for g in range(after + 1, bound)
            if g not in merged and all(g + s in merged for s in steps)]


def enumerate_flags(base: Semigroup, rk: int, ell: int, modules=None):
    """Yield all standard ell-flags with strictly increasing added values."""
    if modules is None:
        modules = enumerate_rank_modules(base, rk)
    for M in modules:
        yield from _grow(base, rk, M, M.merged, (), ell)


def _grow(base, rk, M, cur, added, ell):
    if len(added) == ell:
        yield DeltaFlag(M, added)
        return
    last = added[-1] if added else -1
    for g in extensions(base, rk, cur, last):
        nxt = _Union(cur, g)
        yield from _grow(base, rk, M, nxt, added + (g,), ell)


class _Union:
    """Cheap view of a cofinite set with extra elements."""

    __slots__ = ("inner", "extra")

    def __init__(self, inner, g):
        if isinstance(inner, _Union):
            self.inner, self.extra = inner.inner, inner.extra | {g}
        else:
            self.inner, self.extra = inner, frozenset({g})

    def __contains__(self, n):
        return n in self.extra or n in self.inner


def sort_components(components) -> list:
    """Output j is the union of all (j+1)-fold intersections of the inputs."""
    items = list(components)
    if not items:
        return []
    sets = []
    for m in items:
        delta = m.delta if isinstance(m, GammaModule) else m
        c = delta.conductor
        sets.append((delta, c))
    bound = max(c for _, c in sets)
    members = [{e for e in range(bound) if e in d} for d, _ in sets]
    out = []
    for j in range(len(members)):
        acc = set()
        for combo in combinations(members, j + 1):
            acc |= set.intersection(*combo)
        cs = CofiniteSet.from_elements(acc, bound)
        if isinstance(items[0], GammaModule):
            out.append(GammaModule(items[0].base, cs))
        else:
            out.append(cs)
    return out
