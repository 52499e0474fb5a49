"""Cell dimensions for torus rings k[[z^p, z^q]] and their superpolynomials.

Every cell is an affine space here, so the superpolynomial is assembled from
the gap-count formulas alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactalg import LaurentQTA
from .gmod import DeltaFlag, RankModule, enumerate_flags, enumerate_rank_modules, is_rank_module
from .semigroup import CofiniteSet, Semigroup, gap_count, semigroup_from_generators


@dataclass(frozen=True)
class TorusRing:
    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")
        if not 0 < self.p < self.q:
            raise ValueError("expected 0 < p < q")

    @property
    def semigroup(self) -> Semigroup:
        S = semigroup_from_generators((self.p, self.q))
        assert S.delta == (self.p - 1) * (self.q - 1) // 2
        return S


def heads(merged, modulus):
    """Least element of ``merged`` in every residue class mod ``modulus``."""
    out = []
    for r in range(modulus):
        e = r
        while e not in merged:
            e += modulus
        out.append(e)
    return out


def _as_merged(delta):
    if isinstance(delta, RankModule):
        return delta.merged, delta.rank
    raise TypeError("expected a RankModule")


def dim_cell_merged(merged, rk: int, ring: TorusRing) -> int:
    P = rk * ring.p
    return sum(gap_count(merged, b) - gap_count(merged, b + rk * ring.q) for b in heads(merged, P))


def dim_cell(delta: RankModule, ring: TorusRing) -> int:
    merged, rk = _as_merged(delta)
    return dim_cell_merged(merged, rk, ring)


def _with(merged, g):
    bound = merged.conductor
    elems = [e for e in range(bound) if e in merged] + [g]
    return CofiniteSet.from_elements(elems, max(bound, g + 1))


def dim_change(merged, g: int, rk: int, ring: TorusRing) -> int:
    if g in merged:
        raise ValueError("g already lies in the module")
    new = _with(merged, g)
    if not is_rank_module(ring.semigroup, rk, new):
        raise ValueError("adding g does not give a module")
    gp, gq = rk * ring.p, rk * ring.q
    gam = lambda b: gap_count(new, b)
    return gam(g) - gam(g + gp) - (gam(g + gq) - gam(g + gp + gq))


def flag_dim(flag: DeltaFlag, ring: TorusRing) -> int:
    rk = flag.base.rank
    cur = flag.base.merged
    N = dim_cell_merged(cur, rk, ring)
    for g in flag.added:
        N += dim_change(cur, g, rk, ring)
        cur = _with(cur, g)
    return N


def torus_motivic_super(ring: TorusRing, rk: int, lmax: int | None = None) -> LaurentQTA:
    """Sum of q^(dev+l) t^(delta*rk^2 - N) a^l over all standard flags."""
    S = ring.semigroup
    top = rk * (ring.p - 1)
    if lmax is None:
        lmax = top
    if lmax > top:
        raise ValueError(f"flag length is at most {top} here")
    mods = enumerate_rank_modules(S, rk)
    full = S.delta * rk * rk
    terms = {}
    for ell in range(lmax + 1):
        for fl in enumerate_flags(S, rk, ell, mods):
            N = flag_dim(fl, ring)
            k = (2 * (fl.base.dev + ell), 2 * (full - N), ell)
            terms[k] = terms.get(k, 0) + 1
    return LaurentQTA(terms)
