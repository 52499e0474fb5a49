"""Numerical semigroups and cofinite subsets of the nonnegative integers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd


@dataclass(frozen=True)
class CofiniteSet:
    """A subset of Z>=0 containing every integer >= conductor.

    ``members`` holds the elements below the conductor as a bit mask.
    """

    members: int
    conductor: int

    @classmethod
    def from_elements(cls, elems, bound):
        """Build from the elements below ``bound`` (everything >= bound is in)."""
        mask = 0
        for e in elems:
            if 0 <= e < bound:
                mask |= 1 << e
        c = bound
        while c > 0 and mask >> (c - 1) & 1:
            c -= 1
        mask &= (1 << c) - 1
        return cls(mask, c)

    def __contains__(self, n):
        if n < 0:
            return False
        return n >= self.conductor or bool(self.members >> n & 1)

    def gaps(self):
        return [n for n in range(self.conductor) if not self.members >> n & 1]

    def elements_below(self, bound):
        return [n for n in range(bound) if n in self]

    def gap_count(self, b=0):
        return gap_count(self, b)


def gap_count(delta: CofiniteSet, b: int) -> int:
    """|[b, oo) minus delta|."""
    if b < 0:
        raise ValueError("gap_count is defined for b >= 0 only")
    return sum(1 for g in range(b, delta.conductor) if g not in delta)


@dataclass(frozen=True)
class Semigroup:
    generators: tuple
    elements: CofiniteSet

    @property
    def conductor(self):
        return self.elements.conductor

    @property
    def gaps(self):
        return self.elements.gaps()

    @property
    def delta(self):
        return len(self.gaps)

    @property
    def multiplicity(self):
        return min(self.generators)

    def __contains__(self, n):
        return n in self.elements

    def info(self):
        return {
            "generators": list(self.generators),
            "gaps": self.gaps,
            "delta": self.delta,
            "conductor": self.conductor,
            "multiplicity": self.multiplicity,
        }


def semigroup_from_generators(gens) -> Semigroup:
    gens = tuple(sorted({int(g) for g in gens}))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive")
    if reduce(gcd, gens) != 1:
        raise ValueError("not a numerical semigroup")
    # the Frobenius number is below (min-1)*(max-1) for any generating set
    bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 1
    member = [False] * bound
    member[0] = True
    for n in range(1, bound):
        member[n] = any(n >= g and member[n - g] for g in gens)
    elems = [n for n in range(bound) if member[n]]
    S = Semigroup(gens, CofiniteSet.from_elements(elems, bound))
    # closure below conductor + max generator is implied by the construction
    return S


def family_semigroup(v: int) -> Semigroup:
    """The semigroup <4, 6, 6+v> of z^4, z^6 + z^v for odd v > 6."""
    if v % 2 == 0 or v <= 6:
        raise ValueError("v must be odd and greater than 6")
    S = semigroup_from_generators((4, 6, 6 + v))
    assert S.delta == 5 + (v - 1) // 2
    return S


def symmetric_partner(S: Semigroup, g: int) -> int:
    """c - 1 - g; for Gorenstein semigroups this swaps gaps and small elements."""
    return S.conductor - 1 - g


def is_symmetric(S: Semigroup) -> bool:
    c = S.conductor
    return all((g in S) != (c - 1 - g in S) for g in range(c))
