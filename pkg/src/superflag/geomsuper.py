"""Geometric superpolynomials from classified cells, plus a brute-force oracle.

The oracle walks reduced echelon bases of subspaces of (O/z^c)^rk over a prime
field, keeps the ones stable under the ring generators, and sorts them by
valuation set.  It shares no code with the cell equations.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .cellsys import C_TYPES, TEMPLATES, CellRecord, RingSpec, process
from .exactalg import LaurentQTA, specialize
from .gmod import DeltaFlag, enumerate_flags, enumerate_rank_modules, from_merged
from .semigroup import Semigroup


class OracleTooLarge(ValueError):
    pass


def _guard(rk, conductor, p):
    n = rk * conductor
    if (p == 2 and n > 10) or (p == 3 and n > 8) or p > 3 and n > 6:
        raise OracleTooLarge(f"rk*c = {n} is beyond the oracle guard for p = {p}")


def _mult(vec, mult, N, p):
    out = [0] * N
    for i, a in enumerate(vec):
        if a:
            for e, c in mult:
                if i + e < N:
                    out[i + e] = (out[i + e] + a * c) % p
    return out


def _in_span(vec, rows, p):
    """rows: pivot -> reduced row.  True iff vec lies in their span."""
    vec = list(vec)
    N = len(vec)
    for i in range(N):
        a = vec[i]
        if a:
            r = rows.get(i)
            if r is None:
                return False
            for j in range(i, N):
                if r[j]:
                    vec[j] = (vec[j] - a * r[j]) % p
    return True


@dataclass
class OracleResult:
    """counts[(ell, dev, merged elements below N, added)] = number of F_p-points."""

    prime: int
    rank: int
    counts: Counter = field(default_factory=Counter)

    def strata(self, ell=None):
        out = Counter()
        for (l, dev, _, _), n in self.counts.items():
            if ell is None or l == ell:
                out[(l, dev)] += n
        return out


def oracle_enumerate(base: Semigroup, series, rk: int, p: int, ell: int = 0, guard=True) -> OracleResult:
    """Enumerate standard modules (and flags up to length ``ell``) over F_p.

    ``series`` lists the ring generators as sequences of (coefficient, exponent)
    in z; the merged coordinate is w = z^(1/rk), so z^e acts as w^(rk*e).
    """
    c = base.conductor
    if guard:
        _guard(rk, c, p)
    N = rk * c
    mults = [[(rk * e, co % p) for co, e in s if co % p] for s in series]
    full_dev = rk * base.delta
    res = OracleResult(p, rk)
    rows = {}

    def admissible(v):
        return all(_in_span(_mult(v, m, N, p), rows, p) for m in mults)

    def reduced_rows(lead):
        free = [k for k in range(lead + 1, N) if k not in rows]
        for vals in itertools.product(range(p), repeat=len(free)):
            v = [0] * N
            v[lead] = 1
            for k, a in zip(free, vals):
                v[k] = a
            yield v

    def grow(dev, piv, added):
        if len(added) == ell:
            return
        last = added[-1] if added else -1
        for g in range(last + 1, N):
            if g in rows:
                continue
            for h in reduced_rows(g):
                if admissible(h):
                    rows[g] = h
                    nxt = added + (g,)
                    res.counts[(len(nxt), dev, piv, nxt)] += 1
                    grow(dev, piv, nxt)
                    del rows[g]

    def walk(d):
        if d < 0:
            if all(i in rows for i in range(rk)):
                piv = tuple(sorted(rows))
                dev = full_dev - (N - len(piv))
                res.counts[(0, dev, piv, ())] += 1
                grow(dev, piv, ())
            return
        walk(d - 1)
        for v in reduced_rows(d):
            if admissible(v):
                rows[d] = v
                walk(d - 1)
                del rows[d]

    walk(N - 1)
    return res


# ---------------------------------------------------------------- assembly

class UnclassifiedCells(ValueError):
    pass


class NotPavable(ValueError):
    pass


@dataclass
class SuperDecomposition:
    """Cell contributions grouped by (ell, dev), and their sum."""

    entries: list
    H: LaurentQTA
    gaps: list = field(default_factory=list)

    def by_stratum(self):
        out = {}
        for ell, dev, contrib in self.entries:
            out[(ell, dev)] = out.get((ell, dev), LaurentQTA()) + contrib
        return out


def classify_flags(ring: RingSpec, rk: int, lmax: int, prime: int = 3, lmin: int = 0) -> list:
    """Process every standard flag of length lmin..lmax; returns CellRecords."""
    S = ring.semigroup
    mods = enumerate_rank_modules(S, rk)
    out = []
    for ell in range(lmin, lmax + 1):
        for fl in enumerate_flags(S, rk, ell, mods):
            out.append(process(fl, ring, prime=prime))
    return out


def motivic_superpolynomial(cells: Iterable[CellRecord], strict=True) -> SuperDecomposition:
    entries, gaps = [], []
    H = LaurentQTA()
    for rec in cells:
        ct = rec.cell_type
        if ct is None or ct.tag == "UNKNOWN":
            if strict:
                raise UnclassifiedCells(f"cell {rec.key} is not classified")
            gaps.append(rec)
            continue
        if ct.tag == "NONADMISSIBLE":
            continue
        c = ct.contribution
        entries.append((rec.flag.ell, rec.flag.base.dev, c))
        H = H + c
    return SuperDecomposition(entries, H, gaps)


def singular_superpolynomial(cells: Iterable[CellRecord], strict=True) -> LaurentQTA:
    """Sum of q^kappa t^(rk^2 delta - dim) a^ell over affine cells.

    Non-affine cell types have no affine paving; with ``strict=False`` their
    class in the Grothendieck ring is used instead, which makes the result
    coincide with the motivic sum.
    """
    H = LaurentQTA()
    for rec in cells:
        ct = rec.cell_type
        if ct is None or ct.tag == "NONADMISSIBLE":
            continue
        if ct.tag != "A" and strict:
            raise NotPavable(f"cell {rec.key} has type {ct.tag}")
        if ct.tag not in TEMPLATES:
            raise UnclassifiedCells(f"cell {rec.key} is not classified")
        H = H + ct.contribution
    return H


def count_series(cells: Iterable[CellRecord], field_size: int) -> Counter:
    """sum over cells of |cell(F)| keyed by (kappa, ell), from the type templates."""
    out = Counter()
    for rec in cells:
        ct = rec.cell_type
        if ct is None or ct.tag not in TEMPLATES:
            continue
        n = ct.potential_dim
        out[(ct.kappa, ct.ell)] += sum(c * field_size ** (n + off) for off, c in TEMPLATES[ct.tag].items())
    return out


def check_counts(H: LaurentQTA, counts: Counter, field_size: int, full: int) -> bool:
    """H equals t^full * sum counts q^kappa a^ell at t = 1/field_size."""
    lhs = Counter()
    for (q2, t2, a), c in H.items():
        if q2 % 2 or t2 % 2:
            return False
        e = full - t2 // 2
        if e < 0:
            return False
        lhs[(q2 // 2, a)] += c * field_size ** e
    lhs = +lhs
    return lhs == +Counter(counts)


def index_ranges_ok(H: LaurentQTA, delta: int, rk: int, mult: int, check_t=True) -> bool:
    """Exponent windows 0 <= d <= delta*rk, 0 <= ell <= rk*(mult-1), t in [0, delta*rk^2]."""
    for (q2, t2, a), _ in H.items():
        d = q2 // 2 - a
        if q2 % 2 or not 0 <= d <= delta * rk or not 0 <= a <= rk * (mult - 1):
            return False
        if check_t and not 0 <= t2 <= 2 * delta * rk * rk:
            return False
    return True


# ---------------------------------------------------------------- t = 1

def t1_rule(ring: RingSpec, rk: int, lmax: int, prime: int = 3) -> LaurentQTA:
    """H at t = 1 from the rule: a flag counts q^kappa a^ell iff each of its
    modules, taken as a 0-flag, has a C-type cell.  Only 0-flags are classified.
    """
    S = ring.semigroup
    mods = enumerate_rank_modules(S, rk)
    good = {}
    for M in mods:
        rec = process(DeltaFlag(M, ()), ring, prime=prime)
        good[M.merged] = rec.cell_type.tag in C_TYPES
    terms = Counter()
    for ell in range(lmax + 1):
        for fl in enumerate_flags(S, rk, ell, mods):
            if all(good[d] for d in fl.deltas):
                terms[(2 * fl.kappa, 0, ell)] += 1
    return LaurentQTA(+terms)


def at_t1(H: LaurentQTA) -> LaurentQTA:
    return specialize(H, {"t": 1})


def check_t1_power(H_rk: LaurentQTA, H_1: LaurentQTA, rk: int):
    """(ok, difference) for H_rk(q,1,a) = H_1(q,1,a)^rk."""
    diff = at_t1(H_rk) - at_t1(H_1) ** rk
    return diff.is_zero(), diff


# ---------------------------------------------------------------- Alexander

def check_alexander(H: LaurentQTA, S: Semigroup):
    """(ok, difference) for H(q, q, -1) = (1 - q) sum_{g in S} q^g.

    The right side is the polynomial sum_{g in S, g < c} q^g - sum_{gaps g} q^(g+1),
    obtained by clearing the geometric tail at the conductor.
    """
    lhs = specialize(H, {"t": LaurentQTA.monomial(2, 0), "a": -1})
    c = S.conductor
    rhs = {}
    for g in range(c + 1):
        if g in S:
            rhs[(2 * g, 0, 0)] = rhs.get((2 * g, 0, 0), 0) + 1
            if g < c:
                rhs[(2 * g + 2, 0, 0)] = rhs.get((2 * g + 2, 0, 0), 0) - 1
    diff = lhs - LaurentQTA({k: v for k, v in rhs.items() if v})
    return diff.is_zero(), diff


# ---------------------------------------------------------------- oracle vs theory

def oracle_module(base: Semigroup, rk: int, pivots, N: int):
    """RankModule whose merged set agrees with ``pivots`` below N and contains N onward."""
    from .semigroup import CofiniteSet
    return from_merged(base, rk, CofiniteSet.from_elements(list(pivots), N))


def oracle_vs_torus(p: int, q: int, rk: int, prime: int, ell: int = 1, guard=True):
    """Compare every oracle stratum count with prime^dim from the torus formulas.

    Returns (ok, mismatches, number of strata compared).
    """
    from .torusdim import TorusRing, dim_cell, flag_dim

    ring = TorusRing(p, q)
    S = ring.semigroup
    res = oracle_enumerate(S, [[(1, p)], [(1, q)]], rk, prime, ell, guard)
    N = rk * S.conductor
    seen = {}
    for (l, dev, piv, added), cnt in res.counts.items():
        M = oracle_module(S, rk, piv, N)
        seen[(M.merged, added)] = cnt
    bad = []
    mods = enumerate_rank_modules(S, rk)
    expected = 0
    for l in range(ell + 1):
        for fl in enumerate_flags(S, rk, l, mods):
            expected += 1
            dim = dim_cell(fl.base, ring) if l == 0 else flag_dim(fl, ring)
            got = seen.pop((fl.base.merged, fl.added), 0)
            if got != prime ** dim:
                bad.append((fl.key(), got, prime ** dim))
    bad.extend((k, v, 0) for k, v in seen.items())
    return not bad, bad, expected


def oracle_vs_cells(ring: RingSpec, rk: int, prime: int, ell: int = 0, guard=True):
    """Per (ell, dev) stratum: oracle counts against classified-cell counts at T = prime."""
    S = ring.semigroup
    res = oracle_enumerate(S, ring.series(), rk, prime, ell, guard)
    cells = classify_flags(ring, rk, ell)
    model = Counter()
    for (kappa, l), v in count_series(cells, prime).items():
        model[(l, kappa - l)] += v
    got = +res.strata()
    return got == +model, got, model
