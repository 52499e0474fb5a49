"""Cell equations for rank-rk flags over k[[z^p, f(z)]] and their classification.

Everything runs in the merged coordinate w = z^(1/rk), so z^p acts as
w^P with P = rk*p.  Module elements are represented by one generator per
residue class mod P (a k[[x]]-basis): the head is the least element of the
class in Delta, the tail runs over the gaps above the head, each with a fresh
lambda variable.  Working modulo w^c, c the merged conductor of Delta_0, is
exact because standard modules contain every series of valuation >= c.

Polynomials are raw sparse dicts {monomial: int}, monomials being sorted
tuples of (variable id, exponent); see exactalg.padd and friends.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .exactalg import GF, LaurentQTA, MultiPoly, UniPoly, mmul, padd, pmul, primitive_part
from .gmod import DeltaFlag
from .semigroup import Semigroup, family_semigroup, semigroup_from_generators

ONE = {(): 1}


@dataclass(frozen=True)
class RingSpec:
    """k[[z^p, f(z)]] with f given as ((coefficient, exponent), ...)."""

    p: int
    f: tuple
    semigroup: Semigroup

    @property
    def q(self):
        return min(e for _, e in self.f)

    def series(self):
        return [((1, self.p),), tuple(self.f)]

    def is_monomial(self):
        return len(self.f) == 1


def family_ring(v: int) -> RingSpec:
    return RingSpec(4, ((1, 6), (1, v)), family_semigroup(v))


def torus_ring(p: int, q: int) -> RingSpec:
    return RingSpec(p, ((1, q),), semigroup_from_generators((p, q)))


# ---------------------------------------------------------------- generators

@dataclass
class Generator:
    head: int
    tail: dict  # exponent -> polynomial (a single lambda at construction)


@dataclass
class GeneratorTemplate:
    modulus: int
    module: dict  # residue -> Generator of M_0
    flag: list = field(default_factory=list)  # Generator h_i for each added g_i
    varinfo: list = field(default_factory=list)

    @property
    def nvars(self):
        return len(self.varinfo)


def _heads(delta, modulus, cut):
    out = {}
    for s in range(modulus):
        e = s
        while e not in delta:
            e += modulus
        if e >= cut + modulus:
            raise ValueError("truncation too low for the generator heads")
        out[s] = e
    return out


def build_generators(obj, ring: RingSpec, cut: Optional[int] = None) -> GeneratorTemplate:
    """Templates for a RankModule or a DeltaFlag (one h per added value)."""
    flag = obj if isinstance(obj, DeltaFlag) else DeltaFlag(obj, ())
    rk = flag.base.rank
    delta0 = flag.base.merged
    P = rk * ring.p
    if cut is None:
        cut = delta0.conductor
    tmpl = GeneratorTemplate(P, {})
    for s, b in sorted(_heads(delta0, P, cut).items()):
        tail = {}
        for k in range(b + 1, cut):
            if k not in delta0:
                tail[k] = {((len(tmpl.varinfo), 1),): 1}
                tmpl.varinfo.append(("m", s, k))
        tmpl.module[s] = Generator(b, tail)
    cur = set(delta0.elements_below(cut))
    for i, g in enumerate(flag.added):
        if g in cur or not (g + P in cur or g + P >= cut):
            raise ValueError("flag malformed: no basis element to replace")
        cur.add(g)
        tail = {}
        for k in range(g + 1, cut):
            if k not in cur:
                tail[k] = {((len(tmpl.varinfo), 1),): 1}
                tmpl.varinfo.append(("h", i, k))
        tmpl.flag.append(Generator(g, tail))
    return tmpl


def _basis(tmpl: GeneratorTemplate, upto: int) -> dict:
    """k[[x]]-basis per residue for M_upto (h_1..h_upto replace their class heads)."""
    gens = dict(tmpl.module)
    for h in tmpl.flag[:upto]:
        gens[h.head % tmpl.modulus] = h
    return gens


def _shift_add(ser, gen: Generator, shift, coef, cut, sign=1):
    e = gen.head + shift
    if e < cut:
        ser[e] = padd(ser.get(e, {}), coef, sign)
    for k, pk in gen.tail.items():
        e = k + shift
        if e < cut:
            ser[e] = padd(ser.get(e, {}), pmul(coef, pk), sign)


def reduce(series: dict, basis: dict, modulus: int, cut: int) -> dict:
    """Canonical projection of a truncated series onto the gap exponents.

    The lowest term lying in the module is cancelled by the x-power multiple
    of the generator of its class; remaining terms are gap coefficients.
    """
    ser = {e: v for e, v in series.items() if v and e < cut}
    out = {}
    while ser:
        e = min(ser)
        c = ser.pop(e)
        if not c:
            continue
        gen = basis[e % modulus]
        if gen.head <= e:
            for k, pk in gen.tail.items():
                ee = k + e - gen.head
                if ee < cut:
                    v = padd(ser.get(ee, {}), pmul(c, pk), -1)
                    if v:
                        ser[ee] = v
                    else:
                        ser.pop(ee, None)
        else:
            out[e] = c
    return out


def _times(gen: Generator, terms, rk, cut):
    ser = {}
    for co, ex in terms:
        _shift_add(ser, gen, rk * ex, {(): co}, cut)
    return ser


# ---------------------------------------------------------------- systems

@dataclass
class CellSystem:
    nvars: int
    equations: list
    varinfo: list
    kappa: int
    ell: int
    cut: int

    def variable_names(self):
        out = []
        for kind, i, k in self.varinfo:
            out.append(f"l{i}_{k}" if kind == "m" else f"h{i}_{k}")
        return out

    def as_multipolys(self):
        names = self.variable_names()
        return [MultiPoly(names, q) for q in self.equations]


def build_equations(obj, ring: RingSpec, cut: Optional[int] = None) -> CellSystem:
    """Equations of the cell of a RankModule or DeltaFlag.

    M_0: y*m_s reduces to zero modulo M_0.  Flag step i: x*h_i and y*h_i
    reduce to zero modulo M_{i-1}, whose basis already contains h_1..h_{i-1}.
    """
    flag = obj if isinstance(obj, DeltaFlag) else DeltaFlag(obj, ())
    rk = flag.base.rank
    if cut is None:
        cut = flag.base.merged.conductor
    tmpl = build_generators(flag, ring, cut)
    P = tmpl.modulus
    eqs = []
    base0 = _basis(tmpl, 0)
    for s, gen in sorted(tmpl.module.items(), key=lambda kv: kv[1].head):
        r = reduce(_times(gen, ring.f, rk, cut), base0, P, cut)
        eqs += [r[e] for e in sorted(r)]
    for i, h in enumerate(tmpl.flag):
        basis = _basis(tmpl, i)
        ser = {}
        _shift_add(ser, h, P, ONE, cut)
        r = reduce(ser, basis, P, cut)
        eqs += [r[e] for e in sorted(r)]
        r = reduce(_times(h, ring.f, rk, cut), basis, P, cut)
        eqs += [r[e] for e in sorted(r)]
    return CellSystem(tmpl.nvars, eqs, tmpl.varinfo, flag.kappa, flag.ell, cut)


# ---------------------------------------------------------------- elimination

@dataclass
class ResidualSystem:
    nvars: int
    eliminated: int
    equations: list
    unit_only: bool = False
    obstruction: Optional[int] = None  # constant an equation collapsed to, before normalization

    @property
    def residual_vars(self):
        return sorted({v for q in self.equations for m in q for v, _ in m})

    @property
    def free_vars(self):
        return self.nvars - self.eliminated - len(self.residual_vars)

    @property
    def potential_dim(self):
        return self.nvars - self.eliminated - len(self.equations)

    @property
    def inconsistent(self):
        """A nonzero constant survived: no points over Q."""
        return any(set(q) == {()} for q in self.equations)


def _subst(poly, v, expr, scale, cache):
    """scale^D * poly(v = expr/scale), D the v-degree of poly."""
    D = max(dict(m).get(v, 0) for m in poly)
    out = {}
    for m, cf in poly.items():
        md = dict(m)
        e = md.pop(v, 0)
        term = {tuple(sorted(md.items())): cf * scale ** (D - e)}
        if e:
            if e not in cache:
                cache[e] = pmul(cache[e - 1], expr) if e - 1 in cache else _power(expr, e)
            term = pmul(term, cache[e])
        out = padd(out, term)
    return out


def _power(expr, e):
    r = ONE
    for _ in range(e):
        r = pmul(r, expr)
    return r


def _dedup(eqs):
    seen, out = set(), []
    for q in eqs:
        k = frozenset(q.items())
        if k not in seen:
            seen.add(k)
            out.append(q)
    return out


def _pick(eqs, unit_only):
    best = None
    for qi, q in enumerate(eqs):
        occ = defaultdict(int)
        lin = {}
        for m, c in q.items():
            for v, _ in m:
                occ[v] += 1
            if len(m) == 1 and m[0][1] == 1:
                lin[m[0][0]] = c
        for v, c in lin.items():
            if occ[v] == 1 and (not unit_only or c in (1, -1)):
                if best is None or (v, qi) < best[:2]:
                    best = (v, qi, c)
    return best


def eliminate(system: CellSystem, unit_only: bool = False) -> ResidualSystem:
    """Straightforward elimination, lowest variable id first.

    A variable qualifies when some equation contains it only in the linear
    monomial, with a constant coefficient.  Non-unit coefficients are cleared
    by scaling with their power; equations are kept primitive, so a leftover
    constant is +-1 after normalization and flags the system as inconsistent.
    ``unit_only`` restricts to coefficients +-1.
    """
    obstruction = next((q[()] for q in system.equations if q and set(q) == {()}), None)
    eqs = _dedup([primitive_part(q) for q in system.equations if q])
    done = 0
    while True:
        best = _pick(eqs, unit_only)
        if best is None:
            break
        v, qi, c = best
        q = eqs.pop(qi)
        rest = {m: x for m, x in q.items() if m != ((v, 1),)}
        if c in (1, -1):
            expr, scale = {m: -x * c for m, x in rest.items()}, 1
        else:
            expr, scale = {m: -x for m, x in rest.items()}, c
        cache = {1: expr}
        nxt = []
        for q2 in eqs:
            if any(w == v for m in q2 for w, _ in m):
                q2 = _subst(q2, v, expr, scale, cache)
            if q2:
                if obstruction is None and set(q2) == {()}:
                    obstruction = q2[()]
                nxt.append(primitive_part(q2))
        eqs = _dedup(nxt)
        done += 1
    return ResidualSystem(system.nvars, done, eqs, unit_only, obstruction)


# ---------------------------------------------------------------- point counts

class CellTooLarge(ValueError):
    pass


def _to_field(poly, F: GF):
    out = {}
    for m, c in poly.items():
        c = F.from_int(c)
        if c:
            out[m] = c
    return out


def _fsubst(poly, v, val, F):
    out = {}
    for m, c in poly.items():
        e = 0
        rest = []
        for w, k in m:
            if w == v:
                e = k
            else:
                rest.append((w, k))
        if e:
            x = val
            for _ in range(e - 1):
                x = F.mul(x, val)
            c = F.mul(c, x)
            if not c:
                continue
        m2 = tuple(rest)
        out[m2] = F.add(out.get(m2, 0), c)
        if not out[m2]:
            del out[m2]
    return out


def _flin(poly, v, expr, F):
    """Substitute v = expr (a polynomial) into poly over F."""
    out = {}
    for m, c in poly.items():
        e = 0
        rest = []
        for w, k in m:
            if w == v:
                e = k
            else:
                rest.append((w, k))
        term = {tuple(rest): c}
        for _ in range(e):
            nt = {}
            for m1, c1 in term.items():
                for m2, c2 in expr.items():
                    mm = mmul(m1, m2)
                    nt[mm] = F.add(nt.get(mm, 0), F.mul(c1, c2))
            term = {k: x for k, x in nt.items() if x}
        for mm, x in term.items():
            out[mm] = F.add(out.get(mm, 0), x)
            if not out[mm]:
                del out[mm]
    return out


def _count(eqs, variables, F, budget):
    """Number of points of {eqs = 0} in F^variables."""
    eqs = [q for q in eqs if q]
    if any(set(q) == {()} for q in eqs):
        return 0
    if not eqs:
        return F.q ** len(variables)
    # linear elimination with any nonzero constant coefficient
    for qi, q in enumerate(eqs):
        occ = defaultdict(int)
        for m in q:
            for v, _ in m:
                occ[v] += 1
        for m, c in q.items():
            if len(m) == 1 and m[0][1] == 1 and occ[m[0][0]] == 1:
                v = m[0][0]
                inv = F.neg(F.inv(c))
                expr = {mm: F.mul(inv, cc) for mm, cc in q.items() if mm != m}
                rest = [_flin(q2, v, expr, F) for j, q2 in enumerate(eqs) if j != qi]
                return _count(rest, [w for w in variables if w != v], F, budget)
    budget[0] -= 1
    if budget[0] < 0:
        raise CellTooLarge("cell too large for brute force")
    occ = defaultdict(int)
    for q in eqs:
        for m in q:
            for v, _ in m:
                occ[v] += 1
    v = max(occ, key=lambda w: (occ[w], -w))
    rest_vars = [w for w in variables if w != v]
    total = 0
    for val in F.elements():
        total += _count([_fsubst(q, v, val, F) for q in eqs], rest_vars, F, budget)
    return total


def count_points(res: ResidualSystem, field_size: int, prime: Optional[int] = None, budget: int = 2_000_000) -> int:
    """|{residual equations = 0}| over F_q times q^(free variables)."""
    p, m = _factor_prime_power(field_size, prime)
    F = GF(p, m)
    rv = res.residual_vars
    eqs = [_to_field(q, F) for q in res.equations]
    n = _count(eqs, rv, F, [budget])
    return n * field_size ** (res.nvars - res.eliminated - len(rv))


def _factor_prime_power(n, prime=None):
    p = prime or next(d for d in range(2, n + 1) if n % d == 0)
    m, x = 0, n
    while x % p == 0:
        x //= p
        m += 1
    if x != 1:
        raise ValueError(f"{n} is not a prime power")
    return p, m


# ---------------------------------------------------------------- types

# counting polynomial as {power offset: coefficient} relative to T^n, n = potential dim
TEMPLATES = {
    "A": {0: 1},
    "X": {0: 1, -1: -1},
    "Y": {0: 2, -1: -1},
    "Z": {0: 2, -1: -2},
    "W": {0: 3, -1: -2},
    "L": {1: 1, -1: -1},
    "M": {1: 1, 0: 1, -1: -1},
    "N": {2: 1, 1: 1, -1: -1},
}
C_TYPES = frozenset("AYWMN")


@dataclass(frozen=True)
class CellType:
    tag: str
    potential_dim: int
    kappa: int
    ell: int
    full: int  # rk^2 * delta
    counts: tuple = ()

    @property
    def contribution(self) -> LaurentQTA:
        """q^kappa a^ell times the t-polynomial of the type, t = 1/T, times t^full."""
        if self.tag not in TEMPLATES:
            return LaurentQTA()
        n = self.potential_dim
        return LaurentQTA({(2 * self.kappa, 2 * (self.full - n - off), self.ell): c
                           for off, c in TEMPLATES[self.tag].items()})

    def counting_polynomial(self) -> UniPoly:
        tmpl = TEMPLATES[self.tag]
        n = self.potential_dim
        lo = min(n + off for off in tmpl)
        if lo < 0:
            raise ValueError("negative power in counting polynomial")
        coeffs = [0] * (n + max(tmpl) + 1)
        for off, c in tmpl.items():
            coeffs[n + off] += c
        return UniPoly(coeffs)

    @property
    def t1_value(self) -> int:
        """Contribution at t = 1 (the coefficient of q^kappa a^ell)."""
        return sum(TEMPLATES[self.tag].values()) if self.tag in TEMPLATES else 0


def template_value(tag, n, T):
    return sum(c * T ** (n + off) for off, c in TEMPLATES[tag].items())


def classify_cell(res: ResidualSystem, kappa: int, ell: int, full: int, prime: int = 3,
                  degrees=(1, 2)) -> CellType:
    """Match point counts over F_{prime^m} against the type templates."""
    n = res.potential_dim
    if res.inconsistent:
        return CellType("NONADMISSIBLE", n, kappa, ell, full)
    sizes = [prime ** m for m in degrees]
    counts = tuple(count_points(res, T, prime) for T in sizes)
    if not any(counts):
        return CellType("NONADMISSIBLE", n, kappa, ell, full, counts)
    for tag in TEMPLATES:
        if min(n + off for off in TEMPLATES[tag]) < 0:
            continue
        if all(template_value(tag, n, T) * 1 == c for T, c in zip(sizes, counts)):
            return CellType(tag, n, kappa, ell, full, counts)
    return CellType("UNKNOWN", n, kappa, ell, full, counts)


# ---------------------------------------------------------------- drivers

@dataclass
class CellRecord:
    flag: DeltaFlag
    residual: ResidualSystem
    cell_type: Optional[CellType] = None

    @property
    def key(self):
        return self.flag.key()

    @property
    def affine(self):
        return not self.residual.equations


def process(flag: DeltaFlag, ring: RingSpec, classify=True, prime=3, unit_only=False) -> CellRecord:
    sys_ = build_equations(flag, ring)
    res = eliminate(sys_, unit_only=unit_only)
    rk = flag.base.rank
    full = rk * rk * ring.semigroup.delta
    rec = CellRecord(flag, res)
    if res.inconsistent:
        rec.cell_type = CellType("NONADMISSIBLE", res.potential_dim, flag.kappa, flag.ell, full)
    elif not res.equations:
        rec.cell_type = CellType("A", res.potential_dim, flag.kappa, flag.ell, full)
    elif classify:
        rec.cell_type = classify_cell(res, flag.kappa, flag.ell, full, prime)
    return rec


def stability_check(flag: DeltaFlag, ring: RingSpec, extra: int, sizes=(3, 9)) -> bool:
    """Counts are unchanged when the truncation is raised by ``extra``."""
    base = eliminate(build_equations(flag, ring))
    wide = eliminate(build_equations(flag, ring, cut=flag.base.merged.conductor + extra))
    return all(count_points(base, T) == count_points(wide, T) for T in sizes)
