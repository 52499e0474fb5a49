"""Exact arithmetic used throughout the package.

Laurent polynomials in q^(1/2), t^(1/2), a keep doubled exponents so half
integers stay exact.  Multivariate polynomials for the cell equations are
stored sparsely as {monomial: coefficient} where a monomial is a sorted
tuple of (variable id, exponent) pairs; the raw helpers below work on those
dicts directly because the elimination loop is the hot path.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

Key = tuple  # (q2, t2, a)


def _canon(key):
    q2, t2, a = key
    return (a, t2, q2)


class LaurentQTA:
    """Laurent polynomial in q^(1/2), t^(1/2) and a with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    if len(k) != 3 or k[2] < 0:
                        raise ValueError(f"bad exponent triple {k!r}")
                    clean[tuple(int(x) for x in k)] = int(c)
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def monomial(cls, q2=0, t2=0, a=0, c=1):
        return cls({(q2, t2, a): c})

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # access
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: lexicographic by (a, t2, q2)."""
        return sorted(self._terms.items(), key=lambda kv: _canon(kv[0]))

    def coeff(self, q2=0, t2=0, a=0):
        return self._terms.get((q2, t2, a), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def a_degree(self):
        return max((k[2] for k in self._terms), default=-1)

    def a_part(self, k):
        """Coefficient of a^k, returned with a-exponent 0."""
        return LaurentQTA._raw({(q2, t2, 0): c for (q2, t2, a), c in self._terms.items() if a == k})

    def truncate_a(self, amax):
        return LaurentQTA._raw({key: c for key, c in self._terms.items() if key[2] <= amax})

    # arithmetic
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        r = dict(self._terms)
        for k, c in other._terms.items():
            v = r.get(k, 0) + c
            if v:
                r[k] = v
            else:
                r.pop(k, None)
        return LaurentQTA._raw(r)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQTA._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        r = {}
        for (q1, t1, a1), c1 in self._terms.items():
            for (q2, t2, a2), c2 in other._terms.items():
                k = (q1 + q2, t1 + t2, a1 + a2)
                v = r.get(k, 0) + c1 * c2
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return LaurentQTA._raw(r)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (k, c), = self._terms.items()
            if c not in (1, -1) or k[2]:
                raise ValueError("monomial is not a unit")
            return LaurentQTA.monomial(-k[0] * -n, -k[1] * -n, 0, c ** -n)
        result = LaurentQTA.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def shift(self, q2=0, t2=0, a=0):
        return LaurentQTA._raw({(k[0] + q2, k[1] + t2, k[2] + a): c for k, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentQTA({to_text(self)})"

    def __str__(self):
        return to_text(self)


def _lift(x):
    if isinstance(x, LaurentQTA):
        return x
    if isinstance(x, int):
        return LaurentQTA.const(x)
    return NotImplemented


Q = LaurentQTA.monomial(2, 0, 0)
T = LaurentQTA.monomial(0, 2, 0)
A = LaurentQTA.monomial(0, 0, 1)
ONE = LaurentQTA.const(1)
ZERO = LaurentQTA()


# ---------------------------------------------------------------- normalization

def tilde_normalize(F: LaurentQTA) -> LaurentQTA:
    """Divide by the lowest (t, q)-monomial among the a-free terms."""
    low = [k for k in F._terms if k[2] == 0]
    if not low:
        raise ValueError("no a-constant part")
    q2, t2, _ = min(low, key=lambda k: (k[1], k[0]))
    return F.shift(-q2, -t2, 0)


def _exact_sqrt(x: Fraction) -> Fraction:
    if x < 0:
        raise ValueError(f"no exact square root of {x}")
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ValueError(f"no exact square root of {x}")
    return Fraction(n, d)


def _half_power(value, e2):
    """value ** (e2 / 2) for a number or a monomial LaurentQTA."""
    if isinstance(value, LaurentQTA):
        if e2 % 2 == 0:
            return value ** (e2 // 2)
        if len(value._terms) != 1:
            raise ValueError("half-integer power of a non-monomial")
        (k, c), = value._terms.items()
        if k[0] % 2 or k[1] % 2 or k[2] % 2:
            raise ValueError("half-integer power of a monomial with odd exponents")
        root = _exact_sqrt(Fraction(c))
        if root.denominator != 1:
            raise ValueError("non-integer root coefficient")
        half = LaurentQTA.monomial(k[0] // 2, k[1] // 2, k[2] // 2, int(root))
        return half ** e2
    value = Fraction(value)
    if e2 % 2 == 0:
        return value ** (e2 // 2)
    return _exact_sqrt(value) ** e2


def specialize(F: LaurentQTA, bindings: dict) -> LaurentQTA:
    """Substitute exact values for some of q, t, a.

    Values may be ints, Fractions or LaurentQTA; binding a variable with a
    half-integer exponent needs an exact square root of the value.  The
    result must have integer coefficients (use evaluate() for numbers).
    """
    for name in bindings:
        if name not in ("q", "t", "a"):
            raise ValueError(f"unknown variable {name!r}")
    acc = {}
    for (q2, t2, a), c in F._terms.items():
        num = Fraction(c)
        poly = LaurentQTA.monomial(
            0 if "q" in bindings else q2,
            0 if "t" in bindings else t2,
            0 if "a" in bindings else a,
        )
        for name, e2 in (("q", q2), ("t", t2), ("a", 2 * a)):
            if name in bindings and e2:
                v = _half_power(bindings[name], e2)
                if isinstance(v, LaurentQTA):
                    poly = poly * v
                else:
                    num *= v
        for k, pc in poly._terms.items():
            acc[k] = acc.get(k, 0) + num * pc
    out = {}
    for k, v in acc.items():
        if v.denominator != 1:
            raise ValueError("specialization leaves non-integer coefficients")
        if v:
            out[k] = int(v)
    return LaurentQTA(out)


def evaluate(F: LaurentQTA, q, t, a) -> Fraction:
    """Numeric value at exact rational q, t, a."""
    total = Fraction(0)
    for (q2, t2, ae), c in F._terms.items():
        total += c * _half_power(q, q2) * _half_power(t, t2) * Fraction(a) ** ae
    return total


def divide_exact(F: LaurentQTA, G: LaurentQTA) -> LaurentQTA:
    """F / G when G divides F exactly in the Laurent ring; ValueError otherwise."""
    if G.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if F.is_zero():
        return ZERO
    # move both into the polynomial ring, then do lex long division
    def lows(P):
        return (min(k[0] for k in P._terms), min(k[1] for k in P._terms), min(k[2] for k in P._terms))
    fq, ft, fa = lows(F)
    gq, gt, ga = lows(G)
    Fp, Gp = F.shift(-fq, -ft, -fa), G.shift(-gq, -gt, -ga)
    order = lambda k: (k[2], k[1], k[0])
    lead_g = max(Gp._terms, key=order)
    cg = Gp._terms[lead_g]
    rem = dict(Fp._terms)
    quo = {}
    while rem:
        lead = max(rem, key=order)
        c = rem[lead]
        d = tuple(x - y for x, y in zip(lead, lead_g))
        if min(d) < 0 or c % cg:
            raise ValueError("polynomial division is not exact")
        qc = c // cg
        quo[d] = qc
        for k, v in Gp._terms.items():
            kk = (k[0] + d[0], k[1] + d[1], k[2] + d[2])
            nv = rem.get(kk, 0) - qc * v
            if nv:
                rem[kk] = nv
            else:
                rem.pop(kk, None)
    return LaurentQTA(quo).shift(fq - gq, ft - gt, fa - ga)


# ---------------------------------------------------------------- serialization

def to_json(F: LaurentQTA) -> str:
    return json.dumps([{"q2": k[0], "t2": k[1], "a": k[2], "c": str(c)} for k, c in F.items()])


def from_json(s) -> LaurentQTA:
    data = json.loads(s) if isinstance(s, str) else s
    out = {}
    for term in data:
        k = (int(term["q2"]), int(term["t2"]), int(term["a"]))
        out[k] = out.get(k, 0) + int(term["c"])
    return LaurentQTA(out)


def _half(e2):
    return str(e2 // 2) if e2 % 2 == 0 else f"{e2}/2"


def to_text(F: LaurentQTA) -> str:
    if F.is_zero():
        return "0"
    return " + ".join(f"{c}*q^({_half(k[0])})*t^({_half(k[1])})*a^{k[2]}" for k, c in F.items())


_TERM = re.compile(r"^(-?\d+)\*q\^\((-?\d+(?:/2)?)\)\*t\^\((-?\d+(?:/2)?)\)\*a\^(\d+)$")


def _unhalf(s):
    return int(s[:-2]) if s.endswith("/2") else 2 * int(s)


def from_text(s: str) -> LaurentQTA:
    s = s.strip()
    if s == "0":
        return ZERO
    out = {}
    for part in s.split(" + "):
        m = _TERM.match(part.strip())
        if not m:
            raise ValueError(f"cannot parse term {part!r}")
        k = (_unhalf(m.group(2)), _unhalf(m.group(3)), int(m.group(4)))
        out[k] = out.get(k, 0) + int(m.group(1))
    return LaurentQTA(out)


def pretty(F: LaurentQTA) -> str:
    """Human-oriented rendering, e.g. '1 + q*t + q*a'."""
    if F.is_zero():
        return "0"
    pieces = []
    for (q2, t2, a), c in F.items():
        fac = []
        for name, e2 in (("q", q2), ("t", t2)):
            if e2 == 2:
                fac.append(name)
            elif e2:
                fac.append(f"{name}^{_half(e2)}" if e2 % 2 == 0 else f"{name}^({_half(e2)})")
        if a == 1:
            fac.append("a")
        elif a:
            fac.append(f"a^{a}")
        body = "*".join(fac)
        if not body:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(body)
        elif c == -1:
            pieces.append("-" + body)
        else:
            pieces.append(f"{c}*{body}")
    return " + ".join(pieces).replace("+ -", "- ")


# ---------------------------------------------------------------- counting polynomials

class UniPoly:
    """Integer polynomial in one variable T, coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    def __call__(self, x):
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({str(self)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mono = "" if e == 0 else ("T" if e == 1 else f"T^{e}")
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


def interpolate_counting_polynomial(samples, degree_bound=None) -> UniPoly:
    """Lagrange interpolation of point counts over fields of the given sizes."""
    sizes = [int(s) for s, _ in samples]
    if len(set(sizes)) != len(sizes):
        raise ValueError("sample field sizes must be distinct")
    if degree_bound is None:
        degree_bound = len(samples) - 1
    if len(samples) < degree_bound + 1:
        raise ValueError("not enough samples for the degree bound")
    pts = [(Fraction(s), Fraction(c)) for s, c in samples]
    use = pts[: degree_bound + 1]
    coeffs = [Fraction(0)] * (degree_bound + 1)
    for i, (xi, yi) in enumerate(use):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(use):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("not polynomial-count over tested fields")
    poly = UniPoly(int(c) for c in coeffs)
    for x, y in pts[degree_bound + 1:]:
        if poly(x) != y:
            raise ValueError("not polynomial-count over tested fields")
    return poly


# ---------------------------------------------------------------- finite fields

class GF:
    """The field with p^m elements; elements are ints in [0, p^m) (base-p digits)."""

    _cache: dict = {}

    def __new__(cls, p, m=1):
        key = (p, m)
        if key in cls._cache:
            return cls._cache[key]
        obj = super().__new__(cls)
        obj._setup(p, m)
        cls._cache[key] = obj
        return obj

    def _setup(self, p, m):
        if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p, self.m, self.q = p, m, p ** m
        self.modulus = _irreducible(p, m)
        q = self.q
        digits = [self._digits(x) for x in range(q)]
        self.add_t = [[self._pack([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)] for x in range(q)]
        self.mul_t = [[self._pack(self._polymul(digits[x], digits[y])) for y in range(q)] for x in range(q)]
        self.neg_t = [self._pack([(-a) % p for a in digits[x]]) for x in range(q)]
        self.inv_t = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul_t[x][y] == 1:
                    self.inv_t[x] = y
                    break

    def _digits(self, x):
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return out

    def _pack(self, ds):
        x = 0
        for d in reversed(ds):
            x = x * self.p + d
        return x

    def _polymul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                for j in range(m + 1):
                    prod[k - m + j] = (prod[k - m + j] - c * self.modulus[j]) % p
        return prod[:m]

    def from_int(self, n):
        return n % self.p

    def add(self, x, y):
        return self.add_t[x][y]

    def sub(self, x, y):
        return self.add_t[x][self.neg_t[y]]

    def mul(self, x, y):
        return self.mul_t[x][y]

    def neg(self, x):
        return self.neg_t[x]

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.inv_t[x]

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.m})"


def _irreducible(p, m):
    """Monic irreducible polynomial of degree m over F_p, coefficients low first."""
    if m == 1:
        return [0, 1]
    from itertools import product

    def has_root_or_factor(poly):
        # trial division by all monic polynomials of degree 1..m//2
        for d in range(1, m // 2 + 1):
            for tail in product(range(p), repeat=d):
                div = list(tail) + [1]
                r = list(poly)
                for k in range(len(r) - 1, d - 1, -1):
                    c = r[k]
                    if c:
                        for j in range(d + 1):
                            r[k - d + j] = (r[k - d + j] - c * div[j]) % p
                if not any(r[:d]):
                    return True
        return False

    for tail in product(range(p), repeat=m):
        if tail[0] == 0:
            continue
        poly = list(tail) + [1]
        if not has_root_or_factor(poly):
            return poly
    raise RuntimeError("no irreducible polynomial found")


# ---------------------------------------------------------------- sparse polynomials

def padd(a, b, s=1):
    """a + s*b on sparse dicts over Z."""
    r = dict(a)
    for m, c in b.items():
        v = r.get(m, 0) + s * c
        if v:
            r[m] = v
        else:
            r.pop(m, None)
    return r


def mmul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def pmul(a, b):
    r = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mmul(m1, m2)
            v = r.get(m, 0) + c1 * c2
            if v:
                r[m] = v
            else:
                r.pop(m, None)
    return r


def primitive_part(poly):
    """Divide by the content; the sign makes the smallest monomial positive."""
    if not poly:
        return poly
    g = reduce(gcd, poly.values())
    if poly[min(poly)] < 0:
        g = -g
    if g == 1:
        return poly
    return {m: c // g for m, c in poly.items()}


def pvars(poly):
    return {v for m in poly for v, _ in m}


class MultiPoly:
    """Polynomial in named variables over Z or a finite field.

    Terms are kept sparse: {((var_index, exp), ...): coeff}.  exponent_vector()
    gives the dense view of a monomial.
    """

    __slots__ = ("variables", "ring", "_terms")

    def __init__(self, variables, terms=None, ring=None):
        self.variables = tuple(variables)
        self.ring = ring
        # over a field the coefficients are field elements (ints in [0, q))
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(sorted((int(v), int(e)) for v, e in m if e))
            v = clean.get(m, 0) + c if ring is None else ring.add(clean.get(m, 0), c)
            if v:
                clean[m] = v
            else:
                clean.pop(m, None)
        self._terms = clean

    @property
    def terms(self):
        return dict(self._terms)

    def exponent_vector(self, mono):
        vec = [0] * len(self.variables)
        for v, e in mono:
            vec[v] = e
        return tuple(vec)

    def dense_terms(self):
        return {self.exponent_vector(m): c for m, c in self._terms.items()}

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return bool(self._terms) and set(self._terms) == {()}

    def reduce_mod(self, field: GF) -> "MultiPoly":
        if self.ring is not None:
            raise ValueError("already over a finite field")
        return MultiPoly(self.variables, {m: field.from_int(c) for m, c in self._terms.items()}, field)

    def _check(self, other):
        if not isinstance(other, MultiPoly) or other.variables != self.variables or other.ring is not self.ring:
            raise ValueError("incompatible polynomials")

    def __add__(self, other):
        self._check(other)
        if self.ring is None:
            return MultiPoly(self.variables, padd(self._terms, other._terms))
        r = dict(self._terms)
        for m, c in other._terms.items():
            r[m] = self.ring.add(r.get(m, 0), c)
        return MultiPoly(self.variables, r, self.ring)

    def __mul__(self, other):
        self._check(other)
        if self.ring is None:
            return MultiPoly(self.variables, pmul(self._terms, other._terms))
        f = self.ring
        r = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mmul(m1, m2)
                r[m] = f.add(r.get(m, 0), f.mul(c1, c2))
        return MultiPoly(self.variables, r, f)

    def __neg__(self):
        if self.ring is None:
            return MultiPoly(self.variables, {m: -c for m, c in self._terms.items()})
        return MultiPoly(self.variables, {m: self.ring.neg(c) for m, c in self._terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.variables == other.variables
                and self.ring is other.ring and self._terms == other._terms)

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items()):
            body = "*".join(self.variables[v] + (f"^{e}" if e > 1 else "") for v, e in m)
            parts.append(f"{c}*{body}" if body else str(c))
        return " + ".join(parts)


# ---------------------------------------------------------------- rational functions

_FIELD = None


def _qt_field():
    global _FIELD
    if _FIELD is None:
        from sympy import QQ
        from sympy.polys.fields import field
        _FIELD = field("Q,T", QQ)  # Q = q^(1/2), T = t^(1/2)
    return _FIELD


class RatFunQT:
    """Rational function in q^(1/2), t^(1/2) over the rationals.

    Backed by sympy's sparse fraction field; the stored pair is reduced and
    the denominator is made monic with respect to sympy's lex order.
    """

    __slots__ = ("_f",)

    def __init__(self, value=0):
        K, Qv, Tv = _qt_field()
        if isinstance(value, RatFunQT):
            self._f = value._f
        elif isinstance(value, LaurentQTA):
            acc = K(0)
            for (q2, t2, a), c in value._terms.items():
                if a:
                    raise ValueError("a must not occur in a (q,t) rational function")
                acc += c * Qv ** q2 * Tv ** t2
            self._f = acc
        elif isinstance(value, (int, Fraction)):
            self._f = K(value)
        else:
            self._f = value

    @classmethod
    def monomial(cls, q2=0, t2=0, c=1):
        K, Qv, Tv = _qt_field()
        return cls(c * Qv ** q2 * Tv ** t2)

    @property
    def numerator(self):
        n, d = self._normalized()
        return n

    @property
    def denominator(self):
        n, d = self._normalized()
        return d

    def _normalized(self):
        n, d = self._f.numer, self._f.denom
        lc = d.LC
        return n.quo_ground(lc), d.quo_ground(lc)

    def _wrap(self, x):
        return x if isinstance(x, RatFunQT) else RatFunQT(x)

    def __add__(self, o):
        return RatFunQT(self._f + self._wrap(o)._f)

    __radd__ = __add__

    def __sub__(self, o):
        return RatFunQT(self._f - self._wrap(o)._f)

    def __rsub__(self, o):
        return RatFunQT(self._wrap(o)._f - self._f)

    def __mul__(self, o):
        return RatFunQT(self._f * self._wrap(o)._f)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._wrap(o)
        if not o._f:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunQT(self._f / o._f)

    def __rtruediv__(self, o):
        return self._wrap(o) / self

    def __neg__(self):
        return RatFunQT(-self._f)

    def __pow__(self, n):
        return RatFunQT(self._f ** n)

    def __eq__(self, o):
        try:
            o = self._wrap(o)
        except Exception:
            return False
        return self._f == o._f

    def __hash__(self):
        n, d = self._normalized()
        return hash((tuple(n.terms()), tuple(d.terms())))

    def __bool__(self):
        return bool(self._f)

    def evaluate(self, q, t):
        """Value at rational q, t given through exact square roots."""
        Qv = _exact_sqrt(Fraction(q))
        Tv = _exact_sqrt(Fraction(t))
        n, d = self._normalized()
        def ev(p):
            s = Fraction(0)
            for (i, j), c in p.terms():
                s += Fraction(int(c.numerator), int(c.denominator)) * Qv ** i * Tv ** j
            return s
        den = ev(d)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return ev(n) / den

    def to_laurent(self) -> LaurentQTA:
        """Convert when the reduced denominator is a monomial and coefficients are integers."""
        n, d = self._normalized()
        if len(d.terms()) != 1:
            raise ValueError("not a Laurent polynomial")
        (dm, dc), = d.terms()
        out = {}
        for (i, j), c in n.terms():
            c = c / dc
            if c.denominator != 1:
                raise ValueError("non-integer coefficient")
            out[(i - dm[0], j - dm[1], 0)] = int(c.numerator)
        return LaurentQTA(out)

    def __repr__(self):
        n, d = self._normalized()
        return f"RatFunQT(({n.as_expr()})/({d.as_expr()}))"
