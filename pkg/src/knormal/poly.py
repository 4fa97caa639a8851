"""Dense univariate polynomials over F_q.

Coefficients are little-endian tuples of F_q encodings with trailing
zeros trimmed.  The zero polynomial has the empty tuple and degree
``None``; code that needs a number must handle it explicitly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import BothZero, DivisionByZero, MismatchedFields, ValidationError, ZeroConstantTerm
from .field import GF


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        coeffs = [field.check(c) for c in coeffs]
        self.field = field
        self.coeffs = _trim(coeffs)

    @classmethod
    def _raw(cls, field: GF, coeffs) -> "Poly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = _trim(list(coeffs))
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field: GF, c: int) -> "Poly":
        return cls._raw(field, (field.check(c),))

    @classmethod
    def monomial(cls, field: GF, n: int, c: int = 1) -> "Poly":
        return cls._raw(field, [0] * n + [c])

    @classmethod
    def from_encoding(cls, field: GF, enc: int) -> "Poly":
        out = []
        while enc:
            enc, r = divmod(enc, field.q)
            out.append(r)
        return cls._raw(field, out)

    @classmethod
    def xn_minus_1(cls, field: GF, n: int) -> "Poly":
        return cls._raw(field, [field.neg(1)] + [0] * (n - 1) + [1])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def encoding(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.field.q + c
        return enc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self}, over {self.field!r})"

    def __str__(self):
        from .parse import format_poly

        return format_poly(self)

    def _same(self, other: "Poly"):
        if other.field != self.field:
            raise MismatchedFields("polynomials over different fields")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._same(other)
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly._raw(self.field, [add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> "Poly":
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        self._same(other)
        return Poly._raw(self.field, _mul(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return Poly._raw(self.field, [mul(c, x) for x in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        result = Poly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly"):
        self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        return Poly._raw(self.field, _rem(self.field, list(self.coeffs), other.coeffs))

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero() or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def __call__(self, x: int) -> int:
        """Evaluate at an F_q element given by its encoding."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.scalar(i, c) for i, c in enumerate(self.coeffs)][1:])

    def reciprocal(self, normalize_monic: bool = False) -> "Poly":
        """x^n * P(1/x); optionally scaled to be monic."""
        if self.is_zero() or self.coeffs[0] == 0:
            raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
        rec = Poly._raw(self.field, self.coeffs[::-1])
        return rec.monic() if normalize_monic else rec

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        f = self.field
        m = mod.coeffs
        result = [1]
        base = _rem(f, list(self.coeffs), m)
        while e:
            if e & 1:
                result = _rem(f, _mul(f, result, base), m)
            e >>= 1
            if e:
                base = _rem(f, _mul(f, base, base), m)
        return Poly._raw(f, result)

    def gcd(self, other: "Poly") -> "Poly":
        return poly_gcd(self, other)

    def is_irreducible(self) -> bool:
        return is_irreducible(self)


# -- list-level kernels (encodings in, encodings out) ------------------------


def _mul(f: GF, a, b) -> list[int]:
    if not a or not b:
        return []
    if f.m == 1:
        p = f.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    add, mul = f.add, f.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def _rem(f: GF, a: list[int], b) -> list[int]:
    db = len(b) - 1
    while a and a[-1] == 0:
        a.pop()
    if len(a) <= db:
        return a
    inv = f.inv(b[-1])
    if f.m == 1:
        p = f.p
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] * inv % p
            if c:
                off = i - db
                for j in range(db):
                    a[off + j] = (a[off + j] - c * b[j]) % p
        a = a[:db]
    else:
        sub, mul = f.sub, f.mul
        for i in range(len(a) - 1, db - 1, -1):
            c = mul(a[i], inv)
            if c:
                off = i - db
                for j in range(db):
                    if b[j]:
                        a[off + j] = sub(a[off + j], mul(c, b[j]))
        a = a[:db]
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(f: GF, a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    inv = f.inv(b[-1])
    quo = [0] * (len(a) - db)
    sub, mul = f.sub, f.mul
    for i in range(len(a) - 1, db - 1, -1):
        c = mul(a[i], inv)
        quo[i - db] = c
        if c:
            off = i - db
            for j in range(db + 1):
                if b[j]:
                    a[off + j] = sub(a[off + j], mul(c, b[j]))
    return quo, a[:db]


# -- operations --------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._same(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = list(f.coeffs), list(g.coeffs)
    while b:
        a, b = b, _rem(f.field, a, b)
    return Poly._raw(f.field, a).monic()


def poly_derivative(f: Poly) -> Poly:
    return f.derivative()


def reciprocal(P: Poly, normalize_monic: bool = False) -> Poly:
    return P.reciprocal(normalize_monic)


def is_irreducible(f: Poly) -> bool:
    """Ben-Or test: f has no factor of degree i for every i <= deg f / 2."""
    n = f.degree
    if n is None or n < 1:
        raise ValidationError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    f = f.monic()
    if f.coeffs[0] == 0:
        return False
    x = Poly.x(f.field)
    h = x
    for _ in range(n // 2):
        h = h.powmod(f.field.q, f)
        if poly_gcd(f, h - x).degree != 0:
            return False
    return True


def monic_polys(field: GF, n: int):
    """All monic degree-n polynomials in increasing encoding order."""
    lead = field.q**n
    for low in range(lead):
        yield Poly.from_encoding(field, lead + low)


def irreducibles(field: GF, n: int):
    for f in monic_polys(field, n):
        if f.degree == 1 or f.coeffs[0] != 0:
            if is_irreducible(f):
                yield f


def first_irreducible(field: GF, n: int) -> Poly:
    return next(irreducibles(field, n))


# -- factorisation of x^n - 1 ------------------------------------------------


def _ddf(f: Poly) -> list[tuple[int, Poly]]:
    """Distinct-degree factorisation of a monic squarefree polynomial."""
    out = []
    x = Poly.x(f.field)
    h = x
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(f.field.q, rest)
        g = poly_gcd(rest, h - x)
        if g.degree:
            out.append((d, g))
            rest = rest.exact_div(g)
            h = h % rest
    if rest.degree:
        out.append((rest.degree, rest))
    return out


def _edf(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a product of degree-d irreducibles (Cantor-Zassenhaus)."""
    if f.degree == d:
        return [f]
    field = f.field
    n = f.degree
    while True:
        a = Poly._raw(field, [rng.randrange(field.q) for _ in range(n)])
        if a.degree is None or a.degree < 1:
            continue
        if field.p == 2:
            # trace map down to F_2: a + a^2 + ... + a^(2^(md-1))
            t = a % f
            s = t
            for _ in range(field.m * d - 1):
                t = (t * t) % f
                s = s + t
            g = poly_gcd(f, s)
        else:
            e = (field.q**d - 1) // 2
            g = poly_gcd(f, a.powmod(e, f) - Poly.constant(field, 1))
        if 0 < g.degree < n:
            return _edf(g, d, rng) + _edf(f.exact_div(g), d, rng)


def factor_squarefree(f: Poly, seed: int = 0) -> list[Poly]:
    """Monic irreducible factors of a squarefree polynomial, sorted."""
    f = f.monic()
    rng = random.Random(seed)
    out = []
    for d, g in _ddf(f):
        out.extend(_edf(g, d, rng))
    return sorted(out, key=lambda g: (g.degree, g.encoding()))


@dataclass(frozen=True)
class CyclotomicFactorization:
    """x^n - 1 = (phi_1 ... phi_r)^t with n = n1 * p^e and t = p^e."""

    n: int
    n1: int
    e: int
    t: int
    factors: tuple[Poly, ...]
    field: GF

    @property
    def r(self) -> int:
        return len(self.factors)


def factor_xn_minus_1(n: int, field: GF) -> CyclotomicFactorization:
    if n < 1:
        raise ValidationError("n must be positive")
    p = field.p
    n1, e = n, 0
    while n1 % p == 0:
        n1 //= p
        e += 1
    t = p**e
    factors = tuple(factor_squarefree(Poly.xn_minus_1(field, n1)))
    prod = Poly.constant(field, 1)
    for g in factors:
        prod = prod * g
    if prod**t != Poly.xn_minus_1(field, n):
        raise AssertionError(f"factorisation of x^{n}-1 failed to reconstruct")
    return CyclotomicFactorization(n, n1, e, t, factors, field)


@dataclass(frozen=True)
class Divisor:
    exponents: tuple[int, ...]
    R: Poly
    phi: Poly

    @property
    def degree(self) -> int:
        return self.R.degree


@dataclass(frozen=True)
class DivisorTable:
    """Monic divisors R of x^n - 1 with deg R < n, grouped by degree."""

    fact: CyclotomicFactorization
    by_degree: dict

    @property
    def n(self) -> int:
        return self.fact.n

    def divisors(self, s: int) -> list[Divisor]:
        return self.by_degree.get(s, [])

    def u(self, s: int) -> int:
        return len(self.divisors(s))

    def counts(self) -> list[int]:
        return [self.u(s) for s in range(self.n)]


def divisor_table(fact: CyclotomicFactorization) -> DivisorTable:
    field = fact.field
    n, t = fact.n, fact.t
    degs = [g.degree for g in fact.factors]
    powers = []
    for g in fact.factors:
        row = [Poly.constant(field, 1)]
        for _ in range(t):
            row.append(row[-1] * g)
        powers.append(row)
    xn1 = Poly.xn_minus_1(field, n)
    table: dict[int, list[Divisor]] = {s: [] for s in range(n)}
    for exps in itertools.product(range(t + 1), repeat=len(degs)):
        s = sum(a * d for a, d in zip(exps, degs))
        if s >= n:
            continue
        R = Poly.constant(field, 1)
        for j, a in enumerate(exps):
            if a:
                R = R * powers[j][a]
        table[s].append(Divisor(exps, R, xn1.exact_div(R)))
    return DivisorTable(fact, table)
