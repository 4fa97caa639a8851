"""Arithmetic in F_p and F_q = F_p[z]/(modulus(z)).

Elements are handled internally as integer encodings: the coordinate
vector (c_0, ..., c_{m-1}) in the power basis of the modulus maps to
``sum(c_i * p**i)``.  This is also the textual form used on the command
line.  :class:`FqElem` wraps an encoding together with its field for
callers that prefer operator syntax.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import (
    DivisionByZero,
    MismatchedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ValidationError,
)

#: Largest field order accepted when constructing a base field.
MAX_Q = 1 << 20

# full addition tables are cheap below this order
_ADD_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Product of coordinate vectors modulo a monic polynomial over F_p."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    m = len(mod) - 1
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(m + 1):
                prod[i - m + j] -= c * mod[j]
    return _trim([c % p for c in prod[:m]])


@dataclass(frozen=True, eq=False)
class GF:
    """The finite field F_q with q = p**m.

    Use :meth:`make` (or :func:`fq_make`) to build one; it validates the
    characteristic and the modulus and picks a default modulus when none
    is given.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)

    @classmethod
    def make(cls, p: int, m: int = 1, modulus=None) -> "GF":
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if m < 1:
            raise ValidationError(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_Q:
            raise ValidationError(f"field order {p}^{m} exceeds the cap {MAX_Q}")
        if m == 1 and modulus is None:
            modulus = (0, 1)
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValidationError(f"modulus must be monic of degree {m}")
            if m > 1 and not _is_irreducible_mod_p(list(modulus), p):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        return cls(p, m, modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    # -- encodings ---------------------------------------------------------

    def coords(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coords(self, coords) -> int:
        enc = 0
        for c in reversed(list(coords)):
            enc = enc * self.p + int(c) % self.p
        return enc

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> "FqElem":
        return FqElem(self, self.check(value))

    def check(self, a) -> int:
        """Coerce an encoding or :class:`FqElem` to a validated encoding."""
        if isinstance(a, FqElem):
            if a.field != self:
                raise MismatchedFields(f"{a!r} does not belong to {self!r}")
            return a.value
        a = int(a)
        if not 0 <= a < self.q:
            raise ValidationError(f"element encoding {a} outside [0, {self.q})")
        return a

    def from_int(self, n: int) -> int:
        """The image of the integer ``n`` in the prime subfield."""
        return n % self.p

    # -- tables ------------------------------------------------------------

    @cached_property
    def _tables(self):
        # exp/log tables with respect to a primitive element (m > 1 only)
        p, mod, q = self.p, list(self.modulus), self.q
        order = q - 1
        factors = prime_factors(order)

        def power(c, e):
            result = [1]
            while e:
                if e & 1:
                    result = _pmulmod(result, c, mod, p)
                c = _pmulmod(c, c, mod, p)
                e >>= 1
            return result

        for g in range(p, q):
            gc = self.coords(g)
            if all(power(gc, order // r) != [1] for r in factors):
                break
        exp = [0] * order
        log = [0] * q
        cur = [1]
        for i in range(order):
            enc = self.from_coords(cur)
            exp[i] = enc
            log[enc] = i
            cur = _pmulmod(cur, gc, mod, p)
        return exp, log

    @cached_property
    def _add_table(self):
        q = self.q
        return [self._add_digits(a, b) for a in range(q) for b in range(q)]

    @cached_property
    def _neg_table(self):
        return [self.from_coords((-c) % self.p for c in self.coords(a)) for a in range(self.q)]

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    # -- arithmetic on encodings --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= _ADD_TABLE_LIMIT:
            return self._add_table[a * self.q + b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in " + repr(self))
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return exp[-log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        exp, log = self._tables
        return exp[log[a] * e % (self.q - 1)]

    def scalar(self, n: int, a: int) -> int:
        """``n * a`` for an ordinary integer ``n``."""
        return self.mul(self.from_int(n), a)

    def frobenius(self, a: int, i: int = 1) -> int:
        """``a ** (p ** i)``."""
        if self.m == 1 or a == 0:
            return a
        return self.pow(a, pow(self.p, i % self.m))

    def trace(self, a: int) -> int:
        """Absolute trace Tr_{q|p}(a) as a residue mod p."""
        t = 0
        for i in range(self.m):
            t = self.add(t, self.frobenius(a, i))
        # trace values lie in F_p, whose encodings are the residues themselves
        assert t < self.p
        return t

    def in_prime_field(self, a: int) -> bool:
        return a < self.p


def fq_make(p: int, m: int = 1, modulus=None) -> GF:
    return GF.make(p, m, modulus)


@dataclass(frozen=True)
class FqElem:
    """An element of F_q bound to its field."""

    field: GF
    value: int

    def _other(self, b) -> int:
        if isinstance(b, FqElem):
            if b.field != self.field:
                raise MismatchedFields("operands belong to different fields")
            return b.value
        return self.field.from_int(int(b))

    def __add__(self, b):
        return FqElem(self.field, self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FqElem(self.field, self.field.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return FqElem(self.field, self.field.sub(self._other(b), self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, b):
        return FqElem(self.field, self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FqElem(self.field, self.field.div(self.value, self._other(b)))

    def __rtruediv__(self, b):
        return FqElem(self.field, self.field.div(self._other(b), self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.value, e))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    @property
    def coords(self) -> list[int]:
        return self.field.coords(self.value)

    def frobenius(self, i: int = 1) -> "FqElem":
        return FqElem(self.field, self.field.frobenius(self.value, i))

    def trace(self) -> int:
        return self.field.trace(self.value)

    def __repr__(self):
        return f"FqElem({self.value} in {self.field!r})"


def fq_arith(a: FqElem, b: FqElem, op: str) -> FqElem:
    if a.field != b.field:
        raise MismatchedFields("operands belong to different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def frobenius_p(a: FqElem, i: int) -> FqElem:
    return a.frobenius(i)


def trace_q_over_p(a: FqElem) -> int:
    return a.trace()


def _is_irreducible_mod_p(f: list[int], p: int) -> bool:
    from .poly import Poly

    return Poly(GF(p, 1, (0, 1)), f).is_irreducible()


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p with the smallest encoding."""
    if m == 1:
        return (0, 1)
    prime = GF(p, 1, (0, 1))
    from .poly import first_irreducible

    return first_irreducible(prime, m).coeffs
