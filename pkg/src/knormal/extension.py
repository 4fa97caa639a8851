"""The extension F_{q^n} = F_q[y]/(F(y)) for a monic irreducible F.

The class of ``y`` is a root of F, so every question about the roots of a
polynomial is answered inside the quotient built from that polynomial.
Elements are little-endian coefficient tuples over F_q, reduced mod F.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, HypothesisViolation, ImproperGamma, MismatchedFields, ReducibleModulus, ValidationError, ZeroTheta
from .field import FqElem, GF
from .poly import Poly, _divmod, _mul, _rem, _trim, is_irreducible


def proper_divisors(n: int) -> list[int]:
    return [v for v in range(1, n) if n % v == 0]


class ExtField:
    def __init__(self, F: Poly, check: bool = True):
        if F.degree is None or F.degree < 1:
            raise ValidationError("modulus must have degree >= 1")
        if not F.is_monic():
            raise ValidationError("modulus must be monic")
        if check and not is_irreducible(F):
            raise ReducibleModulus(f"{F} is reducible over {F.field!r}")
        self.base: GF = F.field
        self.modulus = F
        self.n = F.degree
        self._mod = F.coeffs
        # rows: (y^i)^q mod F; a^q = sum a_i * row_i since a_i^q = a_i
        yq = Poly.x(self.base).powmod(self.base.q, F).coeffs
        rows = [(1,)]
        for _ in range(1, self.n):
            rows.append(self.mul(rows[-1], yq))
        self._frob_rows = tuple(rows)

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"ExtField({self.modulus} over {self.base!r})"

    # -- raw element arithmetic (tuples of encodings) ----------------------

    def reduce(self, coeffs) -> tuple[int, ...]:
        return tuple(_rem(self.base, [self.base.check(c) for c in coeffs], self._mod))

    def add(self, a, b):
        add = self.base.add
        if len(a) < len(b):
            a, b = b, a
        return _trim([add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, c: int, a):
        if c == 0:
            return ()
        mul = self.base.mul
        return _trim([mul(c, x) for x in a])

    def mul(self, a, b):
        return tuple(_rem(self.base, _mul(self.base, a, b), self._mod))

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero in " + repr(self))
        f = self.base
        r0, r1 = list(self._mod), list(a)
        s0, s1 = [], [1]
        while r1:
            quo, rem = _divmod(f, r0, r1)
            r0, r1 = r1, list(_trim(rem))
            qs = _mul(f, quo, s1)
            width = max(len(s0), len(qs))
            s0, s1 = s1, list(_trim([f.sub(s0[i] if i < len(s0) else 0, qs[i] if i < len(qs) else 0) for i in range(width)]))
        c = f.inv(r0[0])
        return tuple(_rem(f, [f.mul(c, x) for x in s0], self._mod))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = (1,)
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def frob(self, a, j: int = 1):
        """a ** (q ** j)."""
        for _ in range(j % self.n):
            a = self._frob_once(a)
        return a

    def _frob_once(self, a):
        f = self.base
        n = self.n
        if f.m == 1:
            p = f.p
            acc = [0] * n
            for ai, row in zip(a, self._frob_rows):
                if ai:
                    for k, r in enumerate(row):
                        acc[k] += ai * r
            return _trim([c % p for c in acc])
        add, mul = f.add, f.mul
        acc = [0] * n
        for ai, row in zip(a, self._frob_rows):
            if ai:
                for k, r in enumerate(row):
                    if r:
                        acc[k] = add(acc[k], mul(ai, r))
        return _trim(acc)

    def conjugates(self, a) -> list[tuple[int, ...]]:
        """[a, a^q, ..., a^(q^(n-1))]."""
        out = [tuple(a)]
        for _ in range(1, self.n):
            out.append(self._frob_once(out[-1]))
        return out

    def vector(self, a) -> list[int]:
        return list(a) + [0] * (self.n - len(a))

    def from_base(self, c: int):
        return _trim([self.base.check(c)])

    def base_value(self, a) -> int | None:
        """The F_q encoding of ``a`` if it lies in F_q, else None."""
        if len(a) <= 1:
            return a[0] if a else 0
        return None

    # -- public element wrappers -------------------------------------------

    def __call__(self, coeffs) -> "ExtElem":
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            coeffs = [coeffs]
        return ExtElem(self, self.reduce(coeffs))

    def gen(self) -> "ExtElem":
        return ExtElem(self, self.reduce((0, 1)))

    def one(self) -> "ExtElem":
        return ExtElem(self, (1,))

    def zero(self) -> "ExtElem":
        return ExtElem(self, ())

    def elements(self):
        size = self.base.q**self.n
        for enc in range(size):
            yield ExtElem(self, Poly.from_encoding(self.base, enc).coeffs)

    @property
    def order(self) -> int:
        return self.base.q**self.n


def ext_make(F: Poly) -> ExtField:
    return ExtField(F)


@dataclass(frozen=True)
class ExtElem:
    ext: ExtField
    rep: tuple

    @property
    def poly(self) -> Poly:
        return Poly._raw(self.ext.base, self.rep)

    def _other(self, b):
        if isinstance(b, ExtElem):
            if b.ext != self.ext:
                raise MismatchedFields("elements of different extensions")
            return b.rep
        if isinstance(b, FqElem):
            return self.ext.from_base(self.ext.base.check(b))
        return self.ext.from_base(self.ext.base.from_int(int(b)))

    def __add__(self, b):
        return ExtElem(self.ext, self.ext.add(self.rep, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return ExtElem(self.ext, self.ext.sub(self.rep, self._other(b)))

    def __rsub__(self, b):
        return ExtElem(self.ext, self.ext.sub(self._other(b), self.rep))

    def __neg__(self):
        return ExtElem(self.ext, self.ext.neg(self.rep))

    def __mul__(self, b):
        return ExtElem(self.ext, self.ext.mul(self.rep, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return ExtElem(self.ext, self.ext.div(self.rep, self._other(b)))

    def __rtruediv__(self, b):
        return ExtElem(self.ext, self.ext.div(self._other(b), self.rep))

    def __pow__(self, e: int):
        return ExtElem(self.ext, self.ext.pow(self.rep, e))

    def __bool__(self):
        return bool(self.rep)

    def frobenius(self, j: int = 1) -> "ExtElem":
        return ExtElem(self.ext, self.ext.frob(self.rep, j))

    def __repr__(self):
        return f"ExtElem({self.poly.__str__().replace('x', 'y')})"


def frobenius_q(a: ExtElem, j: int) -> ExtElem:
    return a.frobenius(j)


def trace_qn_over_q(a: ExtElem) -> int:
    """Relative trace as an F_q encoding."""
    ext = a.ext
    acc = ()
    for c in ext.conjugates(a.rep):
        acc = ext.add(acc, c)
    value = ext.base_value(acc)
    assert value is not None, "trace left the base field"
    return value


def linearized_eval(phi: Poly, a: ExtElem, conjugates=None) -> ExtElem:
    """L_phi(a) = sum_v phi_v * a^(q^v)."""
    ext = a.ext
    if phi.field != ext.base:
        raise MismatchedFields("phi must have coefficients in the base field")
    conj = conjugates if conjugates is not None else ext.conjugates(a.rep)
    return ExtElem(ext, _linearized(ext, phi.coeffs, conj))


def _linearized(ext: ExtField, coeffs, conj):
    n = ext.n
    f = ext.base
    acc = [0] * n
    for v, t in enumerate(coeffs):
        if not t:
            continue
        for k, c in enumerate(conj[v % n]):
            if c:
                acc[k] = f.add(acc[k], f.mul(t, c))
    return _trim(acc)


def is_proper(a: ExtElem) -> bool:
    """True iff a lies in no proper subfield F_{q^v}, v | n, v < n."""
    ext = a.ext
    conj = ext.conjugates(a.rep)
    return all(conj[v] != a.rep for v in proper_divisors(ext.n))


def lemma25_check(gamma: ExtElem, theta) -> bool:
    """Evaluate both sides of sum_j 1/(gamma + j*theta) = -1/(gamma^p - gamma).

    ``theta`` must be a nonzero element of the prime field.  Only
    ``gamma^p != gamma`` is required of gamma.
    """
    ext = gamma.ext
    f = ext.base
    th = f.check(theta)
    if th == 0:
        raise ZeroTheta("theta must be nonzero")
    if f.frobenius(th) != th:
        raise HypothesisViolation("theta must lie in the prime field", gate="theta")
    g = gamma.rep
    gp = ext.pow(g, f.p)
    if gp == g:
        raise ImproperGamma("gamma^p == gamma")
    lhs = ()
    shift = ()
    step = ext.from_base(th)
    for _ in range(f.p):
        lhs = ext.add(lhs, ext.inv(ext.add(g, shift)))
        shift = ext.add(shift, step)
    rhs = ext.neg(ext.inv(ext.sub(gp, g)))
    return lhs == rhs
