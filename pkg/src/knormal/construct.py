"""Recursive constructions of irreducible and k-normal polynomials.

All constructions share one kernel, :func:`compose_frac`, which expands
den^(deg P) * P(num/den) for monic num and den of equal degree.  The
k-normal constructions feed the reciprocal of the seed through the map
x -> (x^p - x)/(x^p - x + delta) and take reciprocals of the results.

Every gate the corresponding theorem requires is checked before anything
is built.  Outputs up to ``budget`` in degree are re-checked with the
independent oracles (:func:`~knormal.knormality.classify` or
:func:`~knormal.poly.is_irreducible`); larger ones are flagged unverified.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    HypothesisViolation,
    InvalidDeltas,
    KTooLarge,
    NoRootA,
    NonCoprimePair,
    NotPrimitiveModR,
    ReducibleInput,
    TraceGateFailed,
    UnsupportedDegreeShape,
    ValidationError,
    VerificationFailed,
    ZeroDeltaPair,
)
from .field import GF, is_prime
from .knormality import classify
from .poly import Poly, is_irreducible, poly_gcd

log = logging.getLogger(__name__)

VERIFY_BUDGET = 64
MAX_DEGREE = 1024

ORACLE_VERIFIED = "oracle-verified"
UNVERIFIED = "constructed-unverified"


@dataclass(frozen=True)
class HypothesisProfile:
    n: int
    r: int
    e: int
    p_to_e: int
    q_primitive_mod_r: bool

    @property
    def k_max(self) -> int:
        return self.p_to_e - 1


@dataclass(frozen=True)
class SequenceEntry:
    u: int
    poly: Poly
    degree: int
    verified: str
    k: int | None
    raw: Poly | None = None

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "degree": self.degree,
            "coeffs": list(self.poly.coeffs),
            "k": self.k,
            "verified": self.verified,
        }


@dataclass(frozen=True)
class Prop23Result:
    poly: Poly
    predicted_irreducible: bool
    first_condition: bool
    A: int | None
    trace: int | None


def compose_frac(P: Poly, num: Poly, den: Poly) -> Poly:
    """den^deg(P) * P(num/den) by Horner accumulation."""
    if num.degree != den.degree or num.degree is None:
        raise DegreeMismatch("numerator and denominator must have equal degree")
    if not (num.is_monic() and den.is_monic()):
        raise ValidationError("numerator and denominator must be monic")
    field = P.field
    n = P.degree
    if n is None:
        return P
    # acc_j = c_n num^j + ... + c_{n-j} den^j
    acc = Poly.constant(field, P.coeffs[n])
    den_pow = Poly.constant(field, 1)
    for i in range(n - 1, -1, -1):
        den_pow = den_pow * den
        acc = acc * num
        if P.coeffs[i]:
            acc = acc + den_pow.scale(P.coeffs[i])
    return acc


def _artin_schreier(field: GF, a: int, b: int) -> Poly:
    """x^p - a*x + b."""
    c = [0] * (field.p + 1)
    c[0] = b
    c[1] = field.add(c[1], field.neg(a))
    c[field.p] = field.add(c[field.p], 1)
    return Poly._raw(field, c)


def _multiplicative_order(a: int, r: int) -> int:
    k, x = 1, a % r
    while x != 1:
        x = x * a % r
        k += 1
    return k


def check_hypotheses(n: int, field: GF) -> HypothesisProfile:
    """Split n = r * p^e with e >= 1, r = 1 or a prime with q primitive mod r."""
    if n < 2:
        raise UnsupportedDegreeShape(f"degree {n} is too small; need n = r*p^e with e >= 1")
    p = field.p
    r, e = n, 0
    while r % p == 0:
        r //= p
        e += 1
    if e == 0:
        raise UnsupportedDegreeShape(f"{n} is not divisible by p = {p}")
    if r != 1 and not is_prime(r):
        raise UnsupportedDegreeShape(f"{n} = {r}*{p}^{e} with {r} composite")
    primitive = r == 1 or _multiplicative_order(field.q, r) == r - 1
    if not primitive:
        raise NotPrimitiveModR(f"q = {field.q} is not primitive modulo {r}")
    return HypothesisProfile(n, r, e, p**e, primitive)


def _log_ratio(f: Poly, x: int) -> int:
    """f'(x) / f(x)."""
    field = f.field
    return field.div(f.derivative()(x), f(x))


def trace_condition_thm31(P: Poly, delta) -> bool:
    field = P.field
    delta = field.check(delta)
    Ps = P.reciprocal(normalize_monic=True)
    return field.trace(field.mul(delta, _log_ratio(Ps, 1))) != 0


def trace_condition_thm32(P: Poly) -> bool:
    field = P.field
    Ps = P.reciprocal(normalize_monic=True)
    t0 = field.trace(_log_ratio(Ps, 0))
    t1 = field.trace(_log_ratio(Ps, 1))
    return t0 * t1 % field.p != 0


def _seed_checks(P: Poly):
    if P.degree is None or P.degree < 2:
        raise ValidationError("seed polynomial must have degree >= 2")
    if not P.is_monic():
        raise ValidationError(f"seed {P} must be monic")
    if not is_irreducible(P):
        raise ReducibleInput(f"seed {P} is reducible")


def _seed_k(P: Poly, profile: HypothesisProfile) -> int:
    report = classify(P)
    if report.k >= profile.p_to_e:
        raise KTooLarge(f"seed is {report.k}-normal but the construction needs k < {profile.p_to_e}")
    return report.k


def _verify_nk(poly: Poly, k: int, budget: int) -> str:
    if poly.degree > budget:
        return UNVERIFIED
    report = classify(poly)
    if report.k != k or not report.proper:
        raise VerificationFailed(f"constructed {poly} has k={report.k}, expected {k}")
    return ORACLE_VERIFIED


def theorem31_step(P: Poly, delta, budget: int = VERIFY_BUDGET) -> SequenceEntry:
    """One step: P -> F* of degree n*p, where F = den^n P*(num/den)."""
    field = P.field
    _seed_checks(P)
    profile = check_hypotheses(P.degree, field)
    delta = field.check(delta)
    if delta == 0:
        raise HypothesisViolation("delta must be nonzero", gate="delta")
    k = _seed_k(P, profile)
    if not trace_condition_thm31(P, delta):
        raise TraceGateFailed("Tr(delta * P*'(1)/P*(1)) = 0")
    Ps = P.reciprocal(normalize_monic=True)
    num = _artin_schreier(field, 1, 0)
    den = _artin_schreier(field, 1, delta)
    F = compose_frac(Ps, num, den)
    Fs = F.reciprocal(normalize_monic=True)
    return SequenceEntry(1, Fs, Fs.degree, _verify_nk(Fs, k, budget), k, raw=F)


def theorem32_sequence(
    P: Poly, delta, u_max: int, budget: int = VERIFY_BUDGET, max_degree: int = MAX_DEGREE
) -> list[SequenceEntry]:
    """F_0 = P*, F_u = den^(n p^(u-1)) F_{u-1}(num/den); returns F*_u, u = 0..u_max.

    Raises BudgetExceeded (with the entries built so far in ``partial``)
    when the next degree would pass ``max_degree``.
    """
    field = P.field
    _seed_checks(P)
    profile = check_hypotheses(P.degree, field)
    delta = field.check(delta)
    if delta == 0 or not field.in_prime_field(delta):
        raise HypothesisViolation("delta must be a nonzero element of F_p", gate="delta")
    k = _seed_k(P, profile)
    if not trace_condition_thm32(P):
        raise TraceGateFailed("Tr(P*'(0)/P*(0)) * Tr(P*'(1)/P*(1)) = 0")
    num = _artin_schreier(field, 1, 0)
    den = _artin_schreier(field, 1, delta)
    F = P.reciprocal(normalize_monic=True)
    entries = [SequenceEntry(0, P, P.degree, ORACLE_VERIFIED, k, raw=F)]
    for u in range(1, u_max + 1):
        if F.degree * field.p > max_degree:
            raise BudgetExceeded(f"degree {F.degree * field.p} exceeds the cap {max_degree}", entries)
        F = compose_frac(F, num, den)
        Fs = F.reciprocal(normalize_monic=True)
        entries.append(SequenceEntry(u, Fs, Fs.degree, _verify_nk(Fs, k, budget), k, raw=F))
        log.info("u=%d degree=%d %s", u, Fs.degree, entries[-1].verified)
    return entries


def solve_a(delta2: int, field: GF) -> int:
    """Smallest A in F_q* with A^(p-1) = delta2."""
    for A in range(1, field.q):
        if field.pow(A, field.p - 1) == delta2:
            return A
    raise NoRootA(f"{delta2} is not a (p-1)-th power in {field!r}")


def _check_pair(field: GF, delta0: int, delta1: int, delta2: int):
    if delta2 == 0:
        raise InvalidDeltas("delta2 must be nonzero")
    if delta0 == 0 and delta1 == 0:
        raise ZeroDeltaPair("(delta0, delta1) must not be (0, 0)")
    g = poly_gcd(_artin_schreier(field, delta2, delta0), _artin_schreier(field, delta2, delta1))
    if g.degree != 0:
        raise NonCoprimePair("x^p - delta2 x + delta0 and x^p - delta2 x + delta1 share a factor")


def prop23_compose(P: Poly, delta0, delta1, delta2) -> Prop23Result:
    """F = (x^p - d2 x + d1)^n P((x^p - d2 x + d0)/(x^p - d2 x + d1)) and its predicted irreducibility."""
    field = P.field
    if P.degree is None or P.degree < 2:
        raise ValidationError("P must have degree >= 2")
    if not is_irreducible(P):
        raise ReducibleInput(f"{P} is reducible")
    d0, d1, d2 = field.check(delta0), field.check(delta1), field.check(delta2)
    _check_pair(field, d0, d1, d2)
    n = P.degree
    F = compose_frac(P, _artin_schreier(field, d2, d0), _artin_schreier(field, d2, d1))
    first = field.pow(d2, (field.q - 1) // (field.p - 1)) == 1
    try:
        A = solve_a(d2, field)
    except NoRootA:
        A = None
    if A is None:
        return Prop23Result(F, False, first, None, None)
    inner = field.sub(field.mul(field.sub(d1, d0), _log_ratio(P, 1)), field.scalar(n, d1))
    tr = field.trace(field.div(inner, field.pow(A, field.p)))
    return Prop23Result(F, first and tr != 0, first, A, tr)


def prop24_gate(P: Poly, delta0, delta1) -> int:
    """Product of the two traces that must be nonzero, as a residue mod p."""
    field = P.field
    d0, d1 = field.check(delta0), field.check(delta1)
    n = P.degree
    diff = field.sub(d1, d0)
    nd1 = field.scalar(n, d1)
    dP = P.derivative()
    at1 = P(1)
    t1 = field.trace(field.div(field.sub(field.mul(diff, dP(1)), field.mul(nd1, at1)), at1))
    c = field.div(d0, d1)
    atc = P(c)
    t2 = field.trace(field.div(field.add(field.mul(diff, dP(c)), field.mul(nd1, atc)), atc))
    return t1 * t2 % field.p


def prop24_sequence(
    P: Poly, delta0, delta1, u_max: int, budget: int = VERIFY_BUDGET, max_degree: int = MAX_DEGREE
) -> list[SequenceEntry]:
    """Irreducible sequence F_u = (x^p - x + d1)^(n p^(u-1)) F_{u-1}((x^p - x + d0)/(x^p - x + d1))."""
    field = P.field
    d0, d1 = field.check(delta0), field.check(delta1)
    if not (field.in_prime_field(d0) and field.in_prime_field(d1)):
        raise InvalidDeltas("delta0 and delta1 must lie in F_p")
    if d1 == 0:
        raise InvalidDeltas("delta1 must be nonzero")
    if d0 == d1:
        raise InvalidDeltas("delta0 == delta1: the two polynomials are not coprime")
    if P.degree is None or P.degree < 2:
        raise ValidationError("P must have degree >= 2")
    if not is_irreducible(P):
        raise ReducibleInput(f"{P} is reducible")
    if prop24_gate(P, d0, d1) == 0:
        raise TraceGateFailed("the product of the two trace conditions vanishes")
    num = _artin_schreier(field, 1, d0)
    den = _artin_schreier(field, 1, d1)
    F = P
    entries = [SequenceEntry(0, P.monic(), P.degree, ORACLE_VERIFIED, None, raw=P)]
    for u in range(1, u_max + 1):
        if F.degree * field.p > max_degree:
            raise BudgetExceeded(f"degree {F.degree * field.p} exceeds the cap {max_degree}", entries)
        F = compose_frac(F, num, den)
        status = UNVERIFIED
        if F.degree <= budget:
            if not is_irreducible(F):
                raise VerificationFailed(f"constructed F_{u} = {F} is reducible")
            status = ORACLE_VERIFIED
        entries.append(SequenceEntry(u, F.monic(), F.degree, status, None, raw=F))
    return entries
