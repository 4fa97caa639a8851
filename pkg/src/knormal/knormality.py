"""k-normality of elements and irreducible polynomials.

Three independent routes to the same number k:

* the gcd definition, deg gcd(x^n - 1, sum_i a^(q^i) x^(n-1-i)), computed
  in F_{q^n}[x];
* the divisor characterisation: some cofactor phi of degree n - k kills a
  under its linearized map while no cofactor of smaller degree does;
* the rank of the conjugates a, a^q, ..., a^(q^(n-1)) over F_q, k = n - rank.

:func:`classify` runs all three and refuses to answer if they disagree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .errors import KOutOfRange, MethodDisagreement, ReducibleInput, ValidationError
from .extension import ExtElem, ExtField, _linearized, is_proper
from .field import GF
from .poly import DivisorTable, Poly, divisor_table, factor_xn_minus_1, is_irreducible

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KNormalReport:
    n: int
    k: int
    gcd_witness: Poly
    rank: int
    # (gcd definition, divisor characterisation, conjugate rank); None = not run
    methods_agree: tuple
    proper: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "rank": self.rank,
            "gcd_witness": list(self.gcd_witness.coeffs),
            "proper": self.proper,
            "methods_agree": list(self.methods_agree),
        }


@lru_cache(maxsize=64)
def cached_divisor_table(field: GF, n: int) -> DivisorTable:
    return divisor_table(factor_xn_minus_1(n, field))


def _ext_poly_rem(ext: ExtField, a: list, b: list) -> list:
    db = len(b) - 1
    while a and not a[-1]:
        a.pop()
    if len(a) <= db:
        return a
    inv = ext.inv(b[-1])
    for i in range(len(a) - 1, db - 1, -1):
        c = ext.mul(a[i], inv)
        if c:
            off = i - db
            for j in range(db):
                if b[j]:
                    a[off + j] = ext.sub(a[off + j], ext.mul(c, b[j]))
    a = a[:db]
    while a and not a[-1]:
        a.pop()
    return a


def _ext_poly_gcd(ext: ExtField, a: list, b: list) -> list:
    while b:
        a, b = b, _ext_poly_rem(ext, list(a), b)
    inv = ext.inv(a[-1])
    return [ext.mul(c, inv) for c in a]


def gcd_definition(ext: ExtField, conj) -> tuple[int, Poly]:
    """k and the monic gcd from the list of conjugates of an element."""
    n = ext.n
    g = [conj[n - 1 - d] for d in range(n)]
    while g and not g[-1]:
        g.pop()
    xn1 = [ext.from_base(ext.base.neg(1))] + [()] * (n - 1) + [(1,)]
    if not g:
        return n, Poly.xn_minus_1(ext.base, n)
    d = _ext_poly_gcd(ext, xn1, g)
    coeffs = []
    for c in d:
        v = ext.base_value(c)
        if v is None:
            raise MethodDisagreement("gcd(x^n - 1, g) has coefficients outside F_q")
        coeffs.append(v)
    witness = Poly._raw(ext.base, coeffs)
    return witness.degree, witness


def conjugate_rank(ext: ExtField, conj) -> int:
    """Rank over F_q of the coordinate vectors of the conjugates."""
    f = ext.base
    rows = [ext.vector(c) for c in conj]
    n = ext.n
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = f.inv(rows[rank][col])
        prow = [f.mul(inv, x) for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[r], prow)]
        rank += 1
    return rank


def characterization_holds(ext: ExtField, conj, table: DivisorTable, k: int) -> bool:
    """Some phi_{k,j} kills the element and no phi_{s,i} with k < s < n does."""
    n = ext.n
    if not any(not _linearized(ext, d.phi.coeffs, conj) for d in table.divisors(k)):
        return False
    for s in range(k + 1, n):
        for d in table.divisors(s):
            if not _linearized(ext, d.phi.coeffs, conj):
                return False
    return True


def _require_irreducible(F: Poly) -> Poly:
    if F.degree is None or F.degree < 1:
        raise ValidationError("polynomial must have degree >= 1")
    if not F.is_monic():
        raise ValidationError(f"{F} is not monic")
    if F.coeffs[0] == 0:
        raise ValidationError(f"{F} has the root 0, which is not k-normal for any k")
    if not is_irreducible(F):
        raise ReducibleInput(f"{F} is reducible over {F.field!r}")
    return F


def k_degree_by_gcd(F: Poly) -> KNormalReport:
    _require_irreducible(F)
    ext = ExtField(F, check=False)
    conj = ext.conjugates(ext.gen().rep)
    k, witness = gcd_definition(ext, conj)
    return KNormalReport(ext.n, k, witness, ext.n - k, (True, None, None), True)


def nk_test_by_characterization(F: Poly, k: int) -> bool:
    _require_irreducible(F)
    n = F.degree
    if not 0 <= k < n:
        raise KOutOfRange(f"k must lie in [0, {n - 1}], got {k}")
    ext = ExtField(F, check=False)
    conj = ext.conjugates(ext.gen().rep)
    return characterization_holds(ext, conj, cached_divisor_table(F.field, n), k)


def element_report(beta: ExtElem) -> KNormalReport:
    """k-degree of an arbitrary element, with all applicable methods."""
    ext = beta.ext
    n = ext.n
    conj = ext.conjugates(beta.rep)
    k, witness = gcd_definition(ext, conj)
    rank = conjugate_rank(ext, conj)
    char = None
    if k < n:
        char = characterization_holds(ext, conj, cached_divisor_table(ext.base, n), k)
    agree = (True, char, rank + k == n)
    if char is False or rank + k != n:
        raise MethodDisagreement(f"methods disagree for {beta!r}: gcd k={k}, rank={rank}, characterisation={char}")
    return KNormalReport(n, k, witness, rank, agree, is_proper(beta))


def element_k(beta: ExtElem) -> int:
    """k-degree of an element by the gcd definition alone."""
    ext = beta.ext
    return gcd_definition(ext, ext.conjugates(beta.rep))[0]


def classify(F: Poly) -> KNormalReport:
    _require_irreducible(F)
    ext = ExtField(F, check=False)
    report = element_report(ext.gen())
    log.debug("classified %s: k=%d rank=%d", F, report.k, report.rank)
    return report


def is_nk_polynomial(F: Poly, k: int) -> bool:
    report = classify(F)
    return report.proper and report.k == k
