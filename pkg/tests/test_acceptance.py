"""Acceptance criteria, one test each.

Each test asserts its own wall-clock limit.  A summary line per
criterion (PASS/FAIL with duration) is printed at the end of the run.
"""

import itertools
import random
import time

from knormal.cli import cmd_search
from knormal.construct import (
    ORACLE_VERIFIED,
    prop23_compose,
    theorem31_step,
    theorem32_sequence,
)
from knormal.extension import ExtField, is_proper, lemma25_check
from knormal.field import GF
from knormal.knormality import (
    classify,
    conjugate_rank,
    element_k,
    gcd_definition,
    nk_test_by_characterization,
)
from knormal.parse import parse_poly
from knormal.poly import first_irreducible, irreducibles, monic_polys

# wall-clock limits in seconds
LIMIT_C1 = 30
LIMIT_C2 = 10
LIMIT_C3 = 5
LIMIT_C4 = 120
LIMIT_C5 = 60
LIMIT_C6 = 30
LIMIT_C7 = 5
LIMIT_C8 = 60

LEMMA_SAMPLES = 500
# (p, m, n) with 81 < q^n <= 2^16, sampled
LEMMA_SAMPLED_FIELDS = [
    (2, 1, 8), (2, 1, 12), (2, 1, 16), (3, 1, 5), (3, 1, 10), (2, 2, 4), (2, 2, 8),
    (5, 1, 3), (5, 1, 6), (7, 1, 3), (7, 1, 5), (3, 2, 3), (3, 2, 5), (2, 4, 2), (2, 4, 4), (2, 8, 2),
]


def trial_division_irreducible(f):
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % g).degree is None:
                return False
    return True


def test_c1_triple_method_agreement():
    t0 = time.perf_counter()
    count = 0
    for p, maxdeg in ((2, 6), (3, 4)):
        field = GF.make(p)
        for n in range(1, maxdeg + 1):
            for f in irreducibles(field, n):
                if f.coeffs[0] == 0:
                    continue  # f = x has root 0
                ext = ExtField(f, check=False)
                conj = ext.conjugates(ext.gen().rep)
                k_gcd, _ = gcd_definition(ext, conj)
                k_rank = n - conjugate_rank(ext, conj)
                verdicts = [nk_test_by_characterization(f, k) for k in range(n)]
                assert k_gcd == k_rank, f
                assert verdicts == [k == k_gcd for k in range(n)], f
                count += 1
    # monic irreducibles other than x: F_2 degrees 1..6, then F_3 degrees 1..4
    assert count == (1 + 1 + 2 + 3 + 6 + 9) + (2 + 3 + 8 + 18)
    assert time.perf_counter() - t0 < LIMIT_C1


def test_c2_theorem32_worked_chain():
    t0 = time.perf_counter()
    F2 = GF.make(2)
    seq = theorem32_sequence(parse_poly("x^2+x+1", F2), 1, 3)
    assert seq[1].poly == parse_poly("x^4+x^3+1", F2)
    assert [e.degree for e in seq[1:]] == [4, 8, 16]
    for e in seq[1:]:
        rep = classify(e.poly)
        assert rep.k == 0 and rep.proper
        assert e.verified == ORACLE_VERIFIED
        assert trial_division_irreducible(e.poly)
    assert time.perf_counter() - t0 < LIMIT_C2


def test_c3_theorem31_worked_step():
    t0 = time.perf_counter()
    F2 = GF.make(2)
    e = theorem31_step(parse_poly("x^4+x+1", F2), 1)
    assert e.poly == parse_poly("x^8+x^5+x^3+x^2+1", F2)
    rep = classify(e.poly)
    assert (rep.n, rep.k, rep.proper) == (8, 1, True)
    assert time.perf_counter() - t0 < LIMIT_C3


def test_c4_prop23_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    total = 0
    for p in (2, 3):
        field = GF.make(p)
        for n in range(2, 5):
            for P in irreducibles(field, n):
                for d0, d1, d2 in itertools.product(range(p), range(p), range(1, p)):
                    if d0 == d1:
                        continue  # not coprime; includes (0, 0)
                    r = prop23_compose(P, d0, d1, d2)
                    total += 1
                    if r.predicted_irreducible != trial_division_irreducible(r.poly):
                        mismatches.append((str(P), d0, d1, d2))
    elapsed = time.perf_counter() - t0
    assert elapsed < LIMIT_C4
    assert not mismatches, f"{len(mismatches)}/{total} verdicts wrong, first: {mismatches[:3]}"


def _lemma_fields_exhaustive():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 7):
            if q**n <= 81:
                yield q, n


def test_c5_lemma25_identity():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    checked = 0
    for q, n in _lemma_fields_exhaustive():
        p = next(d for d in range(2, q + 1) if q % d == 0)
        m = next(e for e in range(1, 4) if p**e == q)
        ext = ExtField(first_irreducible(GF.make(p, m), n))
        for g in ext.elements():
            if not is_proper(g):
                continue
            for th in range(1, p):
                assert lemma25_check(g, th), (q, n, g)
                checked += 1
    for p, m, n in LEMMA_SAMPLED_FIELDS:
        base = GF.make(p, m)
        ext = ExtField(first_irreducible(base, n))
        found = 0
        while found < LEMMA_SAMPLES:
            g = ext([rng.randrange(base.q) for _ in range(n)])
            if not is_proper(g):
                continue
            found += 1
            for th in range(1, p):
                assert lemma25_check(g, th), (p, m, n, g)
                checked += 1
    assert checked > 0
    assert time.perf_counter() - t0 < LIMIT_C5


def test_c6_prop21_invariance():
    t0 = time.perf_counter()
    cases = 0
    for p in (2, 3):
        field = GF.make(p)
        for n in range(p, 5, p):
            for f in irreducibles(field, n):
                ext = ExtField(f, check=False)
                alpha = ext.gen()
                k = element_k(alpha)
                for a in range(field.q):
                    for b in range(1, field.q):
                        assert element_k(ext([a]) + alpha * ext([b])) == k, (f, a, b)
                        cases += 1
    assert cases > 0
    assert time.perf_counter() - t0 < LIMIT_C6


def test_c7_search_counts():
    t0 = time.perf_counter()
    F2 = GF.make(2)
    rows = cmd_search(F2, 4)
    assert len(rows) == 3
    ks = sorted(k for _, k, _ in rows)
    assert ks == [0, 0, 1]
    assert [f for f, _, _ in cmd_search(F2, 4, 1)] == [parse_poly("x^4+x+1", F2)]
    assert time.perf_counter() - t0 < LIMIT_C7


def _check_sequence_identities(field, seed, delta, u_max):
    seq = theorem32_sequence(parse_poly(seed, field), delta, u_max, budget=0)
    n = seq[0].degree
    Ps0 = seq[0].raw(0)
    dF1 = seq[1].raw.derivative()(0)
    for e in seq[1:]:
        u = e.u
        F = e.raw
        target = field.mul(field.pow(delta, u * n), Ps0)
        assert F(0) == F(1) == target, (seed, u)
        dF = F.derivative()
        sign = 1 if u % 2 else field.neg(1)
        expected = field.mul(sign, field.mul(field.pow(delta, (n - 1) * (u - 1)), dF1))
        assert dF(0) == dF(1) == expected, (seed, u)
    return seq[-1].degree


def test_c8_sequence_identities():
    t0 = time.perf_counter()
    F2, F3 = GF.make(2), GF.make(3)
    assert _check_sequence_identities(F2, "x^2+x+1", 1, 5) == 64
    assert _check_sequence_identities(F3, "x^3+x^2+2", 1, 3) == 81
    assert _check_sequence_identities(F3, "x^3+x^2+2", 2, 3) == 81
    assert time.perf_counter() - t0 < LIMIT_C8
