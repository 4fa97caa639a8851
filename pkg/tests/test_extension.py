import random

import pytest
from hypothesis import given, settings, strategies as st

from knormal.errors import ImproperGamma, ReducibleModulus, ZeroTheta
from knormal.extension import (
    ExtField,
    ext_make,
    frobenius_q,
    is_proper,
    lemma25_check,
    linearized_eval,
    trace_qn_over_q,
)
from knormal.field import GF
from knormal.poly import Poly, first_irreducible

# (p, m, n) with q^n <= 256
SMALL_EXTS = [(2, 1, 8), (3, 1, 5), (2, 2, 4), (2, 4, 2), (5, 1, 3)]


def small_ext(p, m, n):
    base = GF.make(p, m)
    return ExtField(first_irreducible(base, n))


def test_ext_make(F2, P):
    E = ext_make(P("x^2+x+1", F2))
    a = E.gen()
    assert a * a == a + 1
    assert ext_make(P("x^4+x+1", F2)).order == 16
    with pytest.raises(ReducibleModulus):
        ext_make(P("x^2+1", F2))


def test_frobenius_examples(F2, P):
    E = ext_make(P("x^2+x+1", F2))
    a = E.gen()
    assert frobenius_q(a, 1) == a + 1
    E16 = ext_make(P("x^4+x+1", F2))
    b = E16.gen()
    # alpha^(2^2) = alpha + 1; alpha^2 + 1 is alpha^(2^3)
    assert frobenius_q(b, 2) == b + 1 == b**4
    assert frobenius_q(b, 3) == b * b + 1 == b**8
    for c in E16.elements():
        assert frobenius_q(c, 4) == c


def test_trace_examples(F2, P):
    assert trace_qn_over_q(ext_make(P("x^4+x+1", F2)).gen()) == 0
    assert trace_qn_over_q(ext_make(P("x^4+x^3+1", F2)).gen()) == 1
    assert trace_qn_over_q(ext_make(P("x^2+x+1", F2)).gen()) == 1


def test_linearized_examples(F2, P):
    a = ext_make(P("x^2+x+1", F2)).gen()
    assert linearized_eval(P("x+1", F2), a) == a.ext.one()
    b = ext_make(P("x^3+x+1", F2)).gen()
    assert not linearized_eval(P("x^2+x+1", F2), b)
    assert linearized_eval(P("1", F2), b) == b


def test_proper_examples(F2, P):
    E = ext_make(P("x^4+x+1", F2))
    a = E.gen()
    assert is_proper(a)
    assert not is_proper(E.one())
    assert not is_proper(a**5)


@pytest.mark.parametrize("p,m,n", SMALL_EXTS)
def test_frobenius_is_automorphism_fixing_base(p, m, n):
    E = small_ext(p, m, n)
    elems = list(E.elements())
    rng = random.Random(1)
    fixed = 0
    for a in elems:
        fa = frobenius_q(a, 1)
        if fa == a:
            fixed += 1
            assert len(a.rep) <= 1
        for b in rng.sample(elems, 8):
            assert frobenius_q(a * b, 1) == fa * frobenius_q(b, 1)
            assert frobenius_q(a + b, 1) == fa + frobenius_q(b, 1)
        # a^q by plain exponentiation
        assert fa == a ** E.base.q
    assert fixed == E.base.q


@pytest.mark.parametrize("p,m,n", SMALL_EXTS)
def test_trace_is_linearized_all_ones(p, m, n):
    E = small_ext(p, m, n)
    base = E.base
    ones = Poly(base, [1] * n)  # (x^n - 1)/(x - 1)
    for a in E.elements():
        t = trace_qn_over_q(a)
        assert linearized_eval(ones, a) == E(t)
        xn1 = Poly.xn_minus_1(base, n)
        assert not linearized_eval(xn1, a)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_linearized_composition(data):
    p, m, n = data.draw(st.sampled_from(SMALL_EXTS))
    E = small_ext(p, m, n)
    base = E.base
    coeff = st.lists(st.integers(0, base.q - 1), max_size=n + 2)
    phi = Poly(base, data.draw(coeff))
    psi = Poly(base, data.draw(coeff))
    a = E(data.draw(st.lists(st.integers(0, base.q - 1), min_size=n, max_size=n)))
    composed = (phi * psi) % Poly.xn_minus_1(base, n)
    assert linearized_eval(composed, a) == linearized_eval(phi, linearized_eval(psi, a))
    assert linearized_eval(phi + psi, a) == linearized_eval(phi, a) + linearized_eval(psi, a)


def test_lemma25_examples(F2, F3, F4, P):
    E4 = ext_make(P("x^2+x+1", F2))
    w = E4.gen()
    assert 1 / w + 1 / (w + 1) == E4.one()
    assert lemma25_check(w, 1)
    assert lemma25_check(ext_make(P("x^3+x^2+2", F3)).gen(), 1)
    with pytest.raises(ImproperGamma):
        lemma25_check(E4.one(), 1)
    with pytest.raises(ZeroTheta):
        lemma25_check(w, 0)
    # gamma^p != gamma suffices: a generator of F_4 over itself (n = 1)
    E = ext_make(P("x+2", F4))
    assert lemma25_check(E(2), 1)


def test_ext_inverse_and_pow(F3, P):
    E = ext_make(P("x^3+2*x+1", F3))
    for a in E.elements():
        if a:
            assert a * (1 / a) == E.one()
            assert a ** (E.order - 1) == E.one()
