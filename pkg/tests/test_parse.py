import pytest
from hypothesis import given, strategies as st

from knormal.errors import ParseError
from knormal.field import GF
from knormal.parse import format_coeffs, format_poly, parse_poly
from knormal.poly import Poly


@pytest.mark.parametrize(
    "text,coeffs",
    [
        ("x^4+x+1", (1, 1, 0, 0, 1)),
        ("1,1,0,0,1", (1, 1, 0, 0, 1)),
        ("1, 1, 1", (1, 1, 1)),
        ("x + 1 + x^4", (1, 1, 0, 0, 1)),
        ("x**2 + x^2", ()),
        ("1", (1,)),
        ("0", ()),
    ],
)
def test_parse_binary(F2, text, coeffs):
    assert parse_poly(text, F2).coeffs == coeffs


def test_parse_coefficients(F3, F9):
    assert parse_poly("x^2+2*x+1", F3).coeffs == (1, 2, 1)
    assert parse_poly("x^2+2x+1", F3).coeffs == (1, 2, 1)
    assert parse_poly("x^3-x+1", F3).coeffs == (1, 2, 0, 1)
    assert parse_poly("-1", F3).coeffs == (2,)
    # extension-field coefficients are encodings
    assert parse_poly("y^2+5*y+7", F9).coeffs == (7, 5, 1)
    assert parse_poly("x-5", F9).coeffs[0] == F9.neg(5)


@pytest.mark.parametrize("text", ["", "x^^2", "x^2+3", "x+y", "2 3", "x^2 x", "1,2,a"])
def test_parse_errors(F3, text):
    with pytest.raises(ParseError):
        parse_poly(text, F3)


def test_format(F3):
    f = Poly(F3, [2, 0, 1, 2])
    assert format_poly(f) == "2*x^3+x^2+2"
    assert format_coeffs(f) == "2,0,1,2"
    assert format_poly(Poly(F3)) == "0"


@given(st.lists(st.integers(0, 8), max_size=10))
def test_roundtrip(coeffs):
    F9 = GF.make(3, 2)
    f = Poly(F9, coeffs)
    assert parse_poly(format_poly(f), F9) == f
    if not f.is_zero():
        assert parse_poly(format_coeffs(f), F9) == f
