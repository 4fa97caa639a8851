"""Text formats for polynomials.

Two input grammars are accepted:

* a little-endian comma list of F_q encodings, ``"1,1,0,0,1"`` is x^4+x+1;
* a caret expression such as ``"x^4+x+1"`` or ``"x^2+2*x+1"`` where every
  coefficient is an F_q encoding, ``*`` is optional and ``-`` negates in F_q.

Output uses the caret form for people and plain coefficient lists in JSON.
"""

from __future__ import annotations

import re

from .errors import ParseError, ValidationError
from .field import GF
from .poly import Poly

_LIST_RE = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*,?\s*$")
_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*?\s*(?P<var1>[a-zA-Z])(?:\s*(?:\^|\*\*)\s*(?P<exp1>\d+))?)?
          | (?P<var2>[a-zA-Z])(?:\s*(?:\^|\*\*)\s*(?P<exp2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, field: GF) -> Poly:
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    try:
        if _LIST_RE.match(text):
            parts = [p for p in text.replace(" ", "").split(",") if p]
            return Poly(field, [int(p) for p in parts])
        return _parse_expr(text, field)
    except ValidationError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def _parse_expr(text: str, field: GF) -> Poly:
    coeffs: dict[int, int] = {}
    pos = 0
    var = None
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        first = False
        v = m.group("var1") or m.group("var2")
        if v is not None:
            if var is None:
                var = v
            elif v != var:
                raise ParseError(f"mixed variables {var!r} and {v!r}")
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        coef = field.check(coef)
        exp_txt = m.group("exp1") or m.group("exp2")
        exp = int(exp_txt) if exp_txt is not None else (1 if v else 0)
        if m.group("sign") == "-":
            coef = field.neg(coef)
        coeffs[exp] = field.add(coeffs.get(exp, 0), coef)
        pos = m.end()
    if not coeffs:
        raise ParseError(f"no terms in {text!r}")
    dense = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        dense[e] = c
    return Poly(field, dense)


def format_poly(f: Poly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


def format_coeffs(f: Poly) -> str:
    return ",".join(str(c) for c in f.coeffs) or "0"
