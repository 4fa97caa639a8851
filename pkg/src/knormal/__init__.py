"""Recursive construction and verification of k-normal polynomials over finite fields."""

from .construct import (
    check_hypotheses,
    compose_frac,
    prop23_compose,
    prop24_sequence,
    theorem31_step,
    theorem32_sequence,
    trace_condition_thm31,
    trace_condition_thm32,
)
from .extension import ExtElem, ExtField, ext_make, is_proper, lemma25_check, linearized_eval, trace_qn_over_q
from .field import GF, FqElem, fq_make
from .knormality import KNormalReport, classify, element_k, k_degree_by_gcd, nk_test_by_characterization
from .parse import format_poly, parse_poly
from .poly import Poly, divisor_table, factor_xn_minus_1, is_irreducible, poly_gcd, reciprocal

__version__ = "0.1.0"
