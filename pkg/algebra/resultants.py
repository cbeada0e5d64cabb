"""
Sylvester resultants and binary-form discriminants.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from algebra.matrices import ExactMatrix, exact_determinant
from algebra.polynomial import Polynomial, as_rational
from utils.errors import FormatError, UndefinedResultantError

logger = logging.getLogger(__name__)


def sylvester_matrix(f_coeffs: Sequence, g_coeffs: Sequence) -> ExactMatrix:
    """
    Sylvester matrix from descending coefficient lists.

    f_coeffs has length deg_f + 1 and g_coeffs length deg_g + 1 (formal
    degrees; leading zeros allowed). The first deg_g rows hold shifted
    copies of f, the last deg_f rows shifted copies of g.
    """
    deg_f = len(f_coeffs) - 1
    deg_g = len(g_coeffs) - 1
    size = deg_f + deg_g
    rows: List[List[Fraction]] = []
    for shift in range(deg_g):
        rows.append([Fraction(0)] * shift + [as_rational(c) for c in f_coeffs] + [Fraction(0)] * (size - shift - deg_f - 1))
    for shift in range(deg_f):
        rows.append([Fraction(0)] * shift + [as_rational(c) for c in g_coeffs] + [Fraction(0)] * (size - shift - deg_g - 1))
    return ExactMatrix(size, size, tuple(v for r in rows for v in r))


def sylvester_resultant(f: Polynomial, g: Polynomial,
                        deg_f: Optional[int] = None, deg_g: Optional[int] = None) -> Fraction:
    """
    Resultant of two univariate polynomials.

    Args:
        f, g: Polynomials in one variable
        deg_f, deg_g: Formal degrees; default to the actual degrees

    Returns:
        det of the (deg_f + deg_g) square Sylvester matrix

    Raises:
        FormatError: if f or g is not univariate
        UndefinedResultantError: if both formal degrees are 0
    """
    for name, poly in (('f', f), ('g', g)):
        if poly.nvars != 1:
            raise FormatError(f"{name} must be univariate, got {poly.nvars} variables")
    deg_f = max(f.total_degree(), 0) if deg_f is None else deg_f
    deg_g = max(g.total_degree(), 0) if deg_g is None else deg_g
    if deg_f == 0 and deg_g == 0:
        raise UndefinedResultantError("resultant of two constants is undefined")
    if f.total_degree() > deg_f or g.total_degree() > deg_g:
        raise FormatError("formal degree below the actual degree")

    f_coeffs = [f.coefficient((deg_f - i,)) for i in range(deg_f + 1)]
    g_coeffs = [g.coefficient((deg_g - i,)) for i in range(deg_g + 1)]
    return exact_determinant(sylvester_matrix(f_coeffs, g_coeffs))


def binary_discriminant(f: Polynomial) -> Fraction:
    """
    Discriminant of a binary form of degree d >= 2.

    Disc(f) = (-1)^(d(d-1)/2) * Res(df/dx0, df/dx1) / d^(d-2), the classical
    normalization: b^2 - 4ac for a*x0^2 + b*x0*x1 + c*x1^2, and
    prod_{i<j} (a_i b_j - a_j b_i)^2 for f = prod (a_i x0 + b_i x1).

    Raises:
        FormatError: not a homogeneous form of degree >= 2 in two variables
    """
    if f.nvars != 2:
        raise FormatError(f"binary form expected, got {f.nvars} variables")
    if not f.is_homogeneous():
        raise FormatError("binary discriminant needs a nonzero homogeneous form")
    d = f.total_degree()
    if d < 2:
        raise FormatError(f"binary discriminant needs degree >= 2, got {d}")

    fx0 = f.derivative(0).binary_coefficients(d - 1)
    fx1 = f.derivative(1).binary_coefficients(d - 1)
    resultant = exact_determinant(sylvester_matrix(fx0, fx1))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    value = sign * resultant / Fraction(d) ** (d - 2)
    logger.debug("binary_discriminant: degree %d, resultant %s", d, resultant)
    return value
