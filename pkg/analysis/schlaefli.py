"""
Schläfli's method: take det(x_0 A_0 + ... + x_{a-1} A_{a-1}) for the slices
A_i along the first axis, then its discriminant.

Implemented for 2 x b x b (binary discriminant), 2 x 2 x 2 (Cayley's closed
formula) and 3 x 2 x 2 (determinant of the conic).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from algebra.matrices import ExactMatrix, exact_determinant
from algebra.polynomial import Polynomial, polynomial_determinant
from algebra.resultants import binary_discriminant
from tensors.multimatrix import MultiMatrix
from utils.errors import FormatError

logger = logging.getLogger(__name__)

# det of the slice pencil, homogeneous of degree b in the a pencil variables
SliceForm = Polynomial

# Pinned constants relating these routes to Det := det d_A (boundary module):
#   cayley_3x2x2(A) = CAYLEY_3X2X2_FACTOR * Det(A)
#   det(conic_matrix_3x2x2(A)) = CONIC_FACTOR * Det(A)
#   cayley_2x2x2(A) = hyperdet_2bb(A) (factor 1)
CAYLEY_3X2X2_FACTOR = Fraction(-1)
CONIC_FACTOR = Fraction(-1, 4)


@dataclass
class SchlaefliResult:
    value: Fraction
    char_form: SliceForm
    pencil_singular: bool = False


def slice_determinant_poly(A: MultiMatrix) -> SliceForm:
    """det(sum_i x_i A_i) for A of format a x b x b, slices along the first axis."""
    if A.p != 2 or A.dims[1] != A.dims[2]:
        raise FormatError(f"slice determinant needs format a x b x b, got {A.format}")
    a, b = A.dims[0], A.dims[1]
    pencil = [
        [Polynomial.linear_form([A[i, r, c] for i in range(a)]) for c in range(b)]
        for r in range(b)
    ]
    return polynomial_determinant(pencil, a)


def schlaefli_2bb(A: MultiMatrix) -> SchlaefliResult:
    """
    Discriminant of the binary slice form of a 2 x b x b matrix.

    An identically zero slice form (singular pencil) gives value 0 with
    pencil_singular set.
    """
    if A.dims[0] != 2 or A.p != 2 or A.dims[1] != A.dims[2] or A.dims[1] < 2:
        raise FormatError(f"Schläfli's 2 x b x b route needs format 2 x b x b with b >= 2, got {A.format}")
    form = slice_determinant_poly(A)
    if form.is_zero():
        logger.info("slice form of %s vanishes identically; pencil is singular", A.format)
        return SchlaefliResult(value=Fraction(0), char_form=form, pencil_singular=True)
    return SchlaefliResult(value=binary_discriminant(form), char_form=form)


def hyperdet_2bb(A: MultiMatrix) -> Fraction:
    return schlaefli_2bb(A).value


@lru_cache(maxsize=1)
def cayley_2x2x2_polynomial() -> Polynomial:
    """
    Cayley's formula as a polynomial in a_000, a_001, ..., a_111 (variable 4i + 2j + k).

    (|a000 a011; a100 a111| + |a010 a001; a110 a101|)^2 - 4 |a000 a001; a100 a101| |a010 a011; a110 a111|
    """
    def a(i: int, j: int, k: int) -> Polynomial:
        return Polynomial.variable(8, 4 * i + 2 * j + k)

    def det2(p, q, r, s):
        return p * s - q * r

    first = det2(a(0, 0, 0), a(0, 1, 1), a(1, 0, 0), a(1, 1, 1))
    second = det2(a(0, 1, 0), a(0, 0, 1), a(1, 1, 0), a(1, 0, 1))
    left = det2(a(0, 0, 0), a(0, 0, 1), a(1, 0, 0), a(1, 0, 1))
    right = det2(a(0, 1, 0), a(0, 1, 1), a(1, 1, 0), a(1, 1, 1))
    return (first + second) ** 2 - left * right * 4


def cayley_2x2x2(A: MultiMatrix) -> Fraction:
    if A.dims != (2, 2, 2):
        raise FormatError(f"Cayley's 2x2x2 formula needs format 2x2x2, got {A.format}")
    return cayley_2x2x2_polynomial().evaluate(A.entries)


def conic_matrix_3x2x2(A: MultiMatrix) -> ExactMatrix:
    """Symmetric C with det(x_0 A_0 + x_1 A_1 + x_2 A_2) = x^t C x."""
    if A.dims != (3, 2, 2):
        raise FormatError(f"the conic route needs format 3x2x2, got {A.format}")
    form = slice_determinant_poly(A)
    C = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            exps = [0, 0, 0]
            exps[i] += 1
            exps[j] += 1
            coeff = form.coefficient(exps)
            if i == j:
                C[i][i] = coeff
            else:
                C[i][j] = C[j][i] = coeff / 2
    return ExactMatrix.from_rows(C)


def conic_determinant(A: MultiMatrix) -> Fraction:
    return exact_determinant(conic_matrix_3x2x2(A))

