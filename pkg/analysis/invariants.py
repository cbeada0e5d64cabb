"""
Secant-variety invariants: flattening ranks, Strassen's degree-9 invariant
of 3x3x3 tensors and the Aronhold pfaffians of plane cubics.
"""

import logging
from fractions import Fraction
from typing import List

from algebra.matrices import ExactMatrix, block_matrix, exact_determinant, exact_rank, pfaffian
from algebra.polynomial import Polynomial
from tensors.multimatrix import MultiMatrix, flattening, symmetric_embed
from utils.errors import FormatError

logger = logging.getLogger(__name__)


def multilinear_rank(A: MultiMatrix) -> List[int]:
    """Exact rank of every flattening."""
    return [exact_rank(flattening(A, i)) for i in range(A.p + 1)]


def _check_333(A: MultiMatrix) -> None:
    if A.dims != (3, 3, 3):
        raise FormatError(f"Strassen's invariant needs format 3x3x3, got {A.format}")


def strassen_matrix(A: MultiMatrix, axis: int = 0) -> ExactMatrix:
    """
    The 9x9 block matrix [[0, A2, -A1], [-A2, 0, A0], [A1, -A0, 0]] of the
    slices A_i along `axis`. Skew-symmetric when the slices are symmetric.
    """
    _check_333(A)
    a0, a1, a2 = A.slice_matrices(axis)
    zero = ExactMatrix.zeros(3, 3)
    return block_matrix([
        [zero, a2, a1.scale(-1)],
        [a2.scale(-1), zero, a0],
        [a1, a0.scale(-1), zero],
    ])


def strassen_invariant(A: MultiMatrix, axis: int = 0) -> Fraction:
    """det of the Strassen matrix; vanishes on tensors of rank <= 4."""
    return exact_determinant(strassen_matrix(A, axis))


def strassen_axes(A: MultiMatrix) -> List[Fraction]:
    """Strassen determinants along axes 0, 1, 2. They vanish together."""
    return [strassen_invariant(A, axis) for axis in range(3)]


def aronhold_pfaffians(f: Polynomial) -> List[Fraction]:
    """
    Pfaffians of the nine 8x8 principal submatrices of the Strassen matrix of
    the symmetric tensor of a ternary cubic. All vanish exactly when f is a
    sum of three cubes (or a limit of such).
    """
    if f.nvars != 3 or not f.is_homogeneous(3):
        raise FormatError("Aronhold pfaffians need a homogeneous cubic in x0, x1, x2")
    M = strassen_matrix(symmetric_embed(f))
    values = [pfaffian(M.principal_minor(r)) for r in range(9)]
    logger.debug("aronhold pfaffians: %d nonzero", sum(1 for v in values if v))
    return values
