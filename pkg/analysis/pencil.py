"""
2 x k x k pencils x_0 A_0 + x_1 A_1 and block-count arithmetic for the
Kronecker and Kac decompositions.

Regularity is always decided exactly (discriminant of the characteristic
form). Eigenvalues and simultaneous diagonalization are numeric and only
reported.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from algebra.matrices import ExactMatrix, exact_determinant
from algebra.polynomial import rational_str
from algebra.resultants import binary_discriminant
from analysis.schlaefli import SliceForm, slice_determinant_poly
from config import get_tolerance
from tensors.multimatrix import MultiMatrix
from utils.errors import (
    DomainError,
    FormatError,
    InconsistencyError,
    PivotError,
    PreconditionError,
    StructureError,
)

logger = logging.getLogger(__name__)

SHIFT_HINT = "replace A0 by A0 + c*A1 for a rational c with det(A0 + c*A1) != 0"


@dataclass
class PencilReport:
    """Result of analyze_pencil."""
    char_form: SliceForm
    regular: bool
    discriminant: Fraction
    pencil_singular: bool = False
    symmetric: bool = False
    # det(A1) = 0: det(A0 + t A1) has degree < k (a root at infinity)
    degree_drop: bool = False
    eigenvalues: Optional[List[complex]] = None

    def to_dict(self) -> dict:
        report = {
            'char_form': str(self.char_form),
            'regular': self.regular,
            'discriminant': rational_str(self.discriminant),
            'pencil_singular': self.pencil_singular,
            'symmetric': self.symmetric,
            'degree_drop': self.degree_drop,
        }
        if self.eigenvalues is not None:
            report['eigenvalues_approx'] = [[float(z.real), float(z.imag)] for z in self.eigenvalues]
        return report


@dataclass
class Diagonalization:
    """C with C^t A_i C = diag(D_i) up to `residual` in max norm."""
    C: np.ndarray
    D0: np.ndarray
    D1: np.ndarray
    eigenvalues: np.ndarray
    residual: float


@dataclass
class BlockDecomposition:
    """n blocks of the first kind and m of the second; `parameter` is q (Kronecker) or j (Kac)."""
    kind: str
    n: int
    m: int
    parameter: int
    block_formats: List[Tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict:
        key = 'q' if self.kind == 'kronecker' else 'j'
        return {
            'kind': self.kind,
            'n': self.n,
            'm': self.m,
            key: self.parameter,
            'block_formats': [list(f) for f in self.block_formats],
        }


def _check_pencil(A: MultiMatrix) -> int:
    if A.p != 2 or A.dims[0] != 2 or A.dims[1] != A.dims[2] or A.dims[1] < 2:
        raise FormatError(f"pencil analysis needs format 2 x k x k with k >= 2, got {A.format}")
    return A.dims[1]


def pencil_tensor(A0: ExactMatrix, A1: ExactMatrix) -> MultiMatrix:
    """Stack two k x k slices into a 2 x k x k matrix."""
    if A0.shape != A1.shape or not A0.is_square:
        raise FormatError(f"pencil slices must be square of equal size, got {A0.shape} and {A1.shape}")
    return MultiMatrix.from_array(np.stack([A0.to_array(), A1.to_array()]))


def analyze_pencil(A: MultiMatrix, with_eigenvalues: bool = False) -> PencilReport:
    """
    Characteristic form det(x_0 A_0 + x_1 A_1) and exact regularity.

    For symmetric slices, regular <=> hyperdet_2bb(A) != 0.
    """
    k = _check_pencil(A)
    A0, A1 = A.slice_matrices(0)
    symmetric = A0.is_symmetric() and A1.is_symmetric()
    form = slice_determinant_poly(A)

    if form.is_zero():
        return PencilReport(char_form=form, regular=False, discriminant=Fraction(0),
                            pencil_singular=True, symmetric=symmetric, degree_drop=True)

    discriminant = binary_discriminant(form)
    report = PencilReport(
        char_form=form,
        regular=discriminant != 0,
        discriminant=discriminant,
        symmetric=symmetric,
        degree_drop=form.coefficient((0, k)) == 0,
    )
    if with_eigenvalues and report.regular and form.coefficient((k, 0)) != 0:
        report.eigenvalues = list(weierstrass_eigenvalues(A))
    logger.debug("pencil %s: regular=%s discriminant=%s", A.format, report.regular, discriminant)
    return report


def weierstrass_eigenvalues(A: MultiMatrix) -> np.ndarray:
    """
    Roots of det(t A_0 - A_1), i.e. the lambda_i of the Weierstrass form
    A_0 = I, A_1 = diag(lambda_1, ..., lambda_k). Numeric, sorted by real then
    imaginary part.

    Raises:
        PivotError: det(A_0) = 0
        PreconditionError: the pencil is not regular
    """
    k = _check_pencil(A)
    A0, _ = A.slice_matrices(0)
    if exact_determinant(A0) == 0:
        raise PivotError("A0 is singular; the Weierstrass form needs det(A0) != 0", hint=SHIFT_HINT)
    form = slice_determinant_poly(A)
    if binary_discriminant(form) == 0:
        raise PreconditionError("pencil is not regular: the characteristic form has a repeated root")
    # f(t, -1) = sum_i c_(k-i, i) t^(k-i) (-1)^i
    coefficients = [float(c) * (-1) ** i for i, c in enumerate(form.binary_coefficients(k))]
    roots = np.roots(coefficients)
    return np.array(sorted(roots.astype(complex), key=lambda z: (z.real, z.imag)))


def simultaneous_diagonalize(A0: ExactMatrix, A1: ExactMatrix, tol: Optional[float] = None) -> Diagonalization:
    """
    Invertible C with C^t A_i C = D_i diagonal, for a regular symmetric pencil.

    Columns of C are the generalized eigenvectors (A_1 v = lambda A_0 v), one
    per singular point of the pencil, scaled to unit norm.

    Raises:
        StructureError: non-symmetric slices
        PreconditionError: pencil not regular
        PivotError: A0 singular
        InconsistencyError: residual above tolerance
    """
    tol = get_tolerance() if tol is None else tol
    if not (A0.is_symmetric() and A1.is_symmetric()):
        raise StructureError("simultaneous diagonalization needs symmetric slices")
    report = analyze_pencil(pencil_tensor(A0, A1))
    if not report.regular:
        raise PreconditionError("pencil is not regular: the characteristic form has a repeated root")
    if exact_determinant(A0) == 0:
        raise PivotError("A0 is singular", hint=SHIFT_HINT)

    a0, a1 = A0.to_float(), A1.to_float()
    eigenvalues, vectors = scipy.linalg.eig(a1, a0)
    C = vectors / np.linalg.norm(vectors, axis=0)
    C = np.real_if_close(C, tol=1000)

    transformed = [C.T @ a @ C for a in (a0, a1)]
    diagonals = [np.diag(np.diag(t)) for t in transformed]
    residual = max(float(np.max(np.abs(t - d))) for t, d in zip(transformed, diagonals))
    logger.debug("simultaneous_diagonalize: k=%d residual=%.3e", A0.rows, residual)
    if residual > tol:
        raise InconsistencyError(f"diagonalization residual {residual:.3e} exceeds tolerance {tol:.1e}")
    return Diagonalization(
        C=C,
        D0=np.diag(transformed[0]),
        D1=np.diag(transformed[1]),
        eigenvalues=np.real_if_close(eigenvalues, tol=1000),
        residual=residual,
    )


def weierstrass_product(eigenvalues: Sequence):
    """prod_{i<j} (lambda_i - lambda_j)^2; exact for Fractions."""
    result = 1
    for x, y in combinations(eigenvalues, 2):
        result *= (x - y) ** 2
    return result


def diagonal_pair_product(lambdas: Sequence, mus: Sequence):
    """prod_{i<j} (lambda_i mu_j - lambda_j mu_i)^2 for D_0 = diag(lambda), D_1 = diag(mu)."""
    if len(lambdas) != len(mus):
        raise FormatError("diagonals of different lengths")
    result = 1
    for i, j in combinations(range(len(lambdas)), 2):
        result *= (lambdas[i] * mus[j] - lambdas[j] * mus[i]) ** 2
    return result


# -----------------------------------------------------------------------------
# Kronecker and Kac block counts
# -----------------------------------------------------------------------------

def kronecker_blocks(b: int, c: int) -> BlockDecomposition:
    """
    Unique (n, m, q) with b = nq + m(q+1) and c = n(q+1) + m(q+2).

    Blocks: n of format 2 x q x (q+1), m of format 2 x (q+1) x (q+2). Blocks
    with q = 0 have an empty dimension and are reported as formats only.
    """
    if b < 2 or b >= c:
        raise DomainError(f"Kronecker blocks need 2 <= b < c, got b={b}, c={c}")
    d = c - b
    q = b // d
    m = b - q * d
    n = d - m
    if b != n * q + m * (q + 1) or c != n * (q + 1) + m * (q + 2) or n < 0 or m < 0:
        raise InconsistencyError(f"Kronecker identities fail for b={b}, c={c}: n={n}, m={m}, q={q}")
    formats = [(2, q, q + 1)] * n + [(2, q + 1, q + 2)] * m
    return BlockDecomposition(kind='kronecker', n=n, m=m, parameter=q, block_formats=formats)


def kac_sequence(w: int, jmax: int) -> List[int]:
    """a_0 = 0, a_1 = 1, a_j = w a_{j-1} - a_{j-2}, up to a_jmax."""
    if w < 2:
        raise DomainError(f"Kac sequence needs w >= 2, got {w}")
    if jmax < 1:
        raise DomainError(f"Kac sequence needs jmax >= 1, got {jmax}")
    a = [0, 1]
    while len(a) <= jmax:
        a.append(w * a[-1] - a[-2])
    return a


def kac_blocks(w: int, s: int, t: int) -> BlockDecomposition:
    """
    Unique (n, m, j) with s = n a_j + m a_{j+1}, t = n a_{j+1} + m a_{j+2}.

    The system has determinant a_j a_{j+2} - a_{j+1}^2 = -1, so every j gives
    an integral solution; the one with n >= 1 and m >= 0 is reported.
    Blocks: n of format w x a_j x a_{j+1}, m of format w x a_{j+1} x a_{j+2}.
    """
    if not 2 <= w <= s <= t:
        raise DomainError(f"Kac blocks need 2 <= w <= s <= t, got w={w}, s={s}, t={t}")
    if t * t - w * s * t + s * s < 1:
        raise DomainError(f"Kac blocks need t^2 - wst + s^2 >= 1, got {t * t - w * s * t + s * s}")

    a = [0, 1]
    while a[-1] <= t:
        a.append(w * a[-1] - a[-2])
    a += [w * a[-1] - a[-2]]
    a += [w * a[-1] - a[-2]]

    solutions = []
    for j in range(len(a) - 2):
        if a[j] > t:
            break
        n = t * a[j + 1] - s * a[j + 2]
        m = a[j + 1] * s - a[j] * t
        if n >= 1 and m >= 0:
            solutions.append((n, m, j))

    if len(solutions) != 1:
        raise InconsistencyError(f"expected one Kac solution for w={w}, s={s}, t={t}, found {solutions}")
    n, m, j = solutions[0]
    if s != n * a[j] + m * a[j + 1] or t != n * a[j + 1] + m * a[j + 2]:
        raise InconsistencyError(f"Kac identities fail for w={w}, s={s}, t={t}: n={n}, m={m}, j={j}")
    formats = [(w, a[j], a[j + 1])] * n + [(w, a[j + 1], a[j + 2])] * m
    return BlockDecomposition(kind='kac', n=n, m=m, parameter=j, block_formats=formats)
