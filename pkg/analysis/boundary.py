"""
Boundary-format hyperdeterminant as an ordinary determinant.

For A of boundary format (k_0 = k_1 + ... + k_p) the map

    d_A : V_0^v (x) S^m_1 V_1 (x) ... (x) S^m_p V_p  ->  S^(m_1+1) V_1 (x) ... (x) S^(m_p+1) V_p

sends xi (x) g_1 (x) ... (x) g_p to sum_{i_1..i_p} a[xi, i_1, ..., i_p] (y_{i_1} g_1) (x) ... (x) (y_{i_p} g_p).
Det(A) is defined as det d_A for the default factor order.

Basis conventions (they fix the sign of Det):
  * monomials of one factor: itertools.combinations_with_replacement order
    (y0^2, y0 y1, y1^2, ...);
  * target: product over factors 1..p, last factor fastest;
  * source: (g_1, ..., g_p, xi) with the V_0 index fastest;
  * degrees: the last factor of `factor_order` gets m = 0 and each earlier
    one the sum of the k's after it.
With these, a 3x2x2 matrix gives V_0^v (x) V_1 -> S^2 V_1 (x) V_2 with first row
(a000, a100, a200, 0, 0, 0).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.matrices import ExactMatrix, exact_determinant
from config import get_max_boundary_n
from tensors.multimatrix import Format, MultiMatrix, as_format, flattening
from utils.errors import FormatError, InconsistencyError, SizeError

logger = logging.getLogger(__name__)

# Symmetric monomial: sorted tuple of variable indices, e.g. y0*y1^2 -> (0, 1, 1)
SymMonomial = Tuple[int, ...]


@dataclass(frozen=True)
class SymBasis:
    """Source and target bases of d_A for one format and factor order."""
    format: Format
    factor_order: Tuple[int, ...]
    degrees: Tuple[int, ...]
    source: Tuple[Tuple[Tuple[SymMonomial, ...], int], ...]
    target: Tuple[Tuple[SymMonomial, ...], ...]

    @property
    def size(self) -> int:
        return len(self.target)

    def target_index(self) -> Dict[Tuple[SymMonomial, ...], int]:
        return {key: row for row, key in enumerate(self.target)}

    def labels(self) -> Tuple[List[str], List[str]]:
        """Readable row and column labels, e.g. 'y1[0,0]*y2[1]' and 'xi2*y1[0]'."""
        def factor_text(monomials):
            parts = [f"y{t + 1}[{','.join(map(str, m))}]" for t, m in enumerate(monomials) if m]
            return "*".join(parts) or "1"
        rows = [factor_text(key) for key in self.target]
        cols = [f"xi{xi}*{factor_text(g)}" for g, xi in self.source]
        return rows, cols


def _monomials(nvars: int, degree: int) -> List[SymMonomial]:
    return list(combinations_with_replacement(range(nvars), degree))


def symmetric_degrees(ks: Sequence[int], factor_order: Sequence[int]) -> Tuple[int, ...]:
    """m_i per factor (1-based factor labels in `factor_order`); returned in natural factor order."""
    m = [0] * len(ks)
    for t, factor in enumerate(factor_order):
        m[factor - 1] = sum(ks[f - 1] for f in factor_order[t + 1:])
    return tuple(m)


def _check_order(p: int, factor_order: Optional[Sequence[int]]) -> Tuple[int, ...]:
    order = tuple(range(1, p + 1)) if factor_order is None else tuple(factor_order)
    if sorted(order) != list(range(1, p + 1)):
        raise FormatError(f"factor order must be a permutation of 1..{p}, got {list(order)}")
    return order


def boundary_view(A: MultiMatrix) -> MultiMatrix:
    """A with its largest axis moved to the front (unchanged if it already is)."""
    if not A.format.is_boundary:
        raise FormatError(f"format {A.format} is not a boundary format")
    big = A.format.largest_axis
    if big == 0:
        return A
    return MultiMatrix.from_array(np.moveaxis(A.array, big, 0))


def sym_basis(fmt, factor_order: Optional[Sequence[int]] = None) -> SymBasis:
    """
    Bases of d_A for a boundary format whose first axis is the largest.

    Raises:
        FormatError: not boundary with the largest axis first, or bad factor order
        SizeError: N above the configured cap
    """
    fmt = as_format(fmt)
    ks = fmt.ks
    if ks[0] != sum(ks[1:]):
        raise FormatError(f"format {fmt} is not a boundary format with the largest axis first")
    order = _check_order(fmt.p, factor_order)
    degrees = symmetric_degrees(ks[1:], order)

    n_target = prod(comb(m + 1 + k, k) for m, k in zip(degrees, ks[1:]))
    n_source = fmt.dims[0] * prod(comb(m + k, k) for m, k in zip(degrees, ks[1:]))
    if n_target != n_source:
        raise InconsistencyError(f"d_A is not square for {fmt}: {n_target} x {n_source}")
    cap = get_max_boundary_n()
    if n_target > cap:
        raise SizeError(f"d_A for {fmt} has size {n_target}, above the cap of {cap}")

    factor_dims = fmt.dims[1:]
    target = tuple(product(*(_monomials(d, m + 1) for d, m in zip(factor_dims, degrees))))
    source = tuple(
        (g, xi)
        for g in product(*(_monomials(d, m) for d, m in zip(factor_dims, degrees)))
        for xi in range(fmt.dims[0])
    )
    return SymBasis(format=fmt, factor_order=order, degrees=degrees, source=source, target=target)


def build_partial_A(A: MultiMatrix, factor_order: Optional[Sequence[int]] = None) -> ExactMatrix:
    """
    The N x N matrix of d_A (rows = target basis, columns = source basis).

    If the largest axis of A is not axis 0 it is moved to the front first.
    For p = 1 this is the transpose of A.
    """
    B = boundary_view(A)
    basis = sym_basis(B.format, factor_order)
    rows = basis.target_index()
    n = basis.size
    logger.debug("building d_A of size %d for format %s, degrees %s", n, B.format, basis.degrees)

    matrix = [[Fraction(0)] * n for _ in range(n)]
    support = B.nonzero()
    for col, (g, xi) in enumerate(basis.source):
        for index, value in support.items():
            if index[0] != xi:
                continue
            key = tuple(tuple(sorted(gt + (it,))) for gt, it in zip(g, index[1:]))
            matrix[rows[key]][col] += value
    return ExactMatrix.from_rows(matrix)


def hyperdet_boundary(A: MultiMatrix, factor_order: Optional[Sequence[int]] = None) -> Fraction:
    """Det(A) := det d_A; zero exactly when A is degenerate."""
    return exact_determinant(build_partial_A(A, factor_order))


def cayley_3x2x2(A: MultiMatrix) -> Fraction:
    """
    det A01 * det A10 - det A00 * det A11, where A_jk is the 3x4 flattening
    along the first axis with column jk removed.

    Equals -Det(A) under the basis conventions above.
    """
    if A.dims != (3, 2, 2):
        raise FormatError(f"Cayley's 3x2x2 formula needs format 3x2x2, got {A.format}")
    flat = flattening(A, 0)

    def minor(j: int, k: int) -> Fraction:
        keep = [c for c in range(4) if c != 2 * j + k]
        return exact_determinant(flat.submatrix([0, 1, 2], keep))

    return minor(0, 1) * minor(1, 0) - minor(0, 0) * minor(1, 1)


def _on_diagonal(index: Tuple[int, ...], big: int) -> int:
    """Sign of i_big - sum(others): 0 on the diagonal."""
    diff = index[big] - (sum(index) - index[big])
    return (diff > 0) - (diff < 0)


def identity_tensor(fmt) -> MultiMatrix:
    """a[i] = 1 when i_big equals the sum of the other indices (big = first largest axis), else 0."""
    fmt = as_format(fmt)
    if not fmt.is_boundary:
        raise FormatError(f"identity matrices need a boundary format, got {fmt}")
    big = fmt.largest_axis
    return MultiMatrix.from_function(fmt, lambda index: 1 if _on_diagonal(index, big) == 0 else 0)


def diagonal_positions(fmt) -> List[Tuple[int, ...]]:
    fmt = as_format(fmt)
    if not fmt.is_boundary:
        raise FormatError(f"diagonal matrices need a boundary format, got {fmt}")
    big = fmt.largest_axis
    return [index for index in product(*(range(d) for d in fmt.dims)) if _on_diagonal(index, big) == 0]


def diagonal_tensor(fmt, values: Sequence) -> MultiMatrix:
    """Boundary-format matrix with `values` on the diagonal (row-major order) and 0 elsewhere."""
    positions = diagonal_positions(fmt)
    if len(values) != len(positions):
        raise FormatError(f"format {as_format(fmt)} has {len(positions)} diagonal entries, got {len(values)} values")
    return MultiMatrix.from_dict(fmt, dict(zip(positions, values)))


def _boundary_axis(fmt: Format) -> int:
    if not fmt.is_boundary:
        raise FormatError(f"format {fmt} is not a boundary format")
    return fmt.largest_axis


def is_diagonal(A: MultiMatrix) -> bool:
    """Entries vanish off the diagonal, in the given bases."""
    big = _boundary_axis(A.format)
    return all(_on_diagonal(index, big) == 0 for index in A.nonzero())


def is_triangular(A: MultiMatrix) -> bool:
    """Entries with i_big > sum of the other indices vanish, in the given bases."""
    big = _boundary_axis(A.format)
    return all(_on_diagonal(index, big) <= 0 for index in A.nonzero())


def diagonal_part(A: MultiMatrix) -> MultiMatrix:
    big = _boundary_axis(A.format)
    return MultiMatrix.from_dict(A.format, {i: v for i, v in A.nonzero().items() if _on_diagonal(i, big) == 0})
