"""
Exact rational matrices: fraction-free determinant, rank, pfaffian.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, List, Sequence, Tuple

import numpy as np

from algebra.polynomial import as_rational, rational_str
from utils.errors import DimensionError, StructureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major matrix of Fractions."""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        values = tuple(as_rational(v) for v in self.entries)
        if len(values) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(values)}"
            )
        object.__setattr__(self, 'entries', values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'ExactMatrix':
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> 'ExactMatrix':
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'ExactMatrix':
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'ExactMatrix':
        if array.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got {array.ndim}-d")
        return cls(array.shape[0], array.shape[1], tuple(array.ravel().tolist()))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        """Object-dtype numpy view (exact entries)."""
        return np.array(self.entries, dtype=object).reshape(self.rows, self.cols)

    def to_float(self) -> np.ndarray:
        return np.array([float(v) for v in self.entries], dtype=float).reshape(self.rows, self.cols)

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix(self.cols, self.rows,
                           tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        product = self.to_array().dot(other.to_array())
        return ExactMatrix(self.rows, other.cols, tuple(product.ravel().tolist()) if product.size else ())

    def scale(self, factor) -> 'ExactMatrix':
        factor = as_rational(factor)
        return ExactMatrix(self.rows, self.cols, tuple(v * factor for v in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'ExactMatrix':
        return ExactMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def principal_minor(self, drop: int) -> 'ExactMatrix':
        """Delete row and column `drop`."""
        keep = [i for i in range(self.rows) if i != drop]
        return self.submatrix(keep, keep)

    def is_symmetric(self) -> bool:
        return self.is_square and all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def is_skew_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i, self.cols)
        )

    def to_strings(self) -> List[List[str]]:
        return [[rational_str(v) for v in r] for r in self.to_rows()]


def block_matrix(blocks: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    """Assemble a matrix from a grid of equally sized blocks."""
    grid = [[b.to_array() for b in row] for row in blocks]
    return ExactMatrix.from_array(np.block(grid))


def _integer_rows(M: ExactMatrix) -> Tuple[List[List[int]], int]:
    """Clear each row's denominators; returns the integer rows and the product of the row multipliers."""
    rows = []
    scale = 1
    for r in M.to_rows():
        multiplier = reduce(lcm, (v.denominator for v in r), 1)
        rows.append([int(v * multiplier) for v in r])
        scale *= multiplier
    return rows, scale


def exact_determinant(M: ExactMatrix) -> Fraction:
    """
    Determinant by Bareiss fraction-free elimination.

    Each row is first multiplied by the lcm of its denominators, so the
    elimination runs on Python integers; the result is divided back.

    Raises:
        DimensionError: if M is not square
    """
    if not M.is_square:
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)

    a, scale = _integer_rows(M)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // previous
            row_i[k] = 0
        previous = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def exact_rank(M: ExactMatrix) -> int:
    """
    Rank over Q by fraction-free (Bareiss) row reduction.

    Entries below the current pivot row are minors of M; the division by
    the previous pivot is exact.
    """
    a, _ = _integer_rows(M)
    rank = 0
    previous = 1
    for col in range(M.cols):
        if rank == M.rows:
            break
        pivot = next((i for i in range(rank, M.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        row_k = a[rank]
        for i in range(rank + 1, M.rows):
            factor = a[i][col]
            a[i] = [(x * p - factor * y) // previous for x, y in zip(a[i], row_k)]
        previous = p
        rank += 1
    return rank


def pfaffian(M: ExactMatrix) -> Fraction:
    """
    Pfaffian by recursive expansion along the first remaining row.

    Subproblems are keyed by the tuple of remaining indices, so each is
    solved once.

    Raises:
        StructureError: odd order or not skew-symmetric
    """
    if not M.is_square or M.rows % 2:
        raise StructureError(f"pfaffian needs an even-order square matrix, got {M.rows}x{M.cols}")
    if not M.is_skew_symmetric():
        raise StructureError("pfaffian needs a skew-symmetric matrix")

    memo: Dict[Tuple[int, ...], Fraction] = {}

    def pf(indices: Tuple[int, ...]) -> Fraction:
        if not indices:
            return Fraction(1)
        if indices in memo:
            return memo[indices]
        first, rest = indices[0], indices[1:]
        total = Fraction(0)
        for position, j in enumerate(rest):
            entry = M[first, j]
            if entry == 0:
                continue
            term = entry * pf(rest[:position] + rest[position + 1:])
            total += -term if position % 2 else term
        memo[indices] = total
        return total

    return pf(tuple(range(M.rows)))


def exact_inverse(M: ExactMatrix) -> ExactMatrix:
    """Gauss-Jordan inverse over Q."""
    if not M.is_square:
        raise DimensionError(f"inverse of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    a = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.to_rows())]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise DimensionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return ExactMatrix(n, n, tuple(v for r in a for v in r[n:]))
