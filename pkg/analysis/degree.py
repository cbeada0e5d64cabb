"""
Existence and degree arithmetic for hyperdeterminants.

The degree N(k_0, ..., k_p) is the coefficient of z_0^k_0 ... z_p^k_p in
1 / (1 - sum_{i=2}^{p+1} (i-1) e_i(z))^2, with e_i the elementary
symmetric functions.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial, prod
from typing import Iterable, List, Sequence, Tuple

import pandas as pd

from algebra.polynomial import Polynomial, polynomial_sum, series_inverse_square
from data.cache_manager import cached
from tensors.multimatrix import Format, as_format, multinomial
from utils.errors import FormatError, InconsistencyError

logger = logging.getLogger(__name__)


@dataclass
class FormatClass:
    """Existence/boundary classification of a format."""
    format: Format
    exists: bool
    boundary: bool
    N: int
    slice_degrees: List[int] = field(default_factory=list)
    zero_degenerate_codimension: int = 0

    def to_dict(self) -> dict:
        return {
            'format': list(self.format.dims),
            'exists': self.exists,
            'boundary': self.boundary,
            'N': self.N,
            'slice_degrees': self.slice_degrees,
            'zero_degenerate_codimension': self.zero_degenerate_codimension,
        }


def _sorted_ks(fmt: Format) -> Tuple[int, ...]:
    return tuple(sorted(fmt.ks, reverse=True))


def elementary_symmetric(nvars: int, degree: int) -> Polynomial:
    terms = {}
    for chosen in combinations(range(nvars), degree):
        exps = [0] * nvars
        for i in chosen:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Polynomial(nvars, terms)


def degree_generating_base(nvars: int) -> Polynomial:
    """sum_{i=2}^{nvars} (i-1) e_i(z_0..z_{nvars-1})."""
    return polynomial_sum((elementary_symmetric(nvars, i) * (i - 1) for i in range(2, nvars + 1)), nvars)


def _series_coefficient(ks: Tuple[int, ...]) -> int:
    base = degree_generating_base(len(ks))
    series = series_inverse_square(base, sum(ks), bounds=ks)
    value = series.coefficient(ks)
    if value.denominator != 1:
        raise InconsistencyError(f"non-integral degree coefficient {value} for k = {ks}")
    return int(value)


def hyperdet_degree(fmt) -> int:
    """
    Degree N of the hyperdeterminant of the given format.

    Returns 0 when the hyperdeterminant does not exist. Results are memoized
    by the sorted k vector (the series is symmetric).
    """
    fmt = as_format(fmt)
    ks = _sorted_ks(fmt)
    if ks[0] > sum(ks[1:]):
        return 0
    return int(cached('degree', {'ks': list(ks)}, lambda: _series_coefficient(ks)))


def classify(fmt) -> FormatClass:
    fmt = as_format(fmt)
    exists = fmt.has_hyperdeterminant
    N = hyperdet_degree(fmt) if exists else 0
    return FormatClass(
        format=fmt,
        exists=exists,
        boundary=fmt.is_boundary,
        N=N,
        slice_degrees=[slice_degree(fmt, axis) for axis in range(len(fmt))] if exists else [],
        zero_degenerate_codimension=zero_degenerate_codimension(fmt),
    )


def boundary_degree(fmt) -> int:
    """(k_0 + 1)! / (k_1! ... k_p!) with k_0 the largest."""
    fmt = as_format(fmt)
    if not fmt.is_boundary:
        raise FormatError(f"format {fmt} is not a boundary format")
    ks = _sorted_ks(fmt)
    return factorial(ks[0] + 1) // prod(factorial(k) for k in ks[1:])


def slice_degree(fmt, axis: int) -> int:
    """Degree of the hyperdeterminant in the entries of one slice along `axis`: N / dims[axis]."""
    fmt = as_format(fmt)
    if not 0 <= axis < len(fmt):
        raise FormatError(f"axis {axis} out of range for format {fmt}")
    N = hyperdet_degree(fmt)
    if N == 0:
        raise FormatError(f"format {fmt} has no hyperdeterminant")
    if N % fmt.dims[axis]:
        raise InconsistencyError(f"degree {N} not divisible by dims[{axis}] = {fmt.dims[axis]}")
    return N // fmt.dims[axis]


def swap_sign(fmt, axis: int) -> int:
    """Factor by which Det changes when two parallel slices along `axis` are swapped."""
    return -1 if slice_degree(fmt, axis) % 2 else 1


def zero_degenerate_codimension(fmt) -> int:
    """
    Codimension of the 0-degenerate matrices: 1 + k_0 - sum(k_i) when
    k_0 >= sum(k_i) (k_0 the largest), otherwise 0 since every matrix is
    0-degenerate. Equal to 1 exactly in boundary format.
    """
    ks = _sorted_ks(as_format(fmt))
    rest = sum(ks[1:])
    return 1 + ks[0] - rest if ks[0] >= rest else 0


def convolution_exponents(format_a, format_b) -> Tuple[int, int]:
    """
    Exponents (e_a, e_b) with Det(A * B) = Det(A)^e_a * Det(B)^e_b.

    e_a = multinomial(l_0; l_1..l_q), e_b = multinomial(k_0 + 1; k_1..k_{p-1}, k_p + 1)
    """
    fa, fb = as_format(format_a), as_format(format_b)
    ka, lb = fa.ks, fb.ks
    if ka[-1] != lb[0]:
        raise FormatError(f"cannot convolve {fa} with {fb}: k_p = {ka[-1]} differs from l_0 = {lb[0]}")
    e_a = multinomial(lb[0], lb[1:])
    e_b = multinomial(ka[0] + 1, list(ka[1:-1]) + [ka[-1] + 1])
    return e_a, e_b


# -----------------------------------------------------------------------------
# Degree table
# -----------------------------------------------------------------------------

TABLE_FORMATS = [
    (2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4), (2, 4, 4), (2, 4, 5),
    (3, 3, 3), (3, 3, 4), (3, 3, 5), (3, 4, 4), (3, 4, 5), (4, 4, 4),
]


def _table_row(dims: Sequence[int], formula: str) -> dict:
    fmt = Format(tuple(dims))
    return {
        'format': str(fmt),
        'N': hyperdet_degree(fmt),
        'boundary': fmt.is_boundary,
        'exists': fmt.has_hyperdeterminant,
        'formula': formula,
    }


def _build_table(b_values: List[int], a_values: List[int]) -> pd.DataFrame:
    rows = [_table_row(dims, 'series') for dims in TABLE_FORMATS]
    for b in b_values:
        rows.append(_table_row((2, b, b), f"2b(b-1) = {2 * b * (b - 1)}"))
        rows.append(_table_row((2, b, b + 1), f"b(b+1) = {b * (b + 1)}"))
    for a in a_values:
        for b in b_values:
            closed = factorial(a + b - 1) // (factorial(a - 1) * factorial(b - 1))
            rows.append(_table_row((a, b, a + b - 1), f"(a+b-1)!/((a-1)!(b-1)!) = {closed}"))
    return pd.DataFrame(rows, columns=['format', 'N', 'boundary', 'exists', 'formula'])


def degree_table(b_values: Iterable[int] = range(2, 6), a_values: Iterable[int] = range(2, 4)) -> pd.DataFrame:
    """
    The degree table for three-dimensional formats.

    Concrete rows come first, then the parametric families evaluated at the
    given parameters. Every N is computed from the series; the `formula`
    column records the closed form it should match.
    """
    b_values, a_values = list(b_values), list(a_values)
    return cached('degree_table', {'b': b_values, 'a': a_values}, lambda: _build_table(b_values, a_values))
