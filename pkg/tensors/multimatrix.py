"""
Multidimensional matrices over Q.

A MultiMatrix of format (k_0+1) x ... x (k_p+1) stores its entries
row-major with the last axis varying fastest. All operations return new
objects; an object-dtype numpy view is used for reshaping and contraction
so arithmetic stays exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from math import factorial, prod
from typing import Callable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from algebra.matrices import ExactMatrix, exact_inverse, exact_rank
from algebra.polynomial import Polynomial, as_rational, rational_str
from utils.errors import DimensionError, DomainError, FormatError

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Format:
    """Dimension vector (k_0+1, ..., k_p+1)."""
    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 2:
            raise FormatError(f"a format needs at least 2 dimensions, got {list(dims)}")
        if any(d < 1 for d in dims):
            raise FormatError(f"all dimensions must be >= 1, got {list(dims)}")
        object.__setattr__(self, 'dims', dims)

    @property
    def p(self) -> int:
        return len(self.dims) - 1

    @property
    def ks(self) -> Tuple[int, ...]:
        return tuple(d - 1 for d in self.dims)

    @property
    def size(self) -> int:
        return prod(self.dims)

    @property
    def largest_axis(self) -> int:
        """First axis of maximal dimension."""
        return self.dims.index(max(self.dims))

    @property
    def is_boundary(self) -> bool:
        ks = sorted(self.ks, reverse=True)
        return ks[0] == sum(ks[1:])

    @property
    def has_hyperdeterminant(self) -> bool:
        ks = sorted(self.ks, reverse=True)
        return ks[0] <= sum(ks[1:])

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __getitem__(self, axis: int) -> int:
        return self.dims[axis]

    def __str__(self) -> str:
        return "x".join(str(d) for d in self.dims)


def as_format(value: Union['Format', Sequence[int]]) -> Format:
    return value if isinstance(value, Format) else Format(tuple(value))


@dataclass(frozen=True)
class MultiMatrix:
    format: Format
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        fmt = as_format(self.format)
        values = tuple(as_rational(v) for v in self.entries)
        if len(values) != fmt.size:
            raise DimensionError(f"format {fmt} needs {fmt.size} entries, got {len(values)}")
        object.__setattr__(self, 'format', fmt)
        object.__setattr__(self, 'entries', values)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_array(cls, array) -> 'MultiMatrix':
        array = np.asarray(array, dtype=object)
        return cls(Format(array.shape), tuple(array.ravel().tolist()))

    @classmethod
    def zeros(cls, fmt) -> 'MultiMatrix':
        fmt = as_format(fmt)
        return cls(fmt, (0,) * fmt.size)

    @classmethod
    def from_function(cls, fmt, fn: Callable[[Tuple[int, ...]], object]) -> 'MultiMatrix':
        fmt = as_format(fmt)
        return cls(fmt, tuple(fn(index) for index in product(*(range(d) for d in fmt.dims))))

    @classmethod
    def from_dict(cls, fmt, entries: dict) -> 'MultiMatrix':
        """Sparse constructor: {index tuple: value}, everything else 0."""
        return cls.from_function(fmt, lambda index: entries.get(index, 0))

    @classmethod
    def outer(cls, vectors: Sequence[Sequence]) -> 'MultiMatrix':
        """Decomposable tensor v_0 (x) ... (x) v_p."""
        arrays = [np.array([as_rational(v) for v in vec], dtype=object) for vec in vectors]
        return cls.from_array(reduce(np.multiply.outer, arrays))

    # ------------------------------------------------------------------
    # views

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only object-dtype view shaped like the format."""
        view = np.array(self.entries, dtype=object).reshape(self.format.dims)
        view.flags.writeable = False
        return view

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.format.dims

    @property
    def p(self) -> int:
        return self.format.p

    def __getitem__(self, index: Tuple[int, ...]) -> Fraction:
        return self.array[tuple(index)]

    def indices(self) -> Iterator[Tuple[int, ...]]:
        return product(*(range(d) for d in self.dims))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero(self) -> dict:
        return {index: v for index, v in zip(self.indices(), self.entries) if v}

    # ------------------------------------------------------------------
    # arithmetic

    def scale(self, factor) -> 'MultiMatrix':
        factor = as_rational(factor)
        return MultiMatrix(self.format, tuple(v * factor for v in self.entries))

    def __add__(self, other: 'MultiMatrix') -> 'MultiMatrix':
        if other.dims != self.dims:
            raise DimensionError(f"cannot add formats {self.format} and {other.format}")
        return MultiMatrix(self.format, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'MultiMatrix') -> 'MultiMatrix':
        return self + other.scale(-1)

    def __neg__(self) -> 'MultiMatrix':
        return self.scale(-1)

    # ------------------------------------------------------------------
    # slices

    def _check_axis(self, axis: int) -> None:
        if not 0 <= axis <= self.p:
            raise DimensionError(f"axis {axis} out of range for a {self.p + 1}-dimensional matrix")

    def _check_index(self, axis: int, index: int) -> None:
        self._check_axis(axis)
        if not 0 <= index < self.dims[axis]:
            raise DimensionError(f"index {index} out of range for axis {axis} of size {self.dims[axis]}")

    def slice(self, axis: int, index: int) -> Union['MultiMatrix', Vector]:
        """
        Fix coordinate `axis` to `index`.

        Returns a MultiMatrix for p >= 2; for p = 1 the slice is a row or
        column, returned as a tuple of Fractions.
        """
        self._check_index(axis, index)
        sub = np.take(self.array, index, axis=axis)
        if sub.ndim == 1:
            return tuple(sub.tolist())
        return MultiMatrix.from_array(sub)

    def slice_matrices(self, axis: int = 0) -> List[ExactMatrix]:
        """All slices along `axis` of a 3-dimensional matrix, as ExactMatrix."""
        if self.p != 2:
            raise FormatError(f"slice matrices need a 3-dimensional matrix, got format {self.format}")
        self._check_axis(axis)
        return [ExactMatrix.from_array(np.take(self.array, i, axis=axis)) for i in range(self.dims[axis])]

    def __str__(self) -> str:
        return f"MultiMatrix({self.format}: [{', '.join(rational_str(v) for v in self.entries)}])"


@dataclass(frozen=True)
class PointTuple:
    """Vectors x^0, ..., x^p; each must be nonzero."""
    vectors: Tuple[Vector, ...]

    def __post_init__(self):
        vectors = tuple(tuple(as_rational(v) for v in vec) for vec in self.vectors)
        for i, vec in enumerate(vectors):
            if not any(vec):
                raise DomainError(f"vector {i} of the point tuple is zero")
        object.__setattr__(self, 'vectors', vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def dims(self) -> Tuple[int, ...]:
        return tuple(len(v) for v in self.vectors)


# ----------------------------------------------------------------------
# operations


def swap_slices(A: MultiMatrix, axis: int, j1: int, j2: int) -> MultiMatrix:
    A._check_index(axis, j1)
    A._check_index(axis, j2)
    if j1 == j2:
        raise DimensionError(f"swap needs two distinct indices, got {j1} twice")
    order = list(range(A.dims[axis]))
    order[j1], order[j2] = j2, j1
    return MultiMatrix.from_array(np.take(A.array, order, axis=axis))


def flattening(A: MultiMatrix, i: int) -> ExactMatrix:
    """
    Matrix of the contraction map C_i(A).

    Shape dims[i] x prod(dims[j], j != i); columns run over the remaining
    axes in row-major order.
    """
    A._check_axis(i)
    moved = np.moveaxis(A.array, i, 0)
    return ExactMatrix.from_array(moved.reshape(A.dims[i], -1))


def is_decomposable(A: MultiMatrix) -> bool:
    """
    True iff A = v_0 (x) ... (x) v_p, i.e. every flattening has rank <= 1.

    Checking all axes but one would suffice; all are checked.

    Raises:
        DomainError: for the zero tensor
    """
    if A.is_zero():
        raise DomainError("decomposability is only defined for nonzero tensors")
    return all(exact_rank(flattening(A, i)) <= 1 for i in range(A.p + 1))


def _act_on_axis(array: np.ndarray, g: np.ndarray, axis: int) -> np.ndarray:
    # c[.., j, ..] = sum_h a[.., h, ..] g[h, j]
    moved = np.tensordot(array, g, axes=([axis], [0]))
    return np.moveaxis(moved, -1, axis)


def multilinear_apply(A: MultiMatrix, g: Sequence[ExactMatrix]) -> MultiMatrix:
    """
    Change of basis g[i] on every axis i (right action).

    Entries transform as c[.., j, ..] = sum_h a[.., h, ..] * g[i][h, j], so
    apply(apply(A, g), h) == apply(A, [g_i @ h_i]).
    """
    if len(g) != A.p + 1:
        raise DimensionError(f"need {A.p + 1} matrices, got {len(g)}")
    array = A.array
    for axis, gi in enumerate(g):
        if gi.shape != (A.dims[axis], A.dims[axis]):
            raise DimensionError(f"g[{axis}] is {gi.rows}x{gi.cols}, expected {A.dims[axis]}x{A.dims[axis]}")
        array = _act_on_axis(array, gi.to_array(), axis)
    return MultiMatrix.from_array(array)


def contragredient_point(x: PointTuple, g: Sequence[ExactMatrix]) -> PointTuple:
    """Transform a point so that kernel_check(apply(A, g), x') == kernel_check(A, x): x'^i = g_i^{-1} x^i."""
    vectors = []
    for gi, vec in zip(g, x.vectors):
        inverse = exact_inverse(gi)
        vectors.append(tuple(inverse.to_array().dot(np.array(vec, dtype=object)).tolist()))
    return PointTuple(tuple(vectors))


def _boundary_first(fmt: Format) -> bool:
    return fmt.ks[0] == sum(fmt.ks[1:])


def convolve(A: MultiMatrix, B: MultiMatrix) -> MultiMatrix:
    """
    A * B: contract the last axis of A with the first axis of B.

    Both inputs must be of boundary format with the largest axis first
    (k_0 = sum of the other k_i); the result is again of that kind.
    """
    for name, M in (('A', A), ('B', B)):
        if not _boundary_first(M.format):
            raise FormatError(f"{name} of format {M.format} is not of boundary format with the largest axis first")
    if A.dims[-1] != B.dims[0]:
        raise DimensionError(f"last dimension of A ({A.dims[-1]}) differs from first dimension of B ({B.dims[0]})")
    result = np.tensordot(A.array, B.array, axes=([A.p], [0]))
    return MultiMatrix.from_array(result)


def _check_point(A: MultiMatrix, x: PointTuple) -> None:
    if x.dims() != A.dims:
        raise DimensionError(f"point dimensions {list(x.dims())} do not match format {A.format}")


def contract(A: MultiMatrix, x: PointTuple, skip: int) -> Vector:
    """A(x^0, ..., V_skip, ..., x^p): contract every axis except `skip`."""
    _check_point(A, x)
    array = A.array
    # contract from the last axis so earlier axis numbers stay valid
    for axis in range(A.p, -1, -1):
        if axis == skip:
            continue
        array = np.tensordot(array, np.array(x.vectors[axis], dtype=object), axes=([axis], [0]))
    return tuple(array.tolist())


def multilinear_form(A: MultiMatrix, x: PointTuple) -> Fraction:
    """Full contraction A(x^0, ..., x^p)."""
    head = contract(A, x, 0)
    return sum((a * b for a, b in zip(head, x.vectors[0])), Fraction(0))


def kernel_check(A: MultiMatrix, x: PointTuple) -> bool:
    """True iff x^0 (x) ... (x) x^p lies in the kernel K(A), certifying A degenerate."""
    _check_point(A, x)
    for i in range(A.p + 1):
        if any(contract(A, x, i)):
            return False
    return True


def multinomial(total: int, parts: Sequence[int]) -> int:
    return factorial(total) // prod(factorial(k) for k in parts)


def symmetric_embed(f: Polynomial) -> MultiMatrix:
    """
    Symmetric tensor of a form of degree d >= 2 in n+1 variables.

    a[i_1..i_d] = coeff(f, x_{i_1}...x_{i_d}) / multinomial, so that the full
    contraction A(x, ..., x) equals f(x).
    """
    if not f.is_homogeneous():
        raise FormatError("symmetric embedding needs a nonzero homogeneous form")
    d = f.total_degree()
    if d < 2:
        raise FormatError(f"symmetric embedding needs degree >= 2, got {d}")
    n1 = f.nvars

    def entry(index: Tuple[int, ...]) -> Fraction:
        exps = [0] * n1
        for i in index:
            exps[i] += 1
        return f.coefficient(exps) / multinomial(d, exps)

    return MultiMatrix.from_function((n1,) * d, entry)
