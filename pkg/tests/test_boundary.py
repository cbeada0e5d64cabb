from fractions import Fraction
from itertools import product
from math import prod

import numpy as np
import pytest

from algebra.matrices import ExactMatrix, exact_determinant
from analysis.boundary import (
    build_partial_A,
    cayley_3x2x2,
    diagonal_part,
    diagonal_positions,
    diagonal_tensor,
    hyperdet_boundary,
    identity_tensor,
    is_diagonal,
    is_triangular,
    sym_basis,
    symmetric_degrees,
)
from analysis.degree import hyperdet_degree, swap_sign
from tensors.multimatrix import MultiMatrix, convolve, multilinear_apply, swap_slices
from utils.errors import FormatError, SizeError


def test_partial_A_of_3x2x2_entry_by_entry():
    # distinct values so every position of d_A names one entry of A
    A = MultiMatrix.from_array(np.arange(1, 13).reshape(3, 2, 2))

    def a(i, j, k):
        return A[i, j, k]

    expected = [
        [a(0, 0, 0), a(1, 0, 0), a(2, 0, 0), 0, 0, 0],
        [a(0, 0, 1), a(1, 0, 1), a(2, 0, 1), 0, 0, 0],
        [a(0, 1, 0), a(1, 1, 0), a(2, 1, 0), a(0, 0, 0), a(1, 0, 0), a(2, 0, 0)],
        [a(0, 1, 1), a(1, 1, 1), a(2, 1, 1), a(0, 0, 1), a(1, 0, 1), a(2, 0, 1)],
        [0, 0, 0, a(0, 1, 0), a(1, 1, 0), a(2, 1, 0)],
        [0, 0, 0, a(0, 1, 1), a(1, 1, 1), a(2, 1, 1)],
    ]
    assert build_partial_A(A).to_rows() == expected


def test_partial_A_of_a_matrix_is_its_transpose(random_tensor):
    A = random_tensor((3, 3))
    assert build_partial_A(A) == ExactMatrix.from_array(A.array).transpose()
    assert hyperdet_boundary(A) == exact_determinant(ExactMatrix.from_array(A.array))


@pytest.mark.parametrize("dims", [(3, 2, 2), (4, 3, 2), (5, 3, 3), (4, 2, 2, 2), (5, 4, 2)])
def test_partial_A_is_square_of_degree_size(dims):
    basis = sym_basis(dims)
    assert basis.size == hyperdet_degree(dims)
    assert len(basis.source) == len(basis.target)


def test_symmetric_degrees():
    assert symmetric_degrees((2, 1), (1, 2)) == (1, 0)
    assert symmetric_degrees((2, 1), (2, 1)) == (0, 2)
    assert symmetric_degrees((1, 1, 1), (1, 2, 3)) == (2, 1, 0)


def test_sym_basis_rejects_other_formats():
    with pytest.raises(FormatError):
        sym_basis((2, 2, 2))
    with pytest.raises(FormatError):
        sym_basis((2, 2, 3))
    with pytest.raises(FormatError):
        sym_basis((3, 2, 2), factor_order=(1, 1))


def test_size_cap(monkeypatch):
    monkeypatch.setenv('HYPERDET_MAX_BOUNDARY_N', '5')
    with pytest.raises(SizeError):
        hyperdet_boundary(MultiMatrix.zeros((3, 2, 2)))


def test_diagonal_3x2x2_monomial():
    p, q, r, s = 2, 3, 5, 7
    A = MultiMatrix.from_dict((3, 2, 2), {(0, 0, 0): p, (1, 0, 1): q, (1, 1, 0): r, (2, 1, 1): s})
    assert is_diagonal(A)
    assert hyperdet_boundary(A) == -p * p * q * r * s * s
    assert cayley_3x2x2(A) == p * p * q * r * s * s


def test_diagonal_3x2x2_monomial_on_a_full_grid():
    # agreement on 7 points per variable identifies polynomials of degree <= 6 in each variable
    grid = range(-3, 4)
    for p, q, r, s in product(grid, repeat=4):
        A = MultiMatrix.from_dict((3, 2, 2), {(0, 0, 0): p, (1, 0, 1): q, (1, 1, 0): r, (2, 1, 1): s})
        assert hyperdet_boundary(A) == -p * p * q * r * s * s


def test_diagonal_3x2x2_monomial_with_fractions(rng):
    for _ in range(20):
        numerators, denominators = rng.integers(-9, 10, size=4), rng.integers(1, 6, size=4)
        p, q, r, s = (Fraction(int(n), int(d)) for n, d in zip(numerators, denominators))
        A = diagonal_tensor((3, 2, 2), [p, q, r, s])
        assert hyperdet_boundary(A) == -p * p * q * r * s * s


def test_cayley_3x2x2_is_minus_det(random_tensor):
    for _ in range(50):
        A = random_tensor((3, 2, 2))
        assert cayley_3x2x2(A) == -hyperdet_boundary(A)


@pytest.mark.parametrize("dims", [(2, 2), (3, 3), (3, 2, 2), (2, 2, 3), (4, 3, 2), (2, 3, 4), (5, 4, 2), (4, 2, 2, 2)])
def test_identity_is_unimodular(dims):
    I = identity_tensor(dims)
    assert is_diagonal(I)
    assert abs(hyperdet_boundary(I)) == 1


def test_largest_axis_may_come_last(random_tensor):
    A = random_tensor((3, 2, 2))
    moved = MultiMatrix.from_array(np.moveaxis(A.array, 0, 2))
    assert moved.dims == (2, 2, 3)
    assert hyperdet_boundary(moved) == hyperdet_boundary(A)


def test_factor_order_changes_det_by_a_fixed_sign(random_tensor):
    ratios = set()
    for _ in range(5):
        A = random_tensor((4, 3, 2))
        default = hyperdet_boundary(A)
        if default == 0:
            continue
        ratios.add(hyperdet_boundary(A, factor_order=(2, 1)) / default)
    assert len(ratios) == 1
    assert abs(ratios.pop()) == 1


@pytest.mark.parametrize("dims", [(3, 2, 2), (4, 3, 2)])
def test_covariance(dims, random_tensor, random_invertible):
    A = random_tensor(dims)
    g = [random_invertible(d) for d in dims]
    N = hyperdet_degree(dims)
    factor = prod(exact_determinant(gi) ** (N // d) for gi, d in zip(g, dims))
    assert hyperdet_boundary(multilinear_apply(A, g)) == hyperdet_boundary(A) * factor


@pytest.mark.parametrize("axis", [0, 1, 2])
def test_swapping_parallel_slices(axis, random_tensor):
    A = random_tensor((3, 2, 2))
    assert hyperdet_boundary(swap_slices(A, axis, 0, 1)) == swap_sign((3, 2, 2), axis) * hyperdet_boundary(A)


@pytest.mark.parametrize("axis", [0, 1, 2])
def test_proportional_slices_are_degenerate(axis, random_tensor):
    A = random_tensor((3, 2, 2))
    array = np.array(A.array)
    first = np.take(array, 0, axis=axis)
    index = [slice(None)] * 3
    index[axis] = 1
    array[tuple(index)] = first * 3
    assert hyperdet_boundary(MultiMatrix.from_array(array)) == 0


def test_cauchy_binet(random_tensor):
    for _ in range(20):
        A = random_tensor((3, 2, 2))
        B = random_tensor((2, 2))
        assert hyperdet_boundary(convolve(A, B)) == hyperdet_boundary(A) * hyperdet_boundary(B) ** 3


def _upper_position(index, dims):
    big = dims.index(max(dims))
    return index[big] < sum(index) - index[big]


def test_triangular_det_equals_diagonal_det(rng):
    for dims in [(3, 2, 2), (4, 3, 2), (2, 2, 3)]:
        entries = {index: int(rng.integers(1, 6)) for index in diagonal_positions(dims)}
        for index in np.ndindex(*dims):
            if _upper_position(index, dims):
                entries[index] = int(rng.integers(-4, 5))
        A = MultiMatrix.from_dict(dims, entries)
        assert is_triangular(A)
        assert hyperdet_boundary(A) == hyperdet_boundary(diagonal_part(A)) != 0


def test_diagonal_tensor_constructor():
    A = diagonal_tensor((3, 2, 2), [1, 2, 3, 4])
    assert A.nonzero() == {(0, 0, 0): 1, (1, 0, 1): 2, (1, 1, 0): 3, (2, 1, 1): 4}
    with pytest.raises(FormatError):
        diagonal_tensor((3, 2, 2), [1, 2])
    with pytest.raises(FormatError):
        identity_tensor((2, 2, 2))


def test_triangularity_checks():
    A = MultiMatrix.from_dict((3, 2, 2), {(0, 0, 0): 1, (1, 0, 0): 1})
    assert not is_triangular(A)
    assert not is_diagonal(A)
    B = MultiMatrix.from_dict((3, 2, 2), {(0, 0, 0): 1, (0, 1, 1): Fraction(1, 2)})
    assert is_triangular(B)
    assert diagonal_part(B).nonzero() == {(0, 0, 0): 1}
