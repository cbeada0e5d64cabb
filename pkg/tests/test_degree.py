from itertools import product
from math import factorial, prod

import pytest

from analysis.degree import (
    boundary_degree,
    classify,
    convolution_exponents,
    degree_table,
    hyperdet_degree,
    slice_degree,
    swap_sign,
    zero_degenerate_codimension,
)
from data import cache_manager
from tensors.multimatrix import Format
from utils.errors import FormatError

TABLE = {
    (2, 2, 2): 4, (2, 2, 3): 6, (2, 3, 3): 12, (2, 3, 4): 12, (2, 4, 4): 24, (2, 4, 5): 20,
    (3, 3, 3): 36, (3, 3, 4): 48, (3, 3, 5): 30, (3, 4, 4): 108, (3, 4, 5): 120, (4, 4, 4): 272,
}


@pytest.mark.parametrize("dims,N", TABLE.items())
def test_degree_table_rows(dims, N):
    assert hyperdet_degree(dims) == N


def test_degree_is_symmetric_in_the_format():
    assert hyperdet_degree((3, 2, 2)) == hyperdet_degree((2, 3, 2)) == hyperdet_degree((2, 2, 3)) == 6


@pytest.mark.parametrize("b", range(2, 6))
def test_parametric_families(b):
    assert hyperdet_degree((2, b, b)) == 2 * b * (b - 1)
    assert hyperdet_degree((2, b, b + 1)) == b * (b + 1)
    for a in (2, 3):
        c = a + b - 1
        assert hyperdet_degree((a, b, c)) == factorial(c) // (factorial(a - 1) * factorial(b - 1))


def test_matrices_have_degree_n():
    for n in range(1, 6):
        assert hyperdet_degree((n, n)) == n
    assert hyperdet_degree((2, 3)) == 0


def test_degree_of_2x2x2x2():
    assert hyperdet_degree((2, 2, 2, 2)) == 24


def test_missing_hyperdeterminant_has_degree_zero():
    assert hyperdet_degree((5, 2, 2)) == 0
    report = classify((5, 2, 2))
    assert not report.exists
    assert report.N == 0
    assert report.slice_degrees == []


def test_every_small_boundary_format_matches_the_closed_form():
    for dims in product(range(1, 6), repeat=3):
        fmt = Format(dims)
        if fmt.is_boundary:
            ks = sorted(fmt.ks, reverse=True)
            closed = factorial(ks[0] + 1) // prod(factorial(k) for k in ks[1:])
            assert hyperdet_degree(fmt) == boundary_degree(fmt) == closed


def test_boundary_degree_rejects_other_formats():
    with pytest.raises(FormatError):
        boundary_degree((2, 2, 2))


def test_classify_boundary_format():
    report = classify((3, 2, 2))
    assert report.exists and report.boundary
    assert report.N == 6
    assert report.slice_degrees == [2, 3, 3]
    assert report.zero_degenerate_codimension == 1
    assert report.to_dict()['format'] == [3, 2, 2]


def test_slice_degree_and_swap_sign():
    assert slice_degree((2, 2, 2), 0) == 2
    assert swap_sign((2, 2, 2), 0) == 1
    assert swap_sign((3, 2, 2), 0) == 1
    assert swap_sign((3, 2, 2), 1) == -1
    with pytest.raises(FormatError):
        slice_degree((5, 2, 2), 0)


def test_zero_degenerate_codimension():
    assert zero_degenerate_codimension((3, 2, 2)) == 1
    assert zero_degenerate_codimension((5, 2, 2)) == 3
    assert zero_degenerate_codimension((2, 2, 2)) == 0


def test_convolution_exponents():
    assert convolution_exponents((3, 2, 2), (2, 2)) == (1, 3)
    with pytest.raises(FormatError):
        convolution_exponents((3, 2, 2), (3, 3))


def test_degree_table_frame():
    table = degree_table()
    assert list(table.columns) == ['format', 'N', 'boundary', 'exists', 'formula']
    rows = dict(zip(table['format'], table['N']))
    assert rows['4x4x4'] == 272
    assert rows['2x5x5'] == 40
    assert table.loc[table['format'] == '2x2x3', 'boundary'].iloc[0]


def test_degree_is_cached():
    hyperdet_degree((3, 3, 3))
    info = cache_manager.get_cache_info()
    assert info['memory_entries'] >= 1
    assert info['total_files'] >= 1
    assert hyperdet_degree((3, 3, 3)) == 36


def test_cache_can_be_disabled(monkeypatch):
    monkeypatch.setenv('HYPERDET_CACHE', '0')
    assert hyperdet_degree((2, 3, 3)) == 12
    assert cache_manager.get_cache_info()['total_files'] == 0
