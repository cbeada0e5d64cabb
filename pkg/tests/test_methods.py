import dataclasses
from fractions import Fraction

import pytest

from analysis.boundary import diagonal_tensor
from analysis.methods import METHODS, MethodEvaluator, degeneracy_report, evaluate_det
from tensors.multimatrix import MultiMatrix, PointTuple
from utils.errors import FormatError, InconsistencyError


def test_auto_runs_every_3x2x2_route(random_tensor):
    evaluation = evaluate_det(random_tensor((3, 2, 2)))
    assert evaluation.methods == ['boundary', 'cayley3x2x2', 'schlaefli-conic']
    assert evaluation.reference == 'boundary'
    assert evaluation.raw['cayley3x2x2'] == -evaluation.value
    assert evaluation.raw['schlaefli-conic'] == -evaluation.value / 4


def test_2x2x2_diagonal():
    A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})
    evaluation = evaluate_det(A)
    assert evaluation.methods == ['schlaefli', 'cayley2x2x2']
    assert evaluation.value == 1
    assert not evaluation.degenerate


@pytest.mark.parametrize("dims,methods", [
    ((2, 3, 3), ['schlaefli']),
    ((4, 3, 2), ['boundary']),
    ((2, 2, 3), ['boundary']),
    ((3, 3), ['boundary']),
])
def test_routes_by_format(dims, methods, random_tensor):
    assert evaluate_det(random_tensor(dims)).methods == methods


def test_zero_slice_is_degenerate(random_tensor):
    A = random_tensor((3, 2, 2))
    array = A.array.copy()
    array[1] = 0
    evaluation = evaluate_det(MultiMatrix.from_array(array))
    assert evaluation.value == 0
    assert evaluation.degenerate


def test_family_selection():
    A = diagonal_tensor((3, 2, 2), [1, 1, 1, 1])
    assert evaluate_det(A, 'cayley').methods == ['cayley3x2x2']
    assert evaluate_det(A, 'schlaefli').methods == ['schlaefli-conic']
    assert evaluate_det(A, 'boundary').value == -1


def test_unsupported_formats():
    with pytest.raises(FormatError):
        evaluate_det(MultiMatrix.zeros((3, 3, 3)))
    with pytest.raises(FormatError):
        evaluate_det(MultiMatrix.zeros((4, 3, 2)), 'schlaefli')
    with pytest.raises(FormatError):
        MethodEvaluator('numeric')


def test_disagreement_is_reported(monkeypatch):
    wrong = dataclasses.replace(METHODS['cayley3x2x2'], factor=Fraction(1))
    monkeypatch.setitem(METHODS, 'cayley3x2x2', wrong)
    with pytest.raises(InconsistencyError):
        evaluate_det(diagonal_tensor((3, 2, 2), [1, 1, 1, 1]))


def test_evaluation_frame():
    evaluation = evaluate_det(diagonal_tensor((3, 2, 2), [2, 1, 1, 1]))
    frame = evaluation.to_dataframe()
    assert list(frame.columns) == ['method', 'raw', 'factor', 'normalized']
    assert list(frame['method']) == evaluation.methods
    assert (frame['normalized'] == evaluation.value).all()
    record = evaluation.to_dict()
    assert record['value'] == '-4'
    assert record['raw']['schlaefli-conic'] == '1'


class TestDegeneracyReport:

    def test_certificate(self):
        A = MultiMatrix.from_dict((2, 2, 2), {(1, 1, 0): 1, (1, 0, 1): 2, (0, 1, 1): 3, (1, 1, 1): 4})
        report = degeneracy_report(A, PointTuple(([1, 0], [1, 0], [1, 0])))
        assert report == {'format': [2, 2, 2], 'degenerate': True, 'method': 'kernel', 'certificate_valid': True}

    def test_failed_certificate_is_inconclusive(self):
        A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})
        report = degeneracy_report(A, PointTuple(([1, 0], [1, 0], [1, 0])))
        assert report['degenerate'] is None
        assert not report['certificate_valid']

    def test_falls_back_to_det(self):
        report = degeneracy_report(diagonal_tensor((3, 2, 2), [1, 2, 3, 4]))
        assert report['method'] == 'det'
        assert report['degenerate'] is False
        assert report['value'] == '-96'

    def test_certificate_works_without_a_det_route(self):
        # no Det route covers 3x3x3, but a kernel point still certifies
        A = MultiMatrix.from_dict((3, 3, 3), {(1, 1, 1): 1, (2, 2, 2): 1})
        report = degeneracy_report(A, PointTuple(([1, 0, 0], [1, 0, 0], [1, 0, 0])))
        assert report['degenerate'] is True
        with pytest.raises(FormatError):
            degeneracy_report(A)
