import dataclasses
import json
from fractions import Fraction

import pytest

from analysis.boundary import diagonal_tensor
from analysis.methods import METHODS
from cli.main import main
from data.documents import read_tensor, write_point_tuple, write_tensor
from tensors.multimatrix import MultiMatrix, PointTuple


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out) if code == 0 else captured.err


@pytest.fixture
def tensor_file(tmp_path):
    def make(A: MultiMatrix, name: str = "tensor.json") -> str:
        path = tmp_path / name
        write_tensor(A, path)
        return str(path)
    return make


class TestDegree:

    def test_boundary_format(self, capsys):
        code, out = run(capsys, 'degree', '3', '2', '2')
        assert code == 0
        assert out['N'] == 6
        assert out['boundary'] and out['exists']

    def test_missing_hyperdeterminant(self, capsys):
        code, out = run(capsys, 'degree', '5', '2', '2')
        assert code == 0
        assert out['exists'] is False
        assert out['N'] == 0

    def test_malformed_format(self, capsys):
        code, err = run(capsys, 'degree', '3', 'x')
        assert code == 2
        assert 'FormatError' in err

    def test_table(self, capsys):
        code, out = run(capsys, 'table', '--b-max', '3', '--a-max', '2')
        assert code == 0
        rows = {row['format']: row['N'] for row in out['rows']}
        assert rows['2x2x2'] == 4
        assert rows['3x3x3'] == 36


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(['no-such-command']) == 1
    assert main(['det']) == 1
    assert main(['blocks', '--kronecker', '2', '3', '--kac', '2', '2', '3']) == 1
    capsys.readouterr()


class TestDet:

    def test_diagonal_3x2x2(self, capsys, tensor_file):
        code, out = run(capsys, 'det', tensor_file(diagonal_tensor((3, 2, 2), [1, 2, 3, 4])))
        assert code == 0
        assert out['value'] == '-96'
        assert out['methods'] == ['boundary', 'cayley3x2x2', 'schlaefli-conic']
        assert out['raw']['cayley3x2x2'] == '96'
        assert out['agree'] is True

    def test_single_method(self, capsys, tensor_file):
        path = tensor_file(MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1}))
        code, out = run(capsys, 'det', path, '--method', 'cayley')
        assert code == 0
        assert out['methods'] == ['cayley2x2x2']
        assert out['value'] == '1'

    def test_unsupported_format(self, capsys, tensor_file):
        code, err = run(capsys, 'det', tensor_file(MultiMatrix.zeros((3, 3, 3))))
        assert code == 2
        assert '3x3x3' in err

    def test_size_cap(self, capsys, tensor_file, monkeypatch):
        monkeypatch.setenv('HYPERDET_MAX_BOUNDARY_N', '10')
        code, _ = run(capsys, 'det', tensor_file(MultiMatrix.zeros((4, 3, 2))))
        assert code == 2

    def test_invalid_document(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"format": [2, 2], "entries": [1, 2, 3]}')
        code, err = run(capsys, 'det', str(path))
        assert code == 3
        assert 'DocumentError' in err

    def test_inconsistency(self, capsys, tensor_file, monkeypatch):
        wrong = dataclasses.replace(METHODS['schlaefli-conic'], factor=Fraction(1))
        monkeypatch.setitem(METHODS, 'schlaefli-conic', wrong)
        code, _ = run(capsys, 'det', tensor_file(diagonal_tensor((3, 2, 2), [1, 1, 1, 1])))
        assert code == 4


class TestCheckDegenerate:

    def test_certificate(self, capsys, tensor_file, tmp_path):
        A = MultiMatrix.from_dict((3, 3, 3), {(1, 1, 1): 1, (2, 2, 2): 1})
        certificate = tmp_path / "x.json"
        write_point_tuple(PointTuple(([1, 0, 0], [1, 0, 0], [1, 0, 0])), certificate)
        code, out = run(capsys, 'check-degenerate', tensor_file(A), '--certificate', str(certificate))
        assert code == 0
        assert out['degenerate'] is True
        assert out['method'] == 'kernel'

    def test_failed_certificate_leaves_degenerate_unset(self, capsys, tensor_file, tmp_path):
        A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})
        certificate = tmp_path / "x.json"
        write_point_tuple(PointTuple(([1, 0], [1, 0], [1, 0])), certificate)
        code, out = run(capsys, 'check-degenerate', tensor_file(A), '--certificate', str(certificate))
        assert code == 0
        assert 'degenerate' not in out
        assert out['certificate_valid'] is False

    def test_det_fallback(self, capsys, tensor_file):
        A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 0): 2, (1, 1, 1): 2})
        code, out = run(capsys, 'check-degenerate', tensor_file(A))
        assert code == 0
        assert out['degenerate'] is True
        assert out['value'] == '0'


class TestPencil:

    def test_regular_pencil_with_eigenvalues(self, capsys, tensor_file):
        A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 0): 1, (1, 1, 1): 2})
        code, out = run(capsys, 'pencil', tensor_file(A), '--eigenvalues')
        assert code == 0
        assert out['regular'] is True
        assert out['char_form'] == "x0^2 + 3*x0*x1 + 2*x1^2"
        assert [z[0] for z in out['eigenvalues_approx']] == pytest.approx([1.0, 2.0])

    def test_eigenvalues_skipped_for_a_non_regular_pencil(self, capsys, tensor_file):
        A = MultiMatrix.from_dict((2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 0): 5, (1, 1, 1): 5})
        code, out = run(capsys, 'pencil', tensor_file(A), '--eigenvalues')
        assert code == 0
        assert out['regular'] is False
        assert 'eigenvalues_approx' not in out

    def test_kronecker_blocks(self, capsys):
        code, out = run(capsys, 'blocks', '--kronecker', '3', '5')
        assert code == 0
        assert out == {'kind': 'kronecker', 'n': 1, 'm': 1, 'q': 1, 'block_formats': [[2, 1, 2], [2, 2, 3]]}

    def test_kac_blocks(self, capsys):
        code, out = run(capsys, 'blocks', '--kac', '3', '3', '8')
        assert code == 0
        assert (out['n'], out['m'], out['j']) == (1, 0, 2)

    def test_block_domain_error(self, capsys):
        code, err = run(capsys, 'blocks', '--kronecker', '4', '4')
        assert code == 3
        assert 'DomainError' in err


class TestInvariants:

    def test_strassen_all_axes(self, capsys, tensor_file):
        A = MultiMatrix.outer([[1, 2, 0], [0, 1, 1], [1, 1, 1]])
        code, out = run(capsys, 'strassen', tensor_file(A), '--all-axes')
        assert code == 0
        assert out['vanishes'] is True
        assert out['axes'] == ['0', '0', '0']

    def test_strassen_wrong_format(self, capsys, tensor_file):
        code, _ = run(capsys, 'strassen', tensor_file(MultiMatrix.zeros((2, 2, 2))))
        assert code == 2

    def test_aronhold(self, capsys):
        code, out = run(capsys, 'aronhold', 'x0^3 + x1^3 + x2^3')
        assert code == 0
        assert out['all_vanish'] is True
        assert len(out['pfaffians']) == 9

    def test_aronhold_parse_error(self, capsys):
        code, err = run(capsys, 'aronhold', 'x0^3 + )')
        assert code == 2
        assert 'cannot parse' in err


class TestTensors:

    def test_flatten(self, capsys, tensor_file):
        A = MultiMatrix.outer([[1, 2], [1, 0, 1], [3, 1]])
        code, out = run(capsys, 'flatten', tensor_file(A), '1')
        assert code == 0
        assert (out['rows'], out['cols'], out['rank']) == (3, 4, 1)

    def test_flatten_bad_axis(self, capsys, tensor_file):
        code, err = run(capsys, 'flatten', tensor_file(MultiMatrix.zeros((2, 2))), '5')
        assert code == 3
        assert 'DimensionError' in err

    def test_convolve_writes_output(self, capsys, tensor_file, tmp_path):
        A = diagonal_tensor((3, 2, 2), [1, 1, 1, 1])
        B = MultiMatrix((2, 2), [0, 1, 1, 0])
        output = tmp_path / "product.json"
        code, out = run(capsys, 'convolve', tensor_file(A, "a.json"), tensor_file(B, "b.json"),
                        '--output', str(output))
        assert code == 0
        assert out['format'] == [3, 2, 2]
        # the swap matrix exchanges the two slices along the last axis
        expected = [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0]
        assert out['entries'] == expected
        assert read_tensor(output) == MultiMatrix((3, 2, 2), expected)


def test_cache_commands(capsys):
    run(capsys, 'degree', '3', '3', '3')
    code, out = run(capsys, 'cache', 'info')
    assert code == 0
    assert out['total_files'] >= 1
    code, out = run(capsys, 'cache', 'clear', '--source', 'degree')
    assert code == 0
    assert out['files_removed'] >= 1


def test_methods_listing(capsys):
    code, out = run(capsys, 'methods')
    assert code == 0
    names = [m['name'] for m in out['methods']]
    assert names == ['boundary', 'cayley3x2x2', 'schlaefli-conic', 'schlaefli', 'cayley2x2x2']
    factors = {m['name']: m['factor'] for m in out['methods']}
    assert factors['cayley3x2x2'] == '-1'
    assert factors['schlaefli-conic'] == '-1/4'


def test_log_level_option(capsys):
    code, _ = run(capsys, '--log-level', 'DEBUG', 'degree', '2', '2', '2')
    assert code == 0
