import json
from fractions import Fraction

import pytest

from cli.schemas import TensorDocument, fraction_to_entry
from data.documents import (
    dumps_canonical,
    parse_tensor,
    read_point_tuple,
    read_tensor,
    tensor_to_document,
    write_point_tuple,
    write_tensor,
)
from tensors.multimatrix import MultiMatrix, PointTuple
from utils.errors import DocumentError, DomainError


def test_read_write_read_is_byte_stable(tmp_path):
    source = tmp_path / "a.json"
    source.write_text('{"entries": [1, "-2/4", 0, "3", 5, 6, 7, 8, 9, 10, 11, 12], "format": [3, 2, 2]}')
    A = read_tensor(source)
    assert A[0, 0, 1] == Fraction(-1, 2)
    assert A[0, 1, 1] == 3

    first, second = tmp_path / "b.json", tmp_path / "c.json"
    write_tensor(A, first)
    write_tensor(read_tensor(first), second)
    assert first.read_bytes() == second.read_bytes()
    assert read_tensor(second) == A


def test_canonical_layout():
    A = MultiMatrix((2, 2), [1, Fraction(1, 3), -2, Fraction(4, 2)])
    text = dumps_canonical(tensor_to_document(A))
    assert text.endswith("}\n")
    assert json.loads(text) == {"entries": [1, "1/3", -2, 2], "format": [2, 2]}
    assert text.index('"entries"') < text.index('"format"')


def test_fraction_to_entry():
    assert fraction_to_entry(Fraction(6, 3)) == 2
    assert fraction_to_entry(Fraction(-3, 6)) == "-1/2"


@pytest.mark.parametrize("text", [
    '{"format": [2, 2], "entries": [1, 2, 3]}',
    '{"format": [2], "entries": [1, 2]}',
    '{"format": [2, 0], "entries": []}',
    '{"format": [2, 2], "entries": [1, 2, 3, 1.5]}',
    '{"format": [2, 2], "entries": [1, 2, 3, "1/0"]}',
    '{"format": [2, 2], "entries": [1, 2, 3, "x"]}',
    '{"format": [2, 2], "entries": [1, 2, 3, true]}',
    '{"format": [2, 2], "entries": [1, 2, 3, 4], "extra": 1}',
    '{"format": [2, 2], "entries": [1, 2, 3, 4',
])
def test_invalid_documents(text):
    with pytest.raises(DocumentError):
        parse_tensor(text)


def test_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        read_tensor(tmp_path / "missing.json")


def test_document_model_accepts_rationals():
    document = TensorDocument(format=[1, 2], entries=["7/2", -1])
    assert document.entries == ["7/2", -1]


def test_point_tuple_documents(tmp_path):
    x = PointTuple(([1, Fraction(1, 2)], [0, 0, -3]))
    path = tmp_path / "x.json"
    write_point_tuple(x, path)
    assert json.loads(path.read_text()) == {"vectors": [[1, "1/2"], [0, 0, -3]]}
    assert read_point_tuple(path) == x


def test_point_tuple_with_zero_vector_is_rejected(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"vectors": [[1, 0], [0, 0]]}')
    with pytest.raises(DomainError):
        read_point_tuple(path)
