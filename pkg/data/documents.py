"""
Reading and writing tensor and point-tuple JSON documents.

Documents are written canonically (sorted keys, two-space indent, trailing
newline, integers as JSON integers and other rationals as "p/q"), so
read -> write -> read reproduces the same bytes.
"""

import json
import logging
from pathlib import Path
from typing import Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from cli.schemas import PointTupleDocument, TensorDocument, entry_to_fraction, fraction_to_entry
from tensors.multimatrix import MultiMatrix, PointTuple
from utils.errors import DocumentError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
Model = TypeVar('Model', bound=BaseModel)


def dumps_canonical(document: BaseModel) -> str:
    return json.dumps(document.model_dump(), sort_keys=True, indent=2) + "\n"


def _parse(text: str, model: Type[Model], origin: str) -> Model:
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise DocumentError(f"{origin}: not valid JSON ({e})") from e
    except ValidationError as e:
        raise DocumentError(f"{origin}: invalid {model.__name__}: {e.errors()[0]['msg']}") from e


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}") from e


# -----------------------------------------------------------------------------
# Tensors
# -----------------------------------------------------------------------------

def tensor_to_document(A: MultiMatrix) -> TensorDocument:
    return TensorDocument(format=list(A.dims), entries=[fraction_to_entry(v) for v in A.entries])


def document_to_tensor(document: TensorDocument) -> MultiMatrix:
    return MultiMatrix(tuple(document.format), tuple(entry_to_fraction(e) for e in document.entries))


def parse_tensor(text: str, origin: str = '<string>') -> MultiMatrix:
    return document_to_tensor(_parse(text, TensorDocument, origin))


def read_tensor(path: PathLike) -> MultiMatrix:
    """
    Load a tensor document.

    Raises:
        DocumentError: unreadable file, bad JSON or failed validation
    """
    A = parse_tensor(_read_text(path), str(path))
    logger.debug("read %s tensor from %s", A.format, path)
    return A


def write_tensor(A: MultiMatrix, path: PathLike) -> None:
    Path(path).write_text(dumps_canonical(tensor_to_document(A)), encoding='utf-8')


# -----------------------------------------------------------------------------
# Point tuples (kernel certificates)
# -----------------------------------------------------------------------------

def point_to_document(x: PointTuple) -> PointTupleDocument:
    return PointTupleDocument(vectors=[[fraction_to_entry(v) for v in vec] for vec in x.vectors])


def read_point_tuple(path: PathLike) -> PointTuple:
    document = _parse(_read_text(path), PointTupleDocument, str(path))
    return PointTuple(tuple(tuple(entry_to_fraction(e) for e in vec) for vec in document.vectors))


def write_point_tuple(x: PointTuple, path: PathLike) -> None:
    Path(path).write_text(dumps_canonical(point_to_document(x)), encoding='utf-8')
