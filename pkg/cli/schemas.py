"""Pydantic models for documents and command reports."""
import re
from fractions import Fraction
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, field_validator, model_validator

# Exact rationals travel as JSON integers or "p/q" strings
RATIONAL_PATTERN = r'^-?\d+(/\d+)?$'

Entry = Union[StrictInt, StrictStr]


def _check_entry(value: Entry) -> Entry:
    if isinstance(value, str):
        if not re.match(RATIONAL_PATTERN, value):
            raise ValueError(f"entry {value!r} is not an integer or a 'p/q' string")
        if '/' in value and int(value.split('/')[1]) == 0:
            raise ValueError(f"entry {value!r} has a zero denominator")
    return value


def entry_to_fraction(value: Entry) -> Fraction:
    return Fraction(value)


def fraction_to_entry(value: Fraction) -> Entry:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class TensorDocument(BaseModel):
    """{"format": [...], "entries": [...]}, entries row-major with the last axis fastest."""
    model_config = ConfigDict(extra='forbid')

    format: List[StrictInt] = Field(..., min_length=2)
    entries: List[Entry]

    @field_validator('format')
    @classmethod
    def dimensions_positive(cls, dims: List[int]) -> List[int]:
        if any(d < 1 for d in dims):
            raise ValueError(f"all dimensions must be >= 1, got {dims}")
        return dims

    @field_validator('entries')
    @classmethod
    def entries_rational(cls, entries: List[Entry]) -> List[Entry]:
        return [_check_entry(e) for e in entries]

    @model_validator(mode='after')
    def length_matches_format(self) -> 'TensorDocument':
        size = 1
        for d in self.format:
            size *= d
        if len(self.entries) != size:
            raise ValueError(f"format {self.format} needs {size} entries, got {len(self.entries)}")
        return self


class PointTupleDocument(BaseModel):
    """{"vectors": [[...], ...]}: one vector per axis."""
    model_config = ConfigDict(extra='forbid')

    vectors: List[List[Entry]] = Field(..., min_length=1)

    @field_validator('vectors')
    @classmethod
    def entries_rational(cls, vectors: List[List[Entry]]) -> List[List[Entry]]:
        return [[_check_entry(e) for e in vec] for vec in vectors]


# -----------------------------------------------------------------------------
# Reports
# -----------------------------------------------------------------------------

class DegreeReport(BaseModel):
    """Existence, boundary flag and degree of a format."""
    format: List[int]
    exists: bool
    boundary: bool
    N: int = Field(..., ge=0)
    slice_degrees: List[int] = []
    zero_degenerate_codimension: int = 0


class DegreeTableResponse(BaseModel):
    rows: List[Dict]


class DetReport(BaseModel):
    """Det as an exact rational plus the raw value of every route run."""
    format: List[int]
    value: str
    reference: str
    methods: List[str]
    raw: Dict[str, str]
    agree: bool = True


class DegenerateReport(BaseModel):
    format: List[int]
    # None when a certificate was given but does not lie in the kernel
    degenerate: Optional[bool]
    method: str  # 'kernel' or 'det'
    certificate_valid: Optional[bool] = None
    value: Optional[str] = None
    methods: List[str] = []


class PencilResponse(BaseModel):
    """Characteristic form and regularity of a 2 x k x k pencil."""
    char_form: str
    regular: bool
    discriminant: str
    pencil_singular: bool = False
    symmetric: bool = False
    degree_drop: bool = False
    eigenvalues_approx: Optional[List[List[float]]] = None


class BlocksResponse(BaseModel):
    kind: str  # 'kronecker' or 'kac'
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    q: Optional[int] = None
    j: Optional[int] = None
    block_formats: List[List[int]]


class StrassenResponse(BaseModel):
    value: str
    axis: int
    axes: Optional[List[str]] = None
    vanishes: bool


class AronholdResponse(BaseModel):
    polynomial: str
    pfaffians: List[str]
    all_vanish: bool


class FlattenResponse(BaseModel):
    axis: int
    rows: int
    cols: int
    rank: int
    matrix: List[List[str]]


class CacheInfoResponse(BaseModel):
    """Cache statistics."""
    enabled: bool
    directory: str
    total_files: int
    valid_files: int
    expired_files: int
    memory_entries: int
    total_size_mb: float
    cache_duration_hours: float


class CacheClearResponse(BaseModel):
    """Result of cache clear operation."""
    files_removed: int
    message: str


class MethodDoc(BaseModel):
    """Documentation for one Det route."""
    name: str
    family: str
    formats: str
    factor: str
    summary: str


class MethodsResponse(BaseModel):
    reference: str
    methods: List[MethodDoc]
