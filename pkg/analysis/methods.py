"""
Evaluation engine that runs every applicable hyperdeterminant route on a
tensor and cross-checks them against each other.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import pandas as pd

from algebra.polynomial import rational_str
from analysis.boundary import cayley_3x2x2, hyperdet_boundary
from analysis.schlaefli import (
    CAYLEY_3X2X2_FACTOR,
    CONIC_FACTOR,
    cayley_2x2x2,
    conic_determinant,
    hyperdet_2bb,
)
from tensors.multimatrix import Format, MultiMatrix, PointTuple, kernel_check
from utils.errors import FormatError, InconsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Method:
    """One Det route: raw value = factor * reference Det."""
    name: str
    family: str
    formats: str
    factor: Fraction
    applies: Callable[[Format], bool]
    compute: Callable[[MultiMatrix], Fraction]

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'family': self.family,
            'formats': self.formats,
            'factor': rational_str(self.factor),
        }


def _is_2bb(fmt: Format) -> bool:
    return fmt.p == 2 and fmt[0] == 2 and fmt[1] == fmt[2] and fmt[1] >= 2


METHODS: Dict[str, Method] = {
    m.name: m for m in (
        Method('boundary', 'boundary', 'any boundary format', Fraction(1),
               lambda fmt: fmt.is_boundary, hyperdet_boundary),
        Method('cayley3x2x2', 'cayley', '3x2x2', CAYLEY_3X2X2_FACTOR,
               lambda fmt: fmt.dims == (3, 2, 2), cayley_3x2x2),
        Method('schlaefli-conic', 'schlaefli', '3x2x2', CONIC_FACTOR,
               lambda fmt: fmt.dims == (3, 2, 2), conic_determinant),
        Method('schlaefli', 'schlaefli', '2xbxb, b >= 2', Fraction(1),
               _is_2bb, hyperdet_2bb),
        Method('cayley2x2x2', 'cayley', '2x2x2', Fraction(1),
               lambda fmt: fmt.dims == (2, 2, 2), cayley_2x2x2),
    )
}

# Values of --method on the command line
METHOD_FAMILIES = ('auto', 'boundary', 'schlaefli', 'cayley')


@dataclass
class DetEvaluation:
    """Det in the reference normalization plus every raw route value."""
    format: Format
    value: Fraction
    reference: str
    methods: List[str]
    raw: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def degenerate(self) -> bool:
        return self.value == 0

    def to_dict(self) -> dict:
        return {
            'format': list(self.format.dims),
            'value': rational_str(self.value),
            'reference': self.reference,
            'methods': list(self.methods),
            'raw': {name: rational_str(v) for name, v in self.raw.items()},
            'agree': True,
        }

    def to_dataframe(self) -> pd.DataFrame:
        rows = []
        for name in self.methods:
            method = METHODS[name]
            rows.append({
                'method': name,
                'raw': self.raw[name],
                'factor': method.factor,
                'normalized': self.raw[name] / method.factor,
            })
        return pd.DataFrame(rows, columns=['method', 'raw', 'factor', 'normalized'])


class MethodEvaluator:
    """
    Runs the Det routes that apply to a tensor's format and cross-checks them.

    Routes match the format exactly in the given axis order, except the
    boundary route, which moves the largest axis to the front itself.
    """

    def __init__(self, family: str = 'auto'):
        """
        Args:
            family: 'auto' (all applicable routes) or one of boundary, schlaefli, cayley
        """
        if family not in METHOD_FAMILIES:
            raise FormatError(f"unknown method {family!r}; expected one of {', '.join(METHOD_FAMILIES)}")
        self.family = family

    def applicable(self, fmt: Format) -> List[Method]:
        return [
            m for m in METHODS.values()
            if m.applies(fmt) and (self.family == 'auto' or m.family == self.family)
        ]

    def evaluate(self, A: MultiMatrix) -> DetEvaluation:
        """
        Compute Det(A) through every selected route.

        Raises:
            FormatError: no selected route handles the format
            InconsistencyError: normalized values disagree
        """
        methods = self.applicable(A.format)
        if not methods:
            raise FormatError(f"no {self.family} method computes Det for format {A.format}")

        raw = {}
        normalized = {}
        for method in methods:
            raw[method.name] = method.compute(A)
            normalized[method.name] = raw[method.name] / method.factor
            logger.debug("%s on %s: raw=%s", method.name, A.format, raw[method.name])

        reference = methods[0].name
        value = normalized[reference]
        disagreeing = {name: v for name, v in normalized.items() if v != value}
        if disagreeing:
            details = ", ".join(f"{name}={rational_str(v)}" for name, v in normalized.items())
            raise InconsistencyError(f"Det routes disagree on {A.format}: {details}")

        logger.info("Det(%s) = %s via %s", A.format, value, ", ".join(normalized))
        return DetEvaluation(format=A.format, value=value, reference=reference,
                             methods=list(normalized), raw=raw)


def evaluate_det(A: MultiMatrix, family: str = 'auto') -> DetEvaluation:
    return MethodEvaluator(family).evaluate(A)


def degeneracy_report(A: MultiMatrix, certificate: Optional[PointTuple] = None) -> dict:
    """
    Decide degeneracy from a kernel certificate when one is given, else from Det.

    Without a certificate the format must be handled by some Det route
    (FormatError otherwise).
    """
    if certificate is not None:
        certified = kernel_check(A, certificate)
        # a failed certificate proves nothing either way
        return {
            'format': list(A.format.dims),
            'degenerate': True if certified else None,
            'method': 'kernel',
            'certificate_valid': certified,
        }
    evaluation = evaluate_det(A)
    return {
        'format': list(A.format.dims),
        'degenerate': evaluation.degenerate,
        'method': 'det',
        'value': rational_str(evaluation.value),
        'methods': evaluation.methods,
    }
