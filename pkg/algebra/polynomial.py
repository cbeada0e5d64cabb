"""
Sparse multivariate polynomials with exact rational coefficients.

Terms are kept in a dict keyed by exponent tuples; zero coefficients are
never stored. Iteration and printing use graded lexicographic order
(higher total degree first, then lexicographically larger exponents first).
"""

import logging
import re
from fractions import Fraction
from functools import reduce
from tokenize import TokenError
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import BasePolynomialError

from utils.errors import DimensionError, FormatError, SeriesError

_EXPRESSION = re.compile(r"(?:\s*(?:x\d+|\d+|[-+*/^()]))*\s*")

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction (floats are rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    # numpy integer scalars
    if hasattr(value, '__index__'):
        return Fraction(int(value))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_str(value: Fraction) -> str:
    """Render 3 as "3" and 3/4 as "3/4"."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def graded_lex_key(exponents: Monomial) -> Tuple[int, Monomial]:
    return (sum(exponents), exponents)


class Polynomial:
    """Immutable polynomial in `nvars` variables x0..x{nvars-1}."""

    __slots__ = ('_nvars', '_terms')

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if nvars < 0:
            raise DimensionError(f"variable count must be >= 0, got {nvars}")
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionError(f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            if any(e < 0 for e in exps):
                raise DimensionError(f"negative exponent in {exps}")
            value = clean.get(exps, Fraction(0)) + as_rational(coeff)
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self._nvars = nvars
        self._terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, nvars: int) -> 'Polynomial':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> 'Polynomial':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> 'Polynomial':
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> 'Polynomial':
        """c0*x0 + c1*x1 + ... in len(coefficients) variables."""
        n = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(n, terms)

    @classmethod
    def univariate(cls, coefficients: Sequence[Scalar]) -> 'Polynomial':
        """Build from ascending coefficients [c0, c1, ...] meaning c0 + c1*x + ..."""
        return cls(1, {(i,): c for i, c in enumerate(coefficients)})

    # ------------------------------------------------------------------
    # accessors

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: graded_lex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self._nvars)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, index: int) -> int:
        if not self._terms:
            return -1
        return max(e[index] for e in self._terms)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """True for nonzero polynomials whose terms all share one total degree."""
        if not self._terms:
            return False
        degrees = {sum(e) for e in self._terms}
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other.nvars != self._nvars:
                raise DimensionError(f"cannot combine polynomials in {self._nvars} and {other.nvars} variables")
            return other
        return Polynomial.constant(self._nvars, as_rational(other))

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return Polynomial(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'Polynomial':
        return self._coerce(other) - self

    def __mul__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            scalar = as_rational(other)
            return Polynomial(self._nvars, {e: c * scalar for e, c in self._terms.items()})
        return self.multiply(other)

    __rmul__ = __mul__

    def multiply(self, other: 'Polynomial', max_degree: Optional[int] = None,
                 bounds: Optional[Sequence[int]] = None) -> 'Polynomial':
        """
        Product, optionally truncated.

        Args:
            other: Second factor
            max_degree: Drop terms of total degree above this
            bounds: Drop terms whose exponent in variable i exceeds bounds[i]

        Returns:
            The (truncated) product
        """
        other = self._coerce(other)
        terms: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if max_degree is not None and sum(exps) > max_degree:
                    continue
                if bounds is not None and any(x > b for x, b in zip(exps, bounds)):
                    continue
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return Polynomial(self._nvars, terms)

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self._nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        try:
            return self == Polynomial.constant(self._nvars, as_rational(other))
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # calculus and evaluation

    def derivative(self, index: int) -> 'Polynomial':
        if not 0 <= index < self._nvars:
            raise DimensionError(f"variable index {index} out of range")
        terms = {}
        for exps, c in self._terms.items():
            if exps[index]:
                lowered = list(exps)
                lowered[index] -= 1
                terms[tuple(lowered)] = c * exps[index]
        return Polynomial(self._nvars, terms)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._nvars:
            raise DimensionError(f"point has {len(point)} coordinates, expected {self._nvars}")
        values = [as_rational(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def truncate(self, max_degree: int) -> 'Polynomial':
        return Polynomial(self._nvars, {e: c for e, c in self._terms.items() if sum(e) <= max_degree})

    def binary_coefficients(self, degree: int) -> List[Fraction]:
        """[coeff of x0^d, x0^(d-1) x1, ..., x1^d] for a binary form of the given degree."""
        if self._nvars != 2:
            raise FormatError(f"expected a binary form, got {self._nvars} variables")
        return [self.coefficient((degree - i, i)) for i in range(degree + 1)]

    # ------------------------------------------------------------------
    # display

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.items():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            monomial = "*".join(factors)
            magnitude = abs(c)
            if not monomial:
                body = rational_str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{rational_str(magnitude)}*{monomial}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {str(self)!r})"

    def to_records(self) -> List[dict]:
        """JSON-friendly term list in graded lexicographic order."""
        return [{'exponents': list(e), 'coefficient': rational_str(c)} for e, c in self.items()]


def polynomial_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, Polynomial.zero(nvars))


def series_inverse_square(p: Polynomial, max_degree: int,
                          bounds: Optional[Sequence[int]] = None) -> Polynomial:
    """
    Truncation of 1/(1 - p)^2 = sum_j (j+1) p^j.

    Args:
        p: Polynomial with zero constant term
        max_degree: Keep terms of total degree <= max_degree
        bounds: Optional per-variable exponent caps; a coefficient inside the
            box is unaffected by the extra truncation

    Returns:
        The truncated series as a Polynomial

    Raises:
        SeriesError: if p has a nonzero constant term
    """
    if p.constant_term() != 0:
        raise SeriesError(f"series inversion needs a zero constant term, got {rational_str(p.constant_term())}")

    result = Polynomial.constant(p.nvars, 1)
    power = Polynomial.constant(p.nvars, 1)
    j = 0
    # Every term of p^j has degree >= j, so the loop ends by max_degree + 1
    while True:
        j += 1
        power = power.multiply(p, max_degree=max_degree, bounds=bounds)
        if power.is_zero():
            break
        result = result + power * (j + 1)
    logger.debug("series_inverse_square: %d powers, %d terms", j - 1, len(result))
    return result


def polynomial_determinant(matrix: Sequence[Sequence[Polynomial]], nvars: int) -> Polynomial:
    """
    Determinant of a square matrix of polynomials.

    Laplace expansion along rows, memoized on the set of columns still free;
    fine for the small slice pencils this is used on.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionError("polynomial determinant needs a square matrix")
    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> Polynomial:
        if row == n:
            return Polynomial.constant(nvars, 1)
        if cols in memo:
            return memo[cols]
        total = Polynomial.zero(nvars)
        for position, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            rest = cols[:position] + cols[position + 1:]
            term = entry * minor(row + 1, rest)
            total = total - term if position % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """
    Parse an expression in x0, x1, ... with +, -, *, ^ and parentheses.

    Raises:
        FormatError: on characters outside that grammar, syntax errors,
            unknown symbols or non-rational coefficients
    """
    if not _EXPRESSION.fullmatch(text):
        raise FormatError(f"cannot parse polynomial {text!r}: only x0, x1, ..., integers, +-*/^ and parentheses")
    symbols = sympy.symbols(f"x0:{nvars}")
    namespace = {str(s): s for s in symbols}
    try:
        expr = parse_expr(
            text.strip().replace('^', '**'),
            local_dict=namespace,
            global_dict={'Integer': sympy.Integer, 'Rational': sympy.Rational, 'Symbol': sympy.Symbol},
            evaluate=True,
        )
        poly = sympy.Poly(expr, *symbols, domain='QQ')
    except (sympy.SympifyError, BasePolynomialError, SyntaxError, TypeError, NameError, TokenError) as e:
        raise FormatError(f"cannot parse polynomial {text!r}: {e}") from e

    terms = {}
    for exps, coeff in poly.terms():
        terms[tuple(exps)] = Fraction(int(coeff.p), int(coeff.q))
    return Polynomial(nvars, terms)
