"""Degree and existence commands."""
from typing import List

from analysis.degree import classify, degree_table
from cli.schemas import DegreeReport, DegreeTableResponse
from tensors.multimatrix import Format
from utils.errors import FormatError


def parse_format(values: List[str]) -> Format:
    """Command-line dimensions as a Format; anything non-integral is a FormatError."""
    try:
        dims = tuple(int(v) for v in values)
    except ValueError as e:
        raise FormatError(f"malformed format {' '.join(values)!r}: {e}") from e
    return Format(dims)


def run_degree(args) -> DegreeReport:
    return DegreeReport(**classify(parse_format(args.dims)).to_dict())


def run_table(args) -> DegreeTableResponse:
    table = degree_table(range(2, args.b_max + 1), range(2, args.a_max + 1))
    return DegreeTableResponse(rows=table.to_dict(orient='records'))


def register(subparsers) -> None:
    parser = subparsers.add_parser('degree', help='existence, boundary flag and degree N of a format')
    parser.add_argument('dims', nargs='+', help='dimensions k_0+1 ... k_p+1')
    parser.set_defaults(handler=run_degree)

    parser = subparsers.add_parser('table', help='degree table of three-dimensional formats')
    parser.add_argument('--b-max', type=int, default=5, help='largest b in the parametric rows (default 5)')
    parser.add_argument('--a-max', type=int, default=3, help='largest a in the (a, b, a+b-1) rows (default 3)')
    parser.set_defaults(handler=run_table)
