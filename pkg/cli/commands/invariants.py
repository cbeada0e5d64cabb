"""Strassen and Aronhold invariant commands."""
from algebra.polynomial import parse_polynomial, rational_str
from analysis.invariants import aronhold_pfaffians, strassen_axes, strassen_invariant
from cli.schemas import AronholdResponse, StrassenResponse
from data.documents import read_tensor


def run_strassen(args) -> StrassenResponse:
    A = read_tensor(args.file)
    if args.all_axes:
        values = strassen_axes(A)
        value = values[args.axis]
        axes = [rational_str(v) for v in values]
    else:
        value = strassen_invariant(A, args.axis)
        axes = None
    return StrassenResponse(value=rational_str(value), axis=args.axis, axes=axes, vanishes=value == 0)


def run_aronhold(args) -> AronholdResponse:
    f = parse_polynomial(args.polynomial, 3)
    values = aronhold_pfaffians(f)
    return AronholdResponse(
        polynomial=str(f),
        pfaffians=[rational_str(v) for v in values],
        all_vanish=not any(values),
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser('strassen', help="Strassen's invariant of a 3x3x3 tensor")
    parser.add_argument('file', help='tensor JSON document')
    parser.add_argument('--axis', type=int, choices=(0, 1, 2), default=0, help='slicing axis (default 0)')
    parser.add_argument('--all-axes', action='store_true', help='report the value along every axis')
    parser.set_defaults(handler=run_strassen)

    parser = subparsers.add_parser('aronhold', help='Aronhold pfaffians of a ternary cubic')
    parser.add_argument('polynomial', help="cubic in x0, x1, x2, e.g. 'x0^3 + x1^3 + x2^3'")
    parser.set_defaults(handler=run_aronhold)
