"""Pencil and block-decomposition commands."""
from analysis.pencil import analyze_pencil, kac_blocks, kronecker_blocks
from cli.schemas import BlocksResponse, PencilResponse
from data.documents import read_tensor


def run_pencil(args) -> PencilResponse:
    report = analyze_pencil(read_tensor(args.file), with_eigenvalues=args.eigenvalues)
    return PencilResponse(**report.to_dict())


def run_blocks(args) -> BlocksResponse:
    if args.kronecker:
        decomposition = kronecker_blocks(*args.kronecker)
    else:
        decomposition = kac_blocks(*args.kac)
    return BlocksResponse(**decomposition.to_dict())


def register(subparsers) -> None:
    parser = subparsers.add_parser('pencil', help='characteristic form and regularity of a 2 x k x k pencil')
    parser.add_argument('file', help='tensor JSON document')
    parser.add_argument('--eigenvalues', action='store_true',
                        help='also report approximate Weierstrass eigenvalues')
    parser.set_defaults(handler=run_pencil)

    parser = subparsers.add_parser('blocks', help='Kronecker (2 x b x c) or Kac (w x s x t) block counts')
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--kronecker', nargs=2, type=int, metavar=('B', 'C'))
    group.add_argument('--kac', nargs=3, type=int, metavar=('W', 'S', 'T'))
    parser.set_defaults(handler=run_blocks)
