"""Flattening and convolution commands."""
from algebra.matrices import exact_rank
from cli.schemas import FlattenResponse, TensorDocument
from data.documents import read_tensor, tensor_to_document, write_tensor
from tensors.multimatrix import convolve, flattening


def run_flatten(args) -> FlattenResponse:
    M = flattening(read_tensor(args.file), args.axis)
    return FlattenResponse(axis=args.axis, rows=M.rows, cols=M.cols, rank=exact_rank(M), matrix=M.to_strings())


def run_convolve(args) -> TensorDocument:
    product = convolve(read_tensor(args.file_a), read_tensor(args.file_b))
    if args.output:
        write_tensor(product, args.output)
    return tensor_to_document(product)


def register(subparsers) -> None:
    parser = subparsers.add_parser('flatten', help='flattening C_i of a tensor and its rank')
    parser.add_argument('file', help='tensor JSON document')
    parser.add_argument('axis', type=int, help='axis i')
    parser.set_defaults(handler=run_flatten)

    parser = subparsers.add_parser('convolve', help='contract the last axis of A with the first axis of B')
    parser.add_argument('file_a', help='tensor JSON document A')
    parser.add_argument('file_b', help='tensor JSON document B')
    parser.add_argument('--output', default=None, help='also write the product to this file')
    parser.set_defaults(handler=run_convolve)
