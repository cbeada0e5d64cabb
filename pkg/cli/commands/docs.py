"""Documentation command: the Det routes and their normalization constants."""
from analysis.methods import METHODS
from cli.schemas import MethodDoc, MethodsResponse

METHOD_SUMMARIES = {
    'boundary': "Ordinary determinant of the map d_A between tensor products of symmetric powers. "
                "This is the reference Det for boundary formats.",
    'cayley3x2x2': "det A01 * det A10 - det A00 * det A11 on the 3x3 minors of the 3x4 flattening.",
    'schlaefli-conic': "Determinant of the symmetric 3x3 matrix of the conic det(x0 A0 + x1 A1 + x2 A2).",
    'schlaefli': "Discriminant of the binary form det(x0 A0 + x1 A1). "
                 "This is the reference Det for 2 x b x b formats.",
    'cayley2x2x2': "Cayley's closed formula in the eight entries of a 2x2x2 matrix.",
}


def run_methods(args) -> MethodsResponse:
    return MethodsResponse(
        reference="raw value = factor * Det, with Det = det d_A on boundary formats "
                  "and the slice-form discriminant on 2 x b x b",
        methods=[
            MethodDoc(summary=METHOD_SUMMARIES[name], **method.to_dict())
            for name, method in METHODS.items()
        ],
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser('methods', help='list the Det routes, their formats and constants')
    parser.set_defaults(handler=run_methods)
