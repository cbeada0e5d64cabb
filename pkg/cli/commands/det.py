"""Det evaluation and degeneracy commands."""
from analysis.methods import METHOD_FAMILIES, degeneracy_report, evaluate_det
from cli.schemas import DegenerateReport, DetReport
from data.documents import read_point_tuple, read_tensor


def run_det(args) -> DetReport:
    return DetReport(**evaluate_det(read_tensor(args.file), args.method).to_dict())


def run_check_degenerate(args) -> DegenerateReport:
    A = read_tensor(args.file)
    certificate = read_point_tuple(args.certificate) if args.certificate else None
    return DegenerateReport(**degeneracy_report(A, certificate))


def register(subparsers) -> None:
    parser = subparsers.add_parser('det', help='hyperdeterminant of a tensor document')
    parser.add_argument('file', help='tensor JSON document')
    parser.add_argument('--method', choices=METHOD_FAMILIES, default='auto',
                        help='route to use; auto runs and cross-checks every applicable one')
    parser.set_defaults(handler=run_det)

    parser = subparsers.add_parser('check-degenerate', help='decide degeneracy from a certificate or from Det')
    parser.add_argument('file', help='tensor JSON document')
    parser.add_argument('--certificate', default=None, help='point-tuple JSON document x^0, ..., x^p')
    parser.set_defaults(handler=run_check_degenerate)
