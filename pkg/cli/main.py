"""Command-line entry point: python -m cli.main <command> ..."""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add parent directory to path for imports
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError

from cli.commands import cache, degree, det, docs, invariants, pencil, tensors
from config import EXIT_CODES
from utils.errors import FormatError, HyperdetError, InconsistencyError, SizeError
from utils.log import setup_logging

logger = logging.getLogger(__name__)

COMMAND_GROUPS = (degree, det, pencil, invariants, tensors, cache, docs)


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the 'usage' exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES['usage'], f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='hyperdet',
        description='Exact hyperdeterminants, degrees and invariants of multidimensional matrices.',
    )
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING (default) or ERROR')
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def exit_code_for(error: Exception) -> int:
    if isinstance(error, InconsistencyError):
        return EXIT_CODES['inconsistent']
    if isinstance(error, (FormatError, SizeError)):
        return EXIT_CODES['unsupported']
    return EXIT_CODES['invalid']


def render(result: BaseModel) -> str:
    return json.dumps(result.model_dump(exclude_none=True), sort_keys=True, indent=2) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and print its JSON report to stdout.

    Returns:
        Process exit code (0 ok, 1 usage, 2 unsupported format,
        3 invalid input, 4 failed cross-check)
    """
    load_dotenv(PROJECT_ROOT / ".env")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CODES['usage']

    setup_logging(args.log_level)
    try:
        result = args.handler(args)
    except (HyperdetError, ValidationError) as e:
        code = exit_code_for(e)
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write(f"hyperdet {args.command}: {type(e).__name__}: {e}\n")
        return code

    sys.stdout.write(render(result))
    return EXIT_CODES['ok']


if __name__ == '__main__':
    sys.exit(main())
