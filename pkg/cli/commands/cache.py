"""Cache management commands."""
from cli.schemas import CacheClearResponse, CacheInfoResponse
from data.cache_manager import clear_cache, get_cache_info


def run_info(args) -> CacheInfoResponse:
    return CacheInfoResponse(**get_cache_info())


def run_clear(args) -> CacheClearResponse:
    files_removed = clear_cache(args.source)
    scope = f"'{args.source}' " if args.source else ""
    return CacheClearResponse(
        files_removed=files_removed,
        message=f"Cleared {files_removed} {scope}cache files and the in-memory memo",
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser('cache', help='inspect or clear the degree cache')
    actions = parser.add_subparsers(dest='action', required=True, metavar='action')

    info = actions.add_parser('info', help='cache statistics')
    info.set_defaults(handler=run_info)

    clear = actions.add_parser('clear', help='delete cached entries')
    clear.add_argument('--source', default=None, help="only entries of this family, e.g. 'degree'")
    clear.set_defaults(handler=run_clear)
