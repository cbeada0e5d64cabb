"""
Cache manager for expensive, deterministic results (degree series, tables).

Two layers: an in-memory memo shared by every caller in the process, and
JSON files under the cache directory that outlive it. The disk layer can be
switched off with HYPERDET_CACHE=0.
"""

import json
import hashlib
import logging
import threading
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import pandas as pd

from config import cache_enabled, get_cache_dir, get_cache_hours

logger = logging.getLogger(__name__)

_memory: Dict[str, Any] = {}
_memory_lock = threading.RLock()


def get_cache_path() -> Path:
    """The configured cache directory, created on first use."""
    path = Path(get_cache_dir())
    path.mkdir(parents=True, exist_ok=True)
    return path


def generate_cache_key(source: str, params: dict) -> str:
    """
    Stable key for one cached result.

    Args:
        source: Result family ('degree', 'degree_table')
        params: JSON-serializable parameters the result depends on

    Returns:
        Hex digest, also used as the file stem
    """
    canonical = json.dumps({'source': source, 'params': params}, sort_keys=True)
    return hashlib.md5(canonical.encode()).hexdigest()


def _entry_file(source: str, params: dict) -> Path:
    return get_cache_path() / f"{generate_cache_key(source, params)}.json"


def is_cache_valid(cache_file: Path) -> bool:
    """True when the file exists and is younger than the configured lifetime."""
    if not cache_file.exists():
        return False
    written = datetime.fromtimestamp(cache_file.stat().st_mtime)
    return datetime.now() - written < timedelta(hours=get_cache_hours())


def _encode(data: Any) -> dict:
    if isinstance(data, pd.DataFrame):
        return {'_type': 'dataframe', 'data': data.to_dict(orient='list')}
    return {'_type': 'standard', 'data': data}


def _decode(entry: dict) -> Any:
    if entry.get('_type') == 'dataframe':
        return pd.DataFrame(entry['data'])
    return entry['data']


def get_cached_data(source: str, params: dict) -> Optional[Any]:
    """
    Read one entry from disk.

    Returns:
        The stored value, or None when missing, expired or unreadable
    """
    cache_file = _entry_file(source, params)
    if not is_cache_valid(cache_file):
        return None
    try:
        return _decode(json.loads(cache_file.read_text()))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        logger.warning("Cache read error for %s: %s", cache_file.name, e)
        return None


def save_to_cache(source: str, params: dict, data: Any) -> bool:
    """
    Write one entry to disk.

    Args:
        source: Result family
        params: Parameters the result depends on
        data: JSON-serializable value or a DataFrame

    Returns:
        False if the entry could not be written
    """
    cache_file = _entry_file(source, params)
    entry = _encode(data)
    entry.update(source=source, params=params, cached_at=datetime.now().isoformat())

    # readers only ever see complete files
    tmp_file = cache_file.with_suffix('.tmp')
    try:
        tmp_file.write_text(json.dumps(entry))
        tmp_file.replace(cache_file)
        return True
    except (OSError, TypeError, ValueError) as e:
        logger.warning("Cache write error for %s: %s", source, e)
        return False


def cached(source: str, params: dict, compute: Callable[[], Any]) -> Any:
    """
    Return the memoized result for (source, params), computing it at most once.

    Lookup order is memory, then disk (when enabled), then `compute()`.
    The memory layer is guarded by a lock, so concurrent callers get the
    same object.
    """
    key = generate_cache_key(source, params)
    with _memory_lock:
        if key in _memory:
            return _memory[key]

        value = get_cached_data(source, params) if cache_enabled() else None
        if value is None:
            logger.debug("cache miss: %s %s", source, params)
            value = compute()
            if cache_enabled():
                save_to_cache(source, params, value)
        _memory[key] = value
        return value


def _entry_source(cache_file: Path) -> Optional[str]:
    return json.loads(cache_file.read_text()).get('source')


def clear_cache(source: Optional[str] = None) -> int:
    """
    Drop the in-memory memo and delete cache files.

    Args:
        source: Only delete files of this result family; all files if None

    Returns:
        Number of files deleted
    """
    with _memory_lock:
        _memory.clear()

    removed = 0
    for cache_file in get_cache_path().glob("*.json"):
        try:
            if source is not None and _entry_source(cache_file) != source:
                continue
            cache_file.unlink()
            removed += 1
        except (OSError, json.JSONDecodeError) as e:
            logger.warning("Error deleting %s: %s", cache_file, e)
    return removed


def get_cache_info() -> dict:
    """Counts, size and settings of both cache layers."""
    path = get_cache_path()
    files = list(path.glob("*.json"))
    valid = sum(1 for f in files if is_cache_valid(f))
    size = sum(f.stat().st_size for f in files)

    return {
        'enabled': cache_enabled(),
        'directory': str(path),
        'total_files': len(files),
        'valid_files': valid,
        'expired_files': len(files) - valid,
        'memory_entries': len(_memory),
        'total_size_bytes': size,
        'total_size_mb': round(size / (1024 * 1024), 2),
        'cache_duration_hours': get_cache_hours(),
    }
