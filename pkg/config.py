"""
Configuration settings for hyperdet
"""

import os

# =============================================================================
# BOUNDARY FORMAT LIMITS
# =============================================================================

# Largest ∂_A (N × N) we are willing to build and take an exact determinant of
MAX_BOUNDARY_N = 5040
MAX_BOUNDARY_N_ENV = 'HYPERDET_MAX_BOUNDARY_N'

# =============================================================================
# NUMERIC SETTINGS (pencil module only)
# =============================================================================

# Max-norm residual accepted for C^t A_i C = D_i
DIAGONALIZATION_TOLERANCE = 1e-9
TOLERANCE_ENV = 'HYPERDET_TOLERANCE'

# =============================================================================
# CACHE SETTINGS
# =============================================================================

CACHE_DURATION_HOURS = 24 * 30
CACHE_DIR = 'data/cache'

CACHE_DIR_ENV = 'HYPERDET_CACHE_DIR'
CACHE_HOURS_ENV = 'HYPERDET_CACHE_HOURS'
# Set to 0 to keep degree series in memory only
CACHE_ENABLED_ENV = 'HYPERDET_CACHE'

# =============================================================================
# LOGGING
# =============================================================================

LOG_LEVEL = 'WARNING'
LOG_LEVEL_ENV = 'HYPERDET_LOG_LEVEL'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

# =============================================================================
# CLI
# =============================================================================

EXIT_CODES = {
    'ok': 0,
    'usage': 1,
    'unsupported': 2,
    'invalid': 3,
    'inconsistent': 4,
}

# Seed for randomized checks in the test suite
RANDOM_SEED = 20240601


# =============================================================================
# ENVIRONMENT ACCESSORS (read at call time so .env / monkeypatch apply)
# =============================================================================

def get_max_boundary_n() -> int:
    return int(os.environ.get(MAX_BOUNDARY_N_ENV, MAX_BOUNDARY_N))


def get_tolerance() -> float:
    return float(os.environ.get(TOLERANCE_ENV, DIAGONALIZATION_TOLERANCE))


def get_cache_dir() -> str:
    return os.environ.get(CACHE_DIR_ENV, CACHE_DIR)


def get_cache_hours() -> float:
    return float(os.environ.get(CACHE_HOURS_ENV, CACHE_DURATION_HOURS))


def cache_enabled() -> bool:
    return os.environ.get(CACHE_ENABLED_ENV, '1').strip().lower() not in ('0', 'false', 'no', 'off')


def get_log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV, LOG_LEVEL).upper()
