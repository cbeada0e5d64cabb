import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra.matrices import ExactMatrix, exact_determinant
from config import CACHE_DIR_ENV, RANDOM_SEED
from data import cache_manager
from tensors.multimatrix import MultiMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(RANDOM_SEED)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path / "cache"))
    cache_manager.clear_cache()
    yield
    cache_manager.clear_cache()


@pytest.fixture
def random_tensor(rng):
    """Factory: random integer tensor of the given dims with entries in [low, high)."""
    def make(dims, low=-5, high=6) -> MultiMatrix:
        return MultiMatrix.from_array(rng.integers(low, high, size=tuple(dims)).astype(object))
    return make


@pytest.fixture
def random_rank_sum(rng):
    """Factory: sum of `rank` random decomposable tensors."""
    def make(dims, rank, low=-3, high=4) -> MultiMatrix:
        total = MultiMatrix.zeros(dims)
        for _ in range(rank):
            vectors = [rng.integers(low, high, size=d).astype(object) for d in dims]
            total = total + MultiMatrix.outer(vectors)
        return total
    return make


@pytest.fixture
def random_invertible(rng):
    """Factory: random integer matrix with nonzero determinant."""
    def make(n, low=-3, high=4) -> ExactMatrix:
        while True:
            g = ExactMatrix.from_array(rng.integers(low, high, size=(n, n)).astype(object))
            if exact_determinant(g) != 0:
                return g
    return make
