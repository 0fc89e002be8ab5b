import pytest

from pstnet.pipeline import build_system
from pstnet.spectral import DEFAULT_SEED

# the full family/parameter matrix exercised by the acceptance suite
MATRIX = [
    ("cyclic", 4), ("cyclic", 6), ("cyclic", 8), ("cyclic", 10), ("cyclic", 12),
    ("dihedral_even", 4), ("dihedral_even", 8),
    ("clifford", 3), ("clifford", 4),
    ("u6n", 1), ("u6n", 2), ("u6n", 3),
    ("v8n", 3),
]

GROUP_MATRIX = [(f, n) for f, n in MATRIX if f != "cyclic"]
ANALYTIC_MATRIX = [(f, n) for f, n in MATRIX if not (f == "clifford" and n % 2 == 1)]

_cache: dict = {}


@pytest.fixture(scope="session")
def system_for():
    """Session-cached build_system: schemes are immutable, so sharing is safe."""
    def get(family, n, backend="auto", seed=DEFAULT_SEED):
        key = (family, n, backend, seed)
        if key not in _cache:
            _cache[key] = build_system(family, n, backend, seed)
        return _cache[key]
    return get
