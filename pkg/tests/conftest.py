import pytest

from chesslut.corpus import generate_corpus
from chesslut.movegen import DirectBackend, RotatedBackend
from chesslut.rotated import build_line_attack_bytes, build_rotation_maps
from chesslut.tables import build_attack_tables


@pytest.fixture(scope="session")
def attack_tables():
    return build_attack_tables()


@pytest.fixture(scope="session")
def rotation():
    return build_rotation_maps(), build_line_attack_bytes()


@pytest.fixture(scope="session")
def direct_backend(attack_tables):
    return DirectBackend(attack_tables)


@pytest.fixture(scope="session")
def rotated_backend(rotation):
    maps, arrays = rotation
    return RotatedBackend(maps, arrays)


@pytest.fixture(scope="session")
def playout_positions(direct_backend):
    """1000 deterministic legal positions from seeded random playouts."""
    return generate_corpus(count=1000, seed=20260808, backend=direct_backend)
