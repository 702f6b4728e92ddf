from pathlib import Path

import pytest

from engine.normal.matching import build_matching_system
from engine.topology.skeleton import compute_skeleton
from engine.topology.triangulation import parse_triangulation


FIXTURES = Path(__file__).parent / 'fixtures'

CENSUS_FIXTURES = ['census_l41.tri', 'census_l52.tri']
ONE_VERTEX_FIXTURES = ['onevertex_t1.tri', 'onevertex_t2_double.tri', 'onevertex_t2_twisted.tri'] + CENSUS_FIXTURES
CLOSED_FIXTURES = ['s3_double.tri'] + ONE_VERTEX_FIXTURES


class Loaded:
    """A fixture triangulation with its skeleton and matching system."""
    def __init__(self, name: str):
        self.name = name
        self.text = (FIXTURES / name).read_text()
        self.tri = parse_triangulation(self.text, name)
        self.skeleton = compute_skeleton(self.tri)
        self.system = build_matching_system(self.tri, self.skeleton)


def load(name: str) -> Loaded:
    return Loaded(name)


@pytest.fixture
def ball():
    return load('ball1.tri')


@pytest.fixture
def s3():
    return load('s3_double.tri')
