import random

import pytest
from hypothesis import settings, strategies as st

from graphobstacle.graph import Graph, random_connected

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.2, 0.5, 0.9]))
    return random_connected(n, random.Random(seed), p)


@st.composite
def graphs_with_zero_set(draw, max_n=10):
    g = draw(connected_graphs(min_n=2, max_n=max_n))
    zeros = draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n - 1))
    return g, zeros


@pytest.fixture
def rng():
    return random.Random(20240611)


def two_triangles() -> Graph:
    """Disconnected control graph: two disjoint triangles."""
    from graphobstacle.graph import build

    return build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
