import random

import pytest
from hypothesis import strategies as st

from multifun import MultiFunction, VertexUniverse


def mf(n, images):
    return MultiFunction.from_sets(VertexUniverse(n), images)


C3_ROWS = [[1, 2], [0, 2], [0, 1]]
C4_ROWS = [[1, 3], [0, 2], [1, 3], [0, 2]]
P3_ROWS = [[1], [0, 2], [1]]
TWO_EDGES_ROWS = [[1], [0], [3], [2]]


@pytest.fixture
def c3():
    return mf(3, C3_ROWS)


@pytest.fixture
def c4():
    return mf(4, C4_ROWS)


@pytest.fixture
def p3():
    return mf(3, P3_ROWS)


@pytest.fixture
def two_edges():
    return mf(4, TWO_EDGES_ROWS)


@pytest.fixture
def rng():
    return random.Random(20261019)


def random_mf(rng, n, density=None):
    p = rng.random() if density is None else density
    rows = tuple(sum(1 << u for u in range(n) if rng.random() < p) for _ in range(n))
    return MultiFunction(VertexUniverse(n), rows)


@st.composite
def multifunctions(draw, min_size=1, max_size=6):
    n = draw(st.integers(min_size, max_size))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return MultiFunction(VertexUniverse(n), tuple(rows))


@st.composite
def undirected_multifunctions(draw, min_size=1, max_size=6, loops=False):
    n = draw(st.integers(min_size, max_size))
    rows = [0] * n
    for u in range(n):
        for v in range(u if loops else u + 1, n):
            if draw(st.booleans()):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return MultiFunction(VertexUniverse(n), tuple(rows))


@st.composite
def mf_with_set(draw, max_size=6):
    f = draw(multifunctions(max_size=max_size))
    bits = draw(st.integers(0, f.universe.full_mask))
    return f, bits
