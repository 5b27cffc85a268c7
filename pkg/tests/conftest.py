import itertools

import pytest
from hypothesis import strategies as st

from cubedraw.graph import Graph


@st.composite
def small_graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


@pytest.fixture
def c4():
    return Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
