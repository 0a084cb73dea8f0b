import random

import pytest
from hypothesis import strategies as st

from distrank.graph import build_graph


def random_tree(n, rng):
    """Uniform-ish random labelled tree via random attachment."""
    return build_graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_connected(n, rng, p=0.4):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                edges.add((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 1.0))
    return random_connected(n, random.Random(seed), p)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, lo=-5, hi=5, square=False):
    r = draw(st.integers(1, max_rows))
    c = r if square else draw(st.integers(1, max_cols))
    return draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
