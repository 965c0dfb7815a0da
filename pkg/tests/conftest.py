import random
import sys

import pytest
from hypothesis import settings, strategies as st

from decconn.graph import Digraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# small named graphs used across modules
NAMED = {
    "C2": (2, [(1, 2), (2, 1)]),
    "C3": (3, [(1, 2), (2, 3), (3, 1)]),
    "path": (3, [(1, 2), (2, 3)]),
    "diamond": (4, [(1, 2), (1, 3), (2, 4), (3, 4)]),
    "K": (4, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 4)]),
    "bitri": (3, [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)]),
    # two bidirected triangles sharing vertex 3
    "double": (5, [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1),
                   (3, 4), (4, 3), (4, 5), (5, 4), (3, 5), (5, 3)]),
    # two bidirected triangles joined by a 2-cycle between 3 and 4
    "joined": (6, [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1),
                   (4, 5), (5, 4), (5, 6), (6, 5), (4, 6), (6, 4), (3, 4), (4, 3)]),
}


def named(name: str) -> Digraph:
    n, edges = NAMED[name]
    return Digraph(n, edges)


@pytest.fixture
def graph():
    return named


def rand_graph(rng: random.Random, n: int, m: int) -> Digraph:
    return Digraph(n, [(rng.randint(1, n), rng.randint(1, n)) for _ in range(m)])


@st.composite
def digraphs(draw, min_n=1, max_n=8, max_m=24):
    n = draw(st.integers(min_n, max_n))
    pair = st.tuples(st.integers(1, n), st.integers(1, n))
    edges = draw(st.lists(pair, max_size=max_m))
    return Digraph(n, edges)


@st.composite
def graph_and_order(draw, **kw):
    """A graph plus a permutation of its edge copies to delete."""
    g = draw(digraphs(**kw))
    order = draw(st.permutations(list(g.edges())))
    return g, order


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
