import random

import pytest
from hypothesis import given, settings, strategies as hs

from decconn.generators import random_digraph
from decconn.graph import Digraph
from decconn.session import ScriptError, Session

from .conftest import graph_and_order, named


def bad(s: Session, rng: random.Random, samples: int = 10) -> list[str]:
    return [str(r) for r in s.verify(rng, samples) if not r.ok]


@settings(max_examples=80)
@given(graph_and_order(min_n=3, max_n=9, max_m=30), hs.sampled_from(["joint", "naive"]),
       hs.integers(0, 100), hs.data())
def test_late_built_structures_agree(case, mode, seed, data):
    # structures built part way through must match those built at the start
    g, order = case
    cut = data.draw(hs.integers(0, len(order)))
    s = Session(g, mode, seed)
    rng = random.Random(seed)
    for i, (x, y) in enumerate(order):
        if i == cut:
            s.build_all()
        s.delete(x, y)
        assert not bad(s, rng)


def test_random_sessions_both_modes():
    rng = random.Random(21)
    for t in range(6):
        g = random_digraph(16, 60, rng)
        for mode in ("joint", "naive"):
            s = Session(g, mode, t)
            s.build_all()
            order = list(g.edges())
            random.Random(t).shuffle(order)
            for x, y in order:
                s.delete(x, y)
                assert not bad(s, rng), (t, mode)


def test_reducible_session_verifies():
    g = Digraph(4, [(1, 2), (2, 3), (3, 2), (2, 4), (3, 4)])
    s = Session(g, "reducible", source=1)
    s.delete(2, 4)
    assert s.parent(4) == 3
    assert not bad(s, random.Random(0))
    assert s.stats()["deletions"] == 1


def test_errors():
    s = Session(named("C3"))
    with pytest.raises(ScriptError):
        s.delete(1, 3)
    with pytest.raises(ScriptError):
        s.count_without_vertex(0)
    with pytest.raises(ScriptError):
        s.count_without_edge(2, 1)
    with pytest.raises(ValueError):
        Session(named("C3"), "fast")
    with pytest.raises(ScriptError):
        Session(named("C3"), source=5)


def test_stats_only_report_built_parts():
    s = Session(named("K"))
    assert s.stats() == {}
    s.bridges()
    st = s.stats()
    assert st["bridges_live"] == 4 and "n_volume" not in st


def test_empty_graph_session():
    s = Session(Digraph(0))
    assert s.resilient_components() == [] and s.two_edge_subgraphs() == []
