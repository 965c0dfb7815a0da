import random

from hypothesis import given, settings, strategies as hs

from decconn import oracle
from decconn.edge_failure import BridgeCore, EdgeFailure, TwoEcs
from decconn.graph import Digraph
from decconn.joint import SccForest, make_columns

from .conftest import graph_and_order, named


class Stack:
    """Columns, forest, bridge core and edge-failure layer over one graph."""

    def __init__(self, g: Digraph, mode: str = "joint", seed: int = 0):
        self.g = g
        self.cols = make_columns(g, mode)
        self.forest = SccForest(g)
        self.core = BridgeCore(g, self.forest, random.Random(seed), mode)
        self.ef = EdgeFailure(g, self.cols, self.forest, self.core)

    def delete(self, x: int, y: int) -> None:
        self.g.remove_edge(x, y)
        self.cols.delete(x, y)
        self.forest.delete(x, y)
        self.core.delete(x, y)
        self.ef.update()

    @property
    def bridges(self):
        return sorted(self.core.bridges)


def test_bridge_examples():
    assert Stack(named("C2")).bridges == [(1, 2), (2, 1)]
    assert Stack(named("bitri")).bridges == []
    assert Stack(named("K")).bridges == [(1, 2), (2, 3), (3, 4), (4, 1)]


def test_chord_deletion_keeps_bridges():
    s = Stack(named("K"))
    s.delete(2, 4)
    assert s.bridges == [(1, 2), (2, 3), (3, 4), (4, 1)]


def test_triangle_deletion_matches_oracle():
    s = Stack(named("bitri"))
    s.delete(1, 2)
    assert s.bridges == oracle.strong_bridges(s.g) == [(1, 3), (3, 2)]


def test_deleting_a_bridge_splits_its_scc():
    s = Stack(named("K"))
    s.delete(1, 2)
    assert not s.forest.same(1, 2)
    assert s.bridges == []


def test_connectivity_without_edge_examples():
    s = Stack(named("K"))
    for a in range(1, 5):
        for b in range(1, 5):
            assert s.ef.same_without(a, b, 2, 4)
    assert not Stack(named("C2")).ef.same_without(1, 2, 1, 2)
    # every vertex is alone once (1,2) is gone
    assert Stack(named("K")).ef.count_without(1, 2) == 4 == len(oracle.scc_without_edge(named("K"), 1, 2))


def test_separating_edge_examples():
    assert Stack(named("C3")).ef.separating_edges(1, 3) == [(1, 2), (2, 3), (3, 1)]
    assert Stack(named("bitri")).ef.separating_edges(1, 2) == []


def test_two_edge_component_examples():
    assert Stack(named("bitri")).ef.components() == [[1, 2, 3]]
    assert Stack(named("C2")).ef.components() == [[1], [2]]


def test_two_edge_subgraph_examples():
    assert TwoEcs(named("bitri")).subgraphs() == [[1, 2, 3]]
    assert TwoEcs(named("C3")).subgraphs() == []
    assert TwoEcs(named("joined")).subgraphs() == [[1, 2, 3], [4, 5, 6]]


def test_parallel_edges_are_never_bridges():
    s = Stack(Digraph(2, [(1, 2), (1, 2), (2, 1)]))
    assert s.bridges == [(2, 1)]
    s.delete(1, 2)
    assert s.bridges == [(1, 2), (2, 1)]


@settings(max_examples=200)
@given(graph_and_order(min_n=2, max_n=9, max_m=36), hs.sampled_from(["joint", "naive"]),
       hs.integers(0, 2**16))
def test_edge_failure_follows_deletions(case, mode, seed):
    g, order = case
    h = g.copy()
    s = Stack(h, mode, seed)
    te = TwoEcs(g.copy(), seed, mode)

    def verify():
        assert s.bridges == oracle.strong_bridges(h)
        s.core.check()
        s.ef.check()
        assert s.ef.components() == oracle.two_edge_components(h)
        assert te.subgraphs() == oracle.two_edge_subgraphs(h)
        for a in range(1, h.n + 1):
            for b in range(a + 1, h.n + 1):
                if s.forest.same(a, b):
                    assert s.ef.separating_edges(a, b) == oracle.separating_edges(h, a, b)
        for x, y in set(h.edges()):
            assert s.ef.report_without(x, y) == oracle.scc_without_edge(h, x, y) if h.mult(x, y) == 1 \
                else s.ef.report_without(x, y) == oracle.scc_partition(h)

    verify()
    for x, y in order:
        s.delete(x, y)
        te.delete(x, y)
        verify()
    assert len(s.core.ever) <= 2 * (g.n - 1)


def test_seeded_denser_graphs():
    rng = random.Random(2)
    for t in range(60):
        n = rng.randint(5, 11)
        h = Digraph(n, [(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(2 * n, 5 * n))])
        s = Stack(h, rng.choice(["joint", "naive"]), t)
        order = list(h.edges())
        rng.shuffle(order)
        for x, y in order:
            s.delete(x, y)
            assert s.bridges == oracle.strong_bridges(h)
            assert s.ef.components() == oracle.two_edge_components(h)
            a, b = rng.sample(range(1, n + 1), 2)
            if s.forest.same(a, b):
                assert s.ef.separating_edges(a, b) == oracle.separating_edges(h, a, b)
        assert len(s.core.ever) <= 2 * (n - 1)
