import math
import random
from itertools import combinations, permutations

import pytest
from hypothesis import given

from decconn import oracle
from decconn.generators import strongly_connected
from decconn.graph import Digraph, scc
from decconn.joint import JointColumns, NaiveColumns, SccForest, make_columns

from .conftest import graph_and_order, named, rand_graph


def want_columns(g: Digraph) -> list[list[list[int]]]:
    return [scc(g, w).partition() for w in range(1, g.n + 1)]


def got_columns(c) -> list[list[list[int]]]:
    return [c.partition(w) for w in range(1, c.n + 1)]


def run_order(g: Digraph, order, check=True):
    h = g.copy()
    J = JointColumns(h, check_build=check)
    assert got_columns(J) == want_columns(h)
    for u, v in order:
        h.remove_edge(u, v)
        J.delete(u, v)
        if check:
            J.check()
        assert got_columns(J) == want_columns(h)
    return J


def test_two_cycle_columns():
    J = JointColumns(named("C2"))
    assert J.partition(1) == [[2]] and J.partition(2) == [[1]]
    assert J.aid(2, 1) >= 0 and J.aid(1, 2) >= 0
    assert J.aid(1, 1) == -1


def test_single_vertex():
    J = JointColumns(Digraph(1))
    assert J.partition(1) == [] and J.count(1) == 0 and J.scc_of(1) == {1}


def test_triangle_loses_back_edge():
    g = named("C3")
    J = JointColumns(g)
    g.remove_edge(3, 1)
    J.delete(3, 1)
    assert got_columns(J) == [[[2], [3]], [[1], [3]], [[1], [2]]]
    assert J.partition(2) == [[1], [3]]


def test_chord_deletion_only_splits_column_three():
    # without 3 the chord is the only way from 2 back to 1
    g = named("K")
    J = JointColumns(g)
    before = got_columns(J)
    g.remove_edge(2, 4)
    events = J.delete(2, 4)
    assert set(events) == {3}
    assert J.partition(3) == [[1], [2], [4]]
    assert got_columns(J)[:2] + got_columns(J)[3:] == before[:2] + before[3:]


def test_last_edge_leaves_singletons():
    g = named("K")
    J = JointColumns(g)
    for u, v in list(g.edges()):
        g.remove_edge(u, v)
        J.delete(u, v)
    for w in range(1, 5):
        assert J.partition(w) == [[x] for x in range(1, 5) if x != w]


def test_query_examples():
    J = JointColumns(named("K"))
    assert J.same(1, 4, 3)
    assert not JointColumns(named("C3")).same(1, 3, 2)
    J = JointColumns(named("path"))
    assert not any(J.same(1, 2, w) for w in range(1, 4))


def test_events_report_smaller_parts():
    g = Digraph(4, [(1, 2), (2, 1), (2, 3), (3, 1)])
    J = JointColumns(g)
    old = J.aid(1, 4)
    g.remove_edge(3, 1)
    ev = J.delete(3, 1)
    (entry,) = ev[4]
    assert entry[0] == old and [J.members(4, c) for c in entry[1]] == [{3}]
    assert 1 not in ev and 2 not in ev


def test_even_split_reports_one_part_deterministically():
    results = []
    for _ in range(2):
        g = Digraph(3, [(1, 2), (2, 1)])
        J = JointColumns(g)
        g.remove_edge(1, 2)
        ev = J.delete(1, 2)
        (entry,) = ev[3]
        results.append([sorted(J.members(3, c)) for c in entry[1]])
    assert results[0] == results[1] == [[2]]


def test_untouched_column_has_no_events():
    g = Digraph(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    J = JointColumns(g)
    g.remove_edge(1, 2)
    ev = J.delete(1, 2)
    assert set(ev) == {3, 4}


def test_all_three_vertex_graphs_every_order():
    pairs = [(u, v) for u in range(1, 4) for v in range(1, 4) if u != v]
    runs = 0
    for k in range(len(pairs) + 1):
        for es in combinations(pairs, k):
            g = Digraph(3, es)
            for order in permutations(es):
                run_order(g, order)
                runs += 1
    assert runs == sum(math.perm(6, k) for k in range(7))


def test_random_four_vertex_graphs():
    rng = random.Random(4)
    for _ in range(1000):
        g = rand_graph(rng, 4, rng.randint(0, 12))
        order = list(g.edges())
        rng.shuffle(order)
        run_order(g, order)


@given(graph_and_order(max_n=11, max_m=40))
def test_joint_matches_naive(case):
    g, order = case
    a, b = g.copy(), g.copy()
    J, N = JointColumns(a), NaiveColumns(b)
    for u, v in order:
        a.remove_edge(u, v)
        b.remove_edge(u, v)
        ej, en = J.delete(u, v), N.delete(u, v)
        assert got_columns(J) == got_columns(N)
        assert set(ej) == set(en)
        for w in range(1, g.n + 1):
            assert J.count(w) == N.count(w)
            if J.count(w):
                assert J.sizes(w) == N.sizes(w)
            assert J.scc_of(w) == N.scc_of(w)


@given(graph_and_order(max_n=9))
def test_forest_tracks_sccs(case):
    g, order = case
    h = g.copy()
    f = SccForest(h)
    for u, v in order:
        h.remove_edge(u, v)
        f.delete(u, v)
        assert f.groups() == oracle.scc_partition(h)


@pytest.mark.parametrize("n", [16, 32, 64])
def test_moves_stay_logarithmic(n):
    rng = random.Random(n)
    g = strongly_connected(n, 4 * n, rng)
    J = JointColumns(g, check_build=False)
    order = list(g.edges())
    rng.shuffle(order)
    for u, v in order:
        g.remove_edge(u, v)
        J.delete(u, v)
    assert J.max_moves() <= math.log2(n)


def test_make_columns_rejects_unknown_mode():
    with pytest.raises(ValueError):
        make_columns(Digraph(1), "fast")
