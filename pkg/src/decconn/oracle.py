"""Brute-force reference answers straight from the definitions.

Everything here recomputes from scratch with plain searches. It is slow on
purpose and shares no state with the incremental structures, so the tests
and ``--verify`` can compare against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .graph import Digraph, SccLabeling, reachable, scc


def scc_partition(g: Digraph, removed: int = 0) -> list[list[int]]:
    return scc(g, removed).partition()


def scc_without_edge(g: Digraph, u: int, v: int) -> list[list[int]]:
    h = g.copy()
    h.remove_edge(u, v)
    return scc(h).partition()


def dominates(g: Digraph, s: int, x: int, v: int) -> bool | None:
    """Every path from s to v passes through x. None when v is unreachable."""
    if not reachable(g, s)[v]:
        return None
    if x == v or x == s:
        return True
    return not reachable(g, s, removed=x)[v]


def dominator_sets(g: Digraph, s: int) -> dict[int, set[int]]:
    """Dominators of every reachable vertex, by deleting each vertex in turn."""
    reach = reachable(g, s)
    dom = {v: {s, v} for v in range(1, g.n + 1) if reach[v]}
    for x in range(1, g.n + 1):
        if x == s or not reach[x]:
            continue
        cut = reachable(g, s, removed=x)
        for v in dom:
            if v != x and not cut[v]:
                dom[v].add(x)
    return dom


def idoms(g: Digraph, s: int) -> dict[int, int]:
    """Immediate dominator per reachable vertex; the root maps to 0."""
    dom = dominator_sets(g, s)
    out = {s: 0}
    for v, ds in dom.items():
        if v == s:
            continue
        strict = ds - {v}
        # the immediate dominator is the strict dominator with the most dominators
        out[v] = max(strict, key=lambda x: len(dom[x]))
    return out


def check_parents(g: Digraph, s: int, parent: dict[int, int]) -> bool:
    """Verify a claimed dominator tree by the parent and sibling properties.

    Parent: for every edge (x, y) between reachable vertices, d(y) is an ancestor of x.
    Sibling: no vertex dominates one of its siblings.
    Together they hold exactly for the true dominator tree.
    """
    reach = reachable(g, s)
    if set(parent) != {v for v in range(1, g.n + 1) if reach[v]} or parent.get(s) != 0:
        return False
    anc: dict[int, set[int]] = {}
    for v in parent:
        path, x = {v}, v
        while x != s:
            x = parent.get(x, 0)
            if x == 0 or x in path:
                return False
            path.add(x)
        anc[v] = path
    for x in parent:
        for y in g.out_adj[x]:
            if y != s and x != y and parent[y] not in anc[x]:
                return False
    dom = dominator_sets(g, s)
    kids: dict[int, list[int]] = {}
    for v, p in parent.items():
        if v != s:
            kids.setdefault(p, []).append(v)
    for ks in kids.values():
        for a, b in combinations(ks, 2):
            if a in dom[b] or b in dom[a]:
                return False
    return True


def strong_bridges(g: Digraph) -> list[tuple[int, int]]:
    """Edges whose removal increases the number of SCCs (each distinct pair once)."""
    base = scc(g).count
    out = []
    for u in range(1, g.n + 1):
        for v in sorted(g.out_adj[u]):
            if u == v:
                continue
            h = g.copy()
            h.remove_edge(u, v)
            if scc(h).count > base:
                out.append((u, v))
    return out


def articulation_points(g: Digraph) -> list[int]:
    """Vertices whose removal increases the number of SCCs among the remaining vertices."""
    base = scc(g).count
    return [x for x in range(1, g.n + 1) if scc(g, x).count > base]


def separating_vertices(g: Digraph, u: int, w: int) -> list[int]:
    return [x for x in range(1, g.n + 1) if x not in (u, w) and not scc(g, x).same(u, w)]


def separating_edges(g: Digraph, u: int, w: int) -> list[tuple[int, int]]:
    out = []
    for a in range(1, g.n + 1):
        for b in sorted(g.out_adj[a]):
            if a != b and g.out_adj[a][b] == 1:
                h = g.copy()
                h.remove_edge(a, b)
                if not scc(h).same(u, w):
                    out.append((a, b))
    return out


def vertex_resilient(g: Digraph) -> list[list[int]]:
    """Maximal sets whose pairs stay strongly connected under any single vertex removal."""
    labs = [scc(g, x) for x in range(g.n + 1)]
    rel = nx.Graph()
    rel.add_nodes_from(range(1, g.n + 1))
    for u, v in combinations(range(1, g.n + 1), 2):
        if all(labs[x].same(u, v) for x in range(g.n + 1) if x not in (u, v)):
            rel.add_edge(u, v)
    return sorted(sorted(c) for c in nx.find_cliques(rel))


def two_edge_components(g: Digraph) -> list[list[int]]:
    """Classes of the relation: strongly connected after removing any one edge copy."""
    labs = [scc(g)]
    for u in range(1, g.n + 1):
        for v in g.out_adj[u]:
            if u != v:
                h = g.copy()
                h.remove_edge(u, v)
                labs.append(scc(h))
    cls: dict[tuple[int, ...], list[int]] = {}
    for v in range(1, g.n + 1):
        cls.setdefault(tuple(lab.comp[v] for lab in labs), []).append(v)
    return sorted(cls.values())


def _two_vc(g: Digraph, verts: list[int]) -> bool:
    h = g.induced(verts)
    for x in [0, *verts]:
        lab = scc(h, x)
        if len({lab.comp[v] for v in verts if v != x}) != 1:
            return False
    return True


def two_vertex_subgraphs(g: Digraph, degenerate: bool = False) -> list[list[int]]:
    """Maximal 2-vertex-connected induced subgraphs by recursive splitting.

    A 2-vertex-connected subgraph inside block B survives deleting any vertex
    x of B, so it sits inside one SCC of G[B] - x together with x.
    """
    floor = 2 if degenerate else 3
    found: set[frozenset[int]] = set()
    work = [c for c in scc_partition(g) if len(c) >= 2]
    while work:
        b = work.pop()
        h = g.induced(b)
        for x in b:
            lab = scc(h, x)
            comps = {lab.comp[v] for v in b if v != x}
            if len(comps) > 1:
                for cid in comps:
                    part = g.induced(lab.members[cid] + [x])
                    work.extend(c for c in scc_partition(part) if len(c) >= 2)
                break
        else:
            found.add(frozenset(b))
    keep = [b for b in found if len(b) >= floor and not any(b < o for o in found)]
    return sorted(sorted(b) for b in keep)


def two_vertex_subgraphs_exhaustive(g: Digraph, degenerate: bool = False) -> list[list[int]]:
    """Same answer by trying every vertex subset; only for tiny graphs."""
    floor = 2 if degenerate else 3
    good = [frozenset(s) for k in range(floor, g.n + 1)
            for s in combinations(range(1, g.n + 1), k) if _two_vc(g, list(s))]
    return sorted(sorted(b) for b in good if not any(b < o for o in good))


def two_edge_subgraphs(g: Digraph) -> list[list[int]]:
    """Maximal 2-edge-connected induced subgraphs: drop strong bridges and recurse."""
    found = []
    work = [c for c in scc_partition(g) if len(c) >= 2]
    while work:
        b = work.pop()
        h = g.induced(b)
        br = strong_bridges(h)
        if not br:
            found.append(b)
            continue
        for u, v in br:
            while h.has_edge(u, v):
                h.remove_edge(u, v)
        for c in scc(h).partition():
            if len(c) >= 2 and set(c) <= set(b):
                work.append(c)
    return sorted(found)


@dataclass
class OracleReport:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def __str__(self) -> str:
        flag = "ok" if self.ok else "MISMATCH"
        return f"{flag} {self.name}: expected={self.expected!r} actual={self.actual!r}"


class Snapshot:
    """Memoized brute-force answers for one fixed graph."""

    def __init__(self, g: Digraph):
        self.g = g.copy()
        self.base = scc(self.g)
        self._vertex: dict[int, SccLabeling] = {}
        self._edge: dict[tuple[int, int], SccLabeling] = {}

    def without_vertex(self, x: int) -> SccLabeling:
        if x not in self._vertex:
            self._vertex[x] = scc(self.g, x)
        return self._vertex[x]

    def without_edge(self, u: int, v: int) -> SccLabeling:
        key = (u, v)
        if key not in self._edge:
            if u == v or self.g.mult(u, v) > 1:
                self._edge[key] = self.base
            else:
                h = self.g.copy()
                h.remove_edge(u, v)
                self._edge[key] = scc(h)
        return self._edge[key]

    def bridges(self) -> list[tuple[int, int]]:
        g = self.g
        return [(u, v) for u in range(1, g.n + 1) for v in sorted(g.out_adj[u])
                if self.without_edge(u, v).count > self.base.count]

    def separating_vertices(self, u: int, w: int) -> list[int]:
        return [x for x in range(1, self.g.n + 1)
                if x not in (u, w) and not self.without_vertex(x).same(u, w)]

    def separating_edges(self, u: int, w: int) -> list[tuple[int, int]]:
        g = self.g
        return [(a, b) for a in range(1, g.n + 1) for b in sorted(g.out_adj[a])
                if not self.without_edge(a, b).same(u, w)]
