"""Decremental dominators for reducible flow graphs.

Edges (v, w) with w dominating v never affect dominance and stay that way as
edges disappear, so they are stripped up front. What remains is acyclic when
the input is reducible. Each deletion then finds the affected vertices in
topological order and hangs them off the critical path below the child ``c``
of d(y) that now dominates y.

Per vertex state:

* ``in_sib[v]``: distinct siblings u of v with a derived edge (u, v)
* ``dout[u]``: siblings v with a derived edge (u, v)
* ``dom_edge[v]``: whether (d(v), v) is still an edge
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .graph import Digraph, DominatorTree, static_dominators


class NotReducible(ValueError):
    pass


def strip_back_edges(g: Digraph, s: int) -> tuple[Digraph, list[tuple[int, int]]]:
    """Drop edges into a dominator of their source, and edges from unreachable vertices.

    Raises ``NotReducible`` when the reachable remainder still has a cycle.
    """
    d = static_dominators(g, s)
    work = Digraph(g.n)
    stripped = []
    for v, w in g.edges():
        if d.present[v] and not d.is_ancestor(w, v):
            work.add_edge(v, w)
        elif d.present[v]:
            stripped.append((v, w))
    ts = TopologicalSorter({w: set(work.in_adj[w]) for w in range(1, g.n + 1) if d.present[w]})
    try:
        ts.prepare()
    except CycleError as exc:
        raise NotReducible(f"not reducible from {s}: cycle {exc.args[1]}") from None
    return work, stripped


def compute_derived_edges(tree: DominatorTree, edges: list[tuple[int, int]]) -> list[int]:
    """Source end of the derived edge for each (v, w), or 0 when w is an ancestor of v.

    One preorder pass with the current root path, so linear in n plus the edge count.
    """
    out = [0] * len(edges)
    by_src: dict[int, list[int]] = {}
    for i, (v, w) in enumerate(edges):
        by_src.setdefault(v, []).append(i)
    depth, parent = tree.depth, tree.parent
    path = [0] * (tree.n + 1)
    for v in tree.order:
        path[depth[v]] = v
        for i in by_src.get(v, ()):
            w = edges[i][1]
            if tree.is_ancestor(w, v):
                continue
            out[i] = v if v == parent[w] else path[depth[w]]
    return out


@dataclass
class ReducibleStats:
    deletions: int = 0
    affected: int = 0
    reinits: int = 0
    scans: int = 0


class ReducibleDominators:
    def __init__(self, g: Digraph, s: int):
        self.n = g.n
        self.s = s
        self.orig = g.copy()
        self.work, _ = strip_back_edges(g, s)
        self.stats = ReducibleStats()
        self.stamp = [0] * (self.n + 1)
        self.aff_anc = [0] * (self.n + 1)
        self.gen = 0
        self._init()

    def _init(self) -> None:
        n, work = self.n, self.work
        self.tree = t = static_dominators(work, self.s)
        for v in range(1, n + 1):
            if not t.present[v]:
                for w in list(work.out_adj[v]):
                    while work.has_edge(v, w):
                        work.remove_edge(v, w)
        self.in_sib = [0] * (n + 1)
        self.dout: list[set[int]] = [set() for _ in range(n + 1)]
        self.dom_edge = [False] * (n + 1)
        self._derive(t.order[1:])

    def _derive(self, targets) -> None:
        """Rebuild derived-edge bookkeeping for edges entering ``targets``."""
        t, work = self.tree, self.work
        edges = [(v, w) for w in targets for v in work.in_adj[w]]
        self.stats.scans += len(edges)
        srcs: dict[int, set[int]] = {w: set() for w in targets}
        for (v, w), vb in zip(edges, compute_derived_edges(t, edges)):
            if vb:
                srcs[w].add(vb)
        for w, vs in srcs.items():
            p = t.parent[w]
            self.dom_edge[w] = p in vs
            vs.discard(p)
            self.in_sib[w] = len(vs)
            for vb in vs:
                self.dout[vb].add(w)

    def delete(self, x: int, y: int) -> None:
        """Delete one copy of (x, y) from the flow graph."""
        self.orig.remove_edge(x, y)
        self.stats.deletions += 1
        work = self.work
        if work.mult(x, y) <= self.orig.mult(x, y):
            return
        work.remove_edge(x, y)
        t = self.tree
        if not work.in_adj[y]:
            self.stats.reinits += 1
            self._init()
            return
        d = t.parent
        dy = d[y]
        inn = work.in_adj[y]
        if x == dy:
            self.dom_edge[y] = dy in inn
        else:
            f = x
            while d[f] != dy:
                f = d[f]
            self.stats.scans += len(inn)
            if not any(t.is_ancestor(f, v) for v in inn):
                self.in_sib[y] -= 1
                self.dout[f].discard(y)
        if self.dom_edge[y] or self.in_sib[y] >= 2:
            return
        z = 0
        for v in inn:
            z = v if not z else t.nca(z, v)
        if z == dy:
            return
        c = z
        while d[c] != dy:
            c = d[c]
        self._cascade(y, z, c)

    def _cascade(self, y: int, z: int, c: int) -> None:
        t, work = self.tree, self.work
        self.gen += 1
        gen = self.gen
        newp = {y: z}
        path = []
        u = z
        while u != c:
            path.append(u)
            u = t.parent[u]
        path.reverse()
        path.append(y)
        marked: set[int] = set(self.dout[c])
        queue: deque[int] = deque()

        def mark(w: int) -> None:
            for v in t.subtree(w):
                self.stamp[v] = gen
                self.aff_anc[v] = w

        def update_in_siblings(w: int) -> None:
            for q in self.dout[w]:
                if q in marked:
                    self.in_sib[q] -= 1
                    if self.in_sib[q] == 1 and not self.dom_edge[q]:
                        queue.append(q)
                else:
                    marked.add(q)
                    self.dout[c].add(q)
            self.dout[w] = set()

        def below(v: int, u: int) -> bool:
            # v in the new subtree of critical-path vertex u
            if self.stamp[v] == gen:
                p = self.aff_anc[v]
                if p == u:
                    return True
                q = newp[p]
                if q == y:
                    return True
                return u != y and t.is_ancestor(u, q)
            return u != y and t.is_ancestor(u, v)

        def locate(w: int) -> int:
            above = c
            for u in path:
                self.stats.scans += len(work.in_adj[w])
                if any(not below(v, u) for v in work.in_adj[w]):
                    return above
                above = u
            return y

        mark(y)
        update_in_siblings(y)
        while queue:
            w = queue.popleft()
            mark(w)
            newp[w] = locate(w)
            update_in_siblings(w)
        self.stats.affected += len(newp)
        for w in newp:
            self.dout[c].discard(w)
        parent = list(t.parent)
        for w, p in newp.items():
            parent[w] = p
        self.tree = DominatorTree(self.n, self.s, parent, t.present)
        self._derive(list(newp))

    def parent(self, v: int) -> int | None:
        if not self.tree.present[v]:
            return None
        return self.tree.parent[v]

    def dominates(self, x: int, v: int) -> bool | None:
        if not self.tree.present[v]:
            return None
        return self.tree.is_ancestor(x, v)

    def check(self) -> None:
        """Recount the bookkeeping from scratch and compare."""
        keep = (self.in_sib, self.dout, self.dom_edge)
        scans = self.stats.scans
        n = self.n
        self.in_sib = [0] * (n + 1)
        self.dout = [set() for _ in range(n + 1)]
        self.dom_edge = [False] * (n + 1)
        self._derive(self.tree.order[1:])
        t = self.tree
        for v in t.order[1:]:
            assert keep[0][v] == self.in_sib[v], ("in_sib", v, keep[0][v], self.in_sib[v])
            assert keep[2][v] == self.dom_edge[v], ("dom_edge", v)
        for v in t.order:
            assert keep[1][v] == self.dout[v], ("dout", v, keep[1][v], self.dout[v])
        self.stats.scans = scans
        assert self.tree == static_dominators(self.orig, self.s)
