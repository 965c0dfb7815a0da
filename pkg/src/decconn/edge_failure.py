"""Single-edge-failure structures.

Each SCC C with two or more vertices carries an ``InOutPair``: dominator
trees of G[C] and of its reverse, both rooted at a vertex drawn uniformly at
random when C is created. Edge (d(w), w) is a strong bridge exactly when it
is the only edge into w from outside the subtree of w. The same holds
mirrored in the reverse tree. Counters c(w) track that count.

For a strong bridge e = (u, v), the SCCs of G minus e are:
the class of v in G - u, and for every other vertex its class in G - v.
So a partition per bridge is read off columns u and v.
"""
from __future__ import annotations

import random
from collections import Counter

from .graph import Digraph, DominatorTree
from .joint import Columns, SccForest
from .partition import Partition
from .vertex_failure import DecrementalDominators

Edge = tuple[int, int]


def _contrib(tree: DominatorTree, z: int, w: int) -> bool:
    return tree.present[z] and not tree.is_ancestor(w, z)


def count_entering(inn: list[dict[int, int]], tree: DominatorTree, w: int) -> int:
    """Edge copies (z, w) with z reachable and outside the subtree of w."""
    if not tree.present[w] or w == tree.root:
        return 0
    return sum(k for z, k in inn[w].items() if z != w and _contrib(tree, z, w))


def _patch(c: list[int], out: list[dict[int, int]], inn: list[dict[int, int]],
           old: DominatorTree, new: DominatorTree, gone: Edge) -> None:
    """Bring counters c from ``old`` to ``new`` after edge ``gone`` disappeared."""
    moved = [w for w in old.order if not new.present[w] or new.parent[w] != old.parent[w]]
    S: set[int] = set()
    for w in moved:
        if w not in S:
            S.update(old.subtree(w))
    a, b = gone
    if b not in S and a != b and _contrib(old, a, b):
        c[b] -= 1
    for z in S:
        for w, k in out[z].items():
            if w in S or w == z or not new.present[w] or w == new.root:
                continue
            c[w] += k * (_contrib(new, z, w) - _contrib(old, z, w))
    for w in S:
        c[w] = count_entering(inn, new, w)


class InOutPair:
    """Dominator trees of one SCC and its reverse from a shared root, with bridge counters."""

    def __init__(self, g: Digraph, verts, root: int, mode: str = "joint"):
        self.glob = [0, *sorted(verts)]
        self.loc = {v: i for i, v in enumerate(self.glob) if i}
        k = len(self.glob) - 1
        local = Digraph(k)
        for v in self.glob[1:]:
            for w, m in g.out_adj[v].items():
                if w != v and w in self.loc:
                    local.add_edge(self.loc[v], self.loc[w], m)
        self.local = local
        self.root = root
        r = self.loc[root]
        self.fwd = DecrementalDominators(local, r, mode)
        self.rev = DecrementalDominators(local.reverse(), r, mode)
        self.version = 0
        self._views: tuple[int, DominatorTree, DominatorTree] | None = None
        self.recount()

    @property
    def verts(self) -> set[int]:
        t = self.fwd.tree
        return {self.glob[x] for x in t.order}

    def recount(self) -> None:
        g, n = self.local, self.local.n
        self.c = [count_entering(g.in_adj, self.fwd.tree, w) for w in range(n + 1)]
        self.cr = [count_entering(g.out_adj, self.rev.tree, w) for w in range(n + 1)]
        self._bridges()

    def _bridges(self) -> None:
        glob, d, dr = self.glob, self.fwd.tree, self.rev.tree
        out = set()
        for w in d.order[1:]:
            if self.c[w] == 1:
                out.add((glob[d.parent[w]], glob[w]))
        for w in dr.order[1:]:
            if self.cr[w] == 1:
                out.add((glob[w], glob[dr.parent[w]]))
        self.bridges = out
        self.version += 1

    def delete(self, x: int, y: int) -> None:
        a, b = self.loc[x], self.loc[y]
        g = self.local
        g.remove_edge(a, b)
        old, oldr = self.fwd.tree, self.rev.tree
        self.fwd.delete(a, b)
        self.rev.delete(b, a)
        _patch(self.c, g.out_adj, g.in_adj, old, self.fwd.tree, (a, b))
        _patch(self.cr, g.in_adj, g.out_adj, oldr, self.rev.tree, (b, a))
        self._bridges()

    def restrict(self, keep: set[int]) -> None:
        """Cut every local edge with exactly one end in ``keep``; the root must lie in ``keep``."""
        g, loc, glob = self.local, self.loc, self.glob
        inside = {loc[v] for v in keep}
        cut = [(a, b, k) for a in range(1, g.n + 1) for b, k in g.out_adj[a].items()
               if (a in inside) != (b in inside)]
        for a, b, k in cut:
            for _ in range(k):
                g.remove_edge(a, b)
                self.fwd.delete(a, b)
                self.rev.delete(b, a)
        assert {glob[x] for x in self.fwd.tree.order} == keep
        self.recount()

    def check(self) -> None:
        g = self.local
        for w in range(1, g.n + 1):
            assert self.c[w] == count_entering(g.in_adj, self.fwd.tree, w), ("c", w)
            assert self.cr[w] == count_entering(g.out_adj, self.rev.tree, w), ("cr", w)

    def views(self, n: int) -> tuple[DominatorTree, DominatorTree]:
        """Both trees relabeled to global vertex IDs."""
        if self._views is None or self._views[0] != self.version:
            self._views = (self.version, self._relabel(self.fwd.tree, n), self._relabel(self.rev.tree, n))
        return self._views[1], self._views[2]

    def _relabel(self, t: DominatorTree, n: int) -> DominatorTree:
        glob = self.glob
        parent = [0] * (n + 1)
        present = [False] * (n + 1)
        for x in t.order:
            present[glob[x]] = True
            parent[glob[x]] = glob[t.parent[x]] if t.parent[x] else 0
        return DominatorTree(n, self.root, parent, present)


class BridgeCore:
    """Strong bridges of G, kept through one ``InOutPair`` per nontrivial SCC."""

    def __init__(self, g: Digraph, forest: SccForest, rng: random.Random, mode: str = "joint"):
        self.g = g
        self.forest = forest
        self.rng = rng
        self.mode = mode
        self.owner: list[InOutPair | None] = [None] * (g.n + 1)
        self.bridges: set[Edge] = set()
        self.ever: set[Edge] = set()
        self.added: set[Edge] = set()
        self.dropped: set[Edge] = set()
        self.pairs_built = 0
        for grp in forest.part.classes.values():
            p = self._spawn(grp)
            if p is not None:
                self.bridges |= p.bridges
        self.ever |= self.bridges

    def _spawn(self, grp: set[int]) -> InOutPair | None:
        if len(grp) < 2:
            for v in grp:
                self.owner[v] = None
            return None
        p = InOutPair(self.g, grp, self.rng.choice(sorted(grp)), self.mode)
        self.pairs_built += 1
        for v in grp:
            self.owner[v] = p
        return p

    def delete(self, x: int, y: int) -> None:
        """Call after the graph and the forest have both dropped one copy of (x, y)."""
        self.added = set()
        self.dropped = set()
        p = self.owner[x]
        if x == y or p is None or self.owner[y] is not p:
            return
        before = p.bridges
        p.delete(x, y)
        after = set(p.bridges)
        part = self.forest.part
        if part.events:
            (old, ids), = part.events
            keep = part.classes[part.label[p.root]]
            p.restrict(keep)
            after = set(p.bridges)
            for cid in [old, *ids]:
                grp = part.classes[cid]
                if grp is not keep:
                    q = self._spawn(grp)
                    if q is not None:
                        after |= q.bridges
        self.dropped = before - after
        self.added = after - before
        self.bridges -= self.dropped
        self.bridges |= self.added
        self.ever |= self.added

    def pair(self, v: int) -> InOutPair | None:
        return self.owner[v]

    def pairs(self) -> list[InOutPair]:
        seen: dict[int, InOutPair] = {}
        for p in self.owner:
            if p is not None:
                seen[id(p)] = p
        return list(seen.values())

    def check(self) -> None:
        got: set[Edge] = set()
        for p in self.pairs():
            p.check()
            got |= p.bridges
        assert got == self.bridges


def _separating_key(cols: Columns, u: int, v: int):
    lu, lv = cols.col(u).label, cols.col(v).label
    mark = lu[v]
    return lambda x: -1 if lu[x] == mark and x != u else lv[x]


class EdgeFailure:
    """Queries about G minus one edge, plus the 2-edge-connected component partition."""

    def __init__(self, g: Digraph, cols: Columns, forest: SccForest, core: BridgeCore):
        self.g = g
        self.cols = cols
        self.forest = forest
        self.core = core
        self.without: dict[Edge, Partition] = {}
        self.twoecc = Partition(g.n, (set(c) for c in forest.part.classes.values()))
        for e in sorted(core.bridges):
            self._open(e)

    def _open(self, e: Edge) -> None:
        u, v = e
        key = _separating_key(self.cols, u, v)
        groups: dict[int, set[int]] = {}
        for x in range(1, self.g.n + 1):
            groups.setdefault(key(x), set()).add(x)
        pe = Partition(self.g.n, groups.values())
        self.without[e] = pe
        lab = pe.label
        hit = {self.twoecc.label[x] for x in self.forest.part.of(u)}
        for cid in hit:
            self.twoecc.split_by(cid, lab.__getitem__)

    def update(self) -> None:
        """Apply the last deletion; call after columns, forest and core are updated."""
        ecc = self.twoecc
        ecc.events.clear()
        part = self.forest.part
        for _, ids in part.events:
            for i in ids:
                ecc.refine(part.classes[i])
        for e in self.core.dropped:
            self.without.pop(e, None)
        events = self.cols.events
        for e, pe in self.without.items():
            u, v = e
            if e in self.core.added or (u not in events and v not in events):
                continue
            touched: set[int] = set()
            for w, other in ((u, v), (v, u)):
                col = self.cols.col(w)
                for old, ids in events.get(w, ()):
                    for i in ids:
                        touched |= col.classes[i]
                    if w == u and col.label[v] in ids:
                        touched |= col.classes[old]
            if not touched:
                continue
            key = _separating_key(self.cols, u, v)
            pe.events.clear()
            for cid in {pe.label[x] for x in touched}:
                pe.split_by(cid, key)
            for _, ids in pe.events:
                for i in ids:
                    ecc.refine(pe.classes[i])
            pe.events.clear()
        for e in sorted(self.core.added):
            self._open(e)

    # queries

    def _scc_count(self) -> int:
        return self.forest.part.count()

    def _need_edge(self, x: int, y: int) -> None:
        if not self.g.has_edge(x, y):
            raise KeyError((x, y))

    def same_without(self, a: int, b: int, x: int, y: int) -> bool:
        self._need_edge(x, y)
        pe = self.without.get((x, y))
        return (pe or self.forest.part).same(a, b)

    def count_without(self, x: int, y: int) -> int:
        self._need_edge(x, y)
        pe = self.without.get((x, y))
        return (pe or self.forest.part).count()

    def sizes_without(self, x: int, y: int) -> tuple[int, int]:
        self._need_edge(x, y)
        p = self.without.get((x, y)) or self.forest.part
        return p.min_size(), p.max_size()

    def report_without(self, x: int, y: int) -> list[list[int]]:
        self._need_edge(x, y)
        p = self.without.get((x, y)) or self.forest.part
        return p.groups()

    def components(self) -> list[list[int]]:
        return self.twoecc.groups()

    def separating_edges(self, a: int, b: int) -> list[Edge]:
        """Edges whose removal separates a and b, which must be strongly connected."""
        if not self.forest.same(a, b):
            raise ValueError(f"{a} and {b} are not strongly connected")
        if a == b:
            return []
        p = self.core.pair(a)
        d, dr = p.views(self.g.n)
        found: set[Edge] = set()
        bridges = self.core.bridges
        for tree, flip in ((d, False), (dr, True)):
            def edge(q: int) -> Edge:
                return (q, tree.parent[q]) if flip else (tree.parent[q], q)
            last = last_bridge(tree, lambda q: edge(q) in bridges)
            top = tree.nca(a, b)
            for end in (a, b):
                q = last[end]
                while q and q != top and tree.is_ancestor(top, q):
                    found.add(edge(q))
                    q = last[tree.parent[q]]
            q = last[top]
            while q:
                e = edge(q)
                if self.without[e].same(a, b):
                    break
                found.add(e)
                q = last[tree.parent[q]]
        return sorted(found)

    def check(self) -> None:
        from .graph import scc
        for (u, v), pe in self.without.items():
            h = self.g.copy()
            h.remove_edge(u, v)
            assert pe.groups() == scc(h).partition(), (u, v)
        assert set(self.without) == self.core.bridges


def last_bridge(tree: DominatorTree, is_bridge) -> list[int]:
    """For each vertex q, the child end of the deepest bridge edge on the root path to q (0 if none)."""
    last = [0] * (tree.n + 1)
    for q in tree.order[1:]:
        last[q] = q if is_bridge(q) else last[tree.parent[q]]
    return last


class TwoEcs:
    """Maximal 2-edge-connected subgraphs: strong bridges are stripped from a copy until none remain."""

    def __init__(self, g: Digraph, seed: int = 0, mode: str = "joint"):
        self.h = g.copy()
        self.removed: Counter[Edge] = Counter()
        self.forest = SccForest(self.h)
        self.core = BridgeCore(self.h, self.forest, random.Random(seed), mode)
        self._drain()

    def delete(self, x: int, y: int) -> None:
        if self.removed[(x, y)] > 0:
            self.removed[(x, y)] -= 1
            return
        self._remove(x, y)
        self._drain()

    def _remove(self, a: int, b: int) -> None:
        self.h.remove_edge(a, b)
        self.forest.delete(a, b)
        self.core.delete(a, b)

    def _drain(self) -> None:
        while self.core.bridges:
            e = min(self.core.bridges)
            self.removed[e] += 1
            self._remove(*e)

    def subgraphs(self) -> list[list[int]]:
        return [c for c in self.forest.groups() if len(c) >= 2]
