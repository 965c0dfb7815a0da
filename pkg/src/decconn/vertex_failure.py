"""Single-vertex-failure structures built on the column table.

* ``DecrementalDominators``: dominator tree from ``s`` under edge deletions.
  It keeps columns for G_s, which is G plus an edge v -> s for every v != s.
  There, x dominates v exactly when v and s fall in different SCCs of G_s
  minus x. Every reachable vertex is strongly connected to s in G_s, so the
  SCC of s in G_s is the reachable set.
* ``ResilientComponents``: maximal vertex sets in which no single vertex
  failure separates any pair.
* ``TwoVcs``: maximal 2-vertex-connected subgraphs, found as the resilient
  components of a pruned copy of G.
* ``separating_vertices``: all vertices whose removal separates u and w,
  read off a dominator tree pair of their SCC.
"""
from __future__ import annotations

from collections import Counter, deque

from .graph import Digraph, DominatorTree, static_dominators
from .joint import Columns, SccForest, make_columns
from .partition import SetFamily


class DecrementalDominators:
    def __init__(self, g: Digraph, s: int, mode: str = "joint"):
        self.n = g.n
        self.s = s
        gs = g.copy()
        for v in range(1, g.n + 1):
            if v != s:
                gs.add_edge(v, s)
        self.gs = gs
        self.cols: Columns = make_columns(gs, mode)
        self.tree = static_dominators(g, s)
        self.sid = [self.cols.aid(s, c) if c else -1 for c in range(g.n + 1)]
        self.nsum = 0
        self.deletions = 0

    def delete(self, x: int, y: int) -> None:
        """Delete one copy of (x, y). The caller's own graph is not touched."""
        self.gs.remove_edge(x, y)
        ev = self.cols.delete(x, y)
        self.deletions += 1
        s, cols, old = self.s, self.cols, self.tree
        reach = cols.scc_of(s)
        if not ev and len(reach) == len(old.order):
            return
        gained: Counter[int] = Counter()
        doms: dict[int, list[int]] = {}
        for c, evs in ev.items():
            sid_old, sid_now = self.sid[c], cols.aid(s, c)
            self.sid[c] = sid_now
            if c == s or c not in reach:
                continue
            col = cols.col(c)
            cand: set[int] = set()
            for _, ids in evs:
                for i in ids:
                    cand |= col.classes[i]
            if sid_now != sid_old:
                cand |= col.classes[sid_old]
            lab = col.label
            for w in cand:
                if w != c and w in reach and lab[w] != sid_now and not old.is_ancestor(c, w):
                    gained[w] += 1
                    doms.setdefault(w, []).append(c)
        self.nsum += sum(gained.values())
        if not gained and len(reach) == len(old.order):
            return
        depth = old.depth
        new_depth = {w: depth[w] + gained[w] for w in reach}
        parent = [0] * (self.n + 1)
        present = [False] * (self.n + 1)
        for w in reach:
            present[w] = True
            if w == s:
                continue
            best = old.parent[w]
            for c in doms.get(w, ()):
                if new_depth[c] > new_depth[best]:
                    best = c
            parent[w] = best
        self.tree = DominatorTree(self.n, s, parent, present)

    def reachable(self, v: int) -> bool:
        return self.tree.present[v]

    def dominates(self, x: int, v: int) -> bool | None:
        """None when v is unreachable."""
        if not self.tree.present[v]:
            return None
        if x == v or x == self.s:
            return True
        if not self.tree.present[x]:
            return False
        return not self.cols.same(v, self.s, x)

    def parent(self, v: int) -> int | None:
        """Immediate dominator; 0 for the root, None when unreachable."""
        if not self.tree.present[v]:
            return None
        return self.tree.parent[v]


class ResilientComponents:
    """Vertex-resilient components: maximal sets where every pair survives any single vertex failure."""

    def __init__(self, cols: Columns, forest: SccForest):
        self.cols = cols
        self.forest = forest
        n = cols.n
        self.fam = SetFamily(n, (set(c) for c in forest.part.classes.values()))
        everything = range(1, n + 1)
        for w in everything:
            self.fam.refine(everything, cols.col(w).label.__getitem__, w)

    def update(self) -> None:
        """Apply the change events of the last deletion from both sources."""
        fam = self.fam
        flab = self.forest.part.label
        for _, ids in self.forest.events:
            touched = set().union(*(self.forest.part.classes[i] for i in ids))
            fam.refine(touched, flab.__getitem__)
        for w, evs in self.cols.events.items():
            col = self.cols.col(w)
            touched: set[int] = set()
            for _, ids in evs:
                for i in ids:
                    touched |= col.classes[i]
            fam.refine(touched, col.label.__getitem__, w)

    def components(self) -> list[list[int]]:
        return self.fam.maximal(range(1, self.cols.n + 1))


class TwoVcs:
    """Maximal 2-vertex-connected subgraphs.

    A pruned copy H of G drops, to a fixpoint, every edge whose endpoints
    fall in different SCCs of H minus some third vertex. The resilient
    components of H with more than two vertices are the answer; two-vertex
    components (a pair joined both ways) are reported only on request.
    """

    def __init__(self, g: Digraph, mode: str = "joint"):
        self.h = g.copy()
        self.removed: Counter[tuple[int, int]] = Counter()
        self.cols = make_columns(self.h, mode)
        self.forest = SccForest(self.h)
        self.vrc = ResilientComponents(self.cols, self.forest)
        queue: deque[tuple[int, int]] = deque()
        for c in range(1, g.n + 1):
            lab = self.cols.col(c).label
            for a in range(1, g.n + 1):
                if a == c:
                    continue
                for b in self.h.out_adj[a]:
                    if b != c and b != a and lab[a] != lab[b]:
                        queue.append((a, b))
        self._drain(queue)

    def delete(self, x: int, y: int) -> None:
        """Mirror the deletion of one copy of (x, y) from G."""
        if self.removed[(x, y)] > 0:
            self.removed[(x, y)] -= 1
            return
        queue: deque[tuple[int, int]] = deque()
        self._remove(x, y, queue)
        self._drain(queue)

    def _remove(self, a: int, b: int, queue: deque[tuple[int, int]]) -> None:
        h = self.h
        h.remove_edge(a, b)
        self.cols.delete(a, b)
        self.forest.delete(a, b)
        self.vrc.update()
        for c, evs in self.cols.events.items():
            col = self.cols.col(c)
            lab = col.label
            for _, ids in evs:
                for i in ids:
                    for p in col.classes[i]:
                        for q in h.out_adj[p]:
                            if q != c and q != p and lab[p] != lab[q]:
                                queue.append((p, q))
                        for q in h.in_adj[p]:
                            if q != c and q != p and lab[p] != lab[q]:
                                queue.append((q, p))

    def _drain(self, queue: deque[tuple[int, int]]) -> None:
        while queue:
            a, b = queue.popleft()
            while self.h.mult(a, b) > 0:
                self.removed[(a, b)] += 1
                self._remove(a, b, queue)

    def subgraphs(self, degenerate: bool = False) -> list[list[int]]:
        floor = 2 if degenerate else 3
        return [c for c in self.vrc.components() if len(c) >= floor]


def separating_vertices(same_without, d: DominatorTree, dr: DominatorTree, u: int, w: int) -> list[int]:
    """Vertices whose removal separates u and w, given both dominator trees of their SCC.

    ``same_without(x)`` tells whether u and w stay strongly connected without x.
    """
    found: set[int] = set()
    for tree in (d, dr):
        a = tree.nca(u, w)
        for end in (u, w):
            x = end
            while x != a:
                if x != end:
                    found.add(x)
                x = tree.parent[x]
        x = a
        while True:
            if x not in (u, w):
                if same_without(x):
                    break
                found.add(x)
            if x == tree.root:
                break
            x = tree.parent[x]
    return sorted(found)
