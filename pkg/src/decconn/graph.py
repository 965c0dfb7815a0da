"""Directed multigraph, graph files, static SCCs and static dominators."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import kernels


class GraphError(ValueError):
    """Malformed graph input. ``line`` is 1-based when known."""

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class Digraph:
    """Directed multigraph on vertices 1..n.

    Adjacency is stored as ``out_adj[v][w] = multiplicity`` (and the mirror in
    ``in_adj``); slot 0 of every per-vertex array is unused. Self-loops are
    stored but every connectivity routine skips them.
    """

    __slots__ = ("n", "m", "out_adj", "in_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        self.n = n
        self.m = 0
        self.out_adj: list[dict[int, int]] = [{} for _ in range(n + 1)]
        self.in_adj: list[dict[int, int]] = [{} for _ in range(n + 1)]
        for u, v in edges:
            self.add_edge(u, v)

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} out of range 1..{self.n}")

    def add_edge(self, u: int, v: int, mult: int = 1) -> None:
        self._check(u)
        self._check(v)
        self.out_adj[u][v] = self.out_adj[u].get(v, 0) + mult
        self.in_adj[v][u] = self.in_adj[v].get(u, 0) + mult
        self.m += mult

    def remove_edge(self, u: int, v: int) -> None:
        """Remove one copy of (u, v)."""
        self._check(u)
        self._check(v)
        k = self.out_adj[u].get(v, 0)
        if k == 0:
            raise KeyError((u, v))
        if k == 1:
            del self.out_adj[u][v]
            del self.in_adj[v][u]
        else:
            self.out_adj[u][v] = k - 1
            self.in_adj[v][u] = k - 1
        self.m -= 1

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u <= self.n and self.out_adj[u].get(v, 0) > 0

    def mult(self, u: int, v: int) -> int:
        return self.out_adj[u].get(v, 0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edge copies, sorted."""
        for u in range(1, self.n + 1):
            for v in sorted(self.out_adj[u]):
                for _ in range(self.out_adj[u][v]):
                    yield u, v

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def copy(self) -> "Digraph":
        g = Digraph(self.n)
        g.m = self.m
        g.out_adj = [dict(d) for d in self.out_adj]
        g.in_adj = [dict(d) for d in self.in_adj]
        return g

    def reverse(self) -> "Digraph":
        g = Digraph(self.n)
        g.m = self.m
        g.out_adj = [dict(d) for d in self.in_adj]
        g.in_adj = [dict(d) for d in self.out_adj]
        return g

    def induced(self, verts: Iterable[int]) -> "Digraph":
        """Same vertex range, only edges with both ends in ``verts``."""
        keep = set(verts)
        g = Digraph(self.n)
        for u in keep:
            for v, k in self.out_adj[u].items():
                if v in keep:
                    g.add_edge(u, v, k)
        return g

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Digraph:
    """Parse "n m" followed by m lines "u v". Blank lines and #-comments are skipped."""
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((no, line.split()))
    if not rows:
        raise GraphError("empty graph file", 1)
    no, head = rows[0]
    if len(head) != 2:
        raise GraphError("header must be 'n m'", no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError("header must be two integers", no) from None
    if n < 0 or m < 0:
        raise GraphError("negative count in header", no)
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}", no)
    g = Digraph(n)
    for no, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphError("edge line must be 'u v'", no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError("edge endpoints must be integers", no) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"endpoint out of range 1..{n}", no)
        g.add_edge(u, v)
    return g


def read_graph(path: str) -> Digraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def serialize_graph(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def csr(g: Digraph) -> tuple[list[int], list[int]]:
    """Compressed out-adjacency without self-loops or multiplicities."""
    offs = [0] * (g.n + 2)
    tgts: list[int] = []
    for u in range(1, g.n + 1):
        offs[u] = len(tgts)
        tgts.extend(v for v in g.out_adj[u] if v != u)
    offs[g.n + 1] = len(tgts)
    return offs, tgts


@dataclass
class SccLabeling:
    """``comp[v]`` is a dense component ID for v (slot 0 and removed vertices get -1)."""

    comp: list[int]
    count: int
    members: list[list[int]] = field(default_factory=list)

    def same(self, u: int, v: int) -> bool:
        return self.comp[u] >= 0 and self.comp[u] == self.comp[v]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.members]

    def partition(self) -> list[list[int]]:
        return sorted(sorted(c) for c in self.members)


def scc(g: Digraph, removed: int = 0, arrays: tuple[list[int], list[int]] | None = None) -> SccLabeling:
    """Tarjan SCCs of ``g`` with vertex ``removed`` deleted (0 for none).

    ``arrays`` may pass a precomputed ``csr(g)`` when many vertices are tried in turn.
    """
    offs, tgts = arrays or csr(g)
    comp = kernels.scc_labels(g.n, offs, tgts, removed)
    count = max(comp) + 1 if g.n else 0
    members: list[list[int]] = [[] for _ in range(count)]
    for v in range(1, g.n + 1):
        if comp[v] >= 0:
            members[comp[v]].append(v)
    return SccLabeling(comp, count, members)


def scc_of_subset(adj: list[dict[int, int]], verts: Iterable[int], removed: int = 0) -> list[list[int]]:
    """SCCs of the subgraph induced by ``verts`` minus ``removed``, given out-adjacency ``adj``.

    Components come out in ascending order of their smallest vertex.
    """
    vs = sorted(x for x in verts if x != removed)
    inside = set(vs)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in vs:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on.add(root)
        work = [(root, iter(adj[root]))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w == v or w not in inside:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on.add(w)
                    work.append((w, iter(adj[w])))
                    pushed = True
                    break
                if w in on and index[w] < low[v]:
                    low[v] = index[w]
            if pushed:
                continue
            work.pop()
            if work and low[v] < low[work[-1][0]]:
                low[work[-1][0]] = low[v]
            if low[v] == index[v]:
                c = []
                while True:
                    w = stack.pop()
                    on.discard(w)
                    c.append(w)
                    if w == v:
                        break
                out.append(c)
    out.sort(key=min)
    return out


def reachable(g: Digraph, s: int, removed: int = 0, reverse: bool = False) -> list[bool]:
    """Vertices reachable from ``s`` avoiding ``removed``."""
    seen = [False] * (g.n + 1)
    if s == removed:
        return seen
    adj = g.in_adj if reverse else g.out_adj
    seen[s] = True
    todo = [s]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if not seen[w] and w != removed:
                seen[w] = True
                todo.append(w)
    return seen


class DominatorTree:
    """Rooted tree given by a parent array with O(1) ancestor tests.

    ``parent[v]`` is 0 for the root and for vertices outside the tree.
    """

    def __init__(self, n: int, root: int, parent: list[int], present: list[bool]):
        self.n = n
        self.root = root
        self.parent = parent
        self.present = present
        self.children: list[list[int]] = [[] for _ in range(n + 1)]
        for v in range(1, n + 1):
            if present[v] and v != root:
                self.children[parent[v]].append(v)
        for ch in self.children:
            ch.sort()
        self.pre = [-1] * (n + 1)
        self.size = [0] * (n + 1)
        self.depth = [0] * (n + 1)
        self.order: list[int] = []
        if root and present[root]:
            self._number()

    def _number(self) -> None:
        stack = [self.root]
        while stack:
            v = stack.pop()
            self.pre[v] = len(self.order)
            self.order.append(v)
            if v != self.root:
                self.depth[v] = self.depth[self.parent[v]] + 1
            stack.extend(reversed(self.children[v]))
        for v in reversed(self.order):
            self.size[v] += 1
            if v != self.root:
                self.size[self.parent[v]] += self.size[v]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` is an ancestor of ``b`` (reflexive)."""
        pa = self.pre[a]
        return pa >= 0 and self.pre[b] >= 0 and pa <= self.pre[b] < pa + self.size[a]

    def nca(self, a: int, b: int) -> int:
        while not self.is_ancestor(a, b):
            a = self.parent[a]
        return a

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        return out

    def subtree(self, v: int) -> list[int]:
        p = self.pre[v]
        return self.order[p:p + self.size[v]]

    def dominators(self, v: int) -> list[int]:
        return sorted(self.path_to_root(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DominatorTree):
            return NotImplemented
        return (self.root == other.root and self.present == other.present
                and all(self.parent[v] == other.parent[v]
                        for v in range(1, self.n + 1) if self.present[v]))

    def __repr__(self) -> str:
        pairs = [f"{v}:{self.parent[v]}" for v in self.order[1:]]
        return f"DominatorTree(root={self.root}, {' '.join(pairs)})"


def static_dominators(g: Digraph, s: int) -> DominatorTree:
    """Iterative dominators (Cooper, Harvey, Kennedy) over reverse postorder."""
    n = g.n
    post: list[int] = []
    seen = [False] * (n + 1)
    seen[s] = True
    work = [(s, iter(g.out_adj[s]))]
    while work:
        v, it = work[-1]
        for w in it:
            if not seen[w]:
                seen[w] = True
                work.append((w, iter(g.out_adj[w])))
                break
        else:
            work.pop()
            post.append(v)
    po = [-1] * (n + 1)
    for i, v in enumerate(post):
        po[v] = i
    rpo = post[::-1]
    idom = [0] * (n + 1)
    idom[s] = s

    def meet(a: int, b: int) -> int:
        while a != b:
            while po[a] < po[b]:
                a = idom[a]
            while po[b] < po[a]:
                b = idom[b]
        return a

    changed = True
    while changed:
        changed = False
        for v in rpo[1:]:
            new = 0
            for p in g.in_adj[v]:
                if idom[p]:
                    new = p if new == 0 else meet(p, new)
            if new != idom[v]:
                idom[v] = new
                changed = True
    idom[s] = 0
    return DominatorTree(n, s, idom, seen)
