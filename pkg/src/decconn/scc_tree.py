"""Decremental SCC-decomposition trees.

A tree node is either *internal* (it owns one vertex ``vid`` and its children are
the SCCs of its subgraph minus ``vid``) or *external* (a leaf standing for a
strongly connected subgraph with no internal vertex). Every node keeps the
vertex set of its subgraph. An internal node also keeps ``contains``, mapping
each of its vertices to the child holding it, or to the node itself for
``vid``.

The condensed graph of an internal node φ has one vertex per child plus the
split copies φ_out (edges leaving ``vid``) and φ_in (edges entering ``vid``).
A child's in/out degree in that condensed graph lives on the child itself,
since every node has exactly one parent. A child whose in- or out-degree
drops to zero has left the SCC of ``vid`` and is detached.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import scc_of_subset

Adj = list[dict[int, int]]


@dataclass
class TreeStats:
    scans: int = 0
    nodes_created: int = 0
    detached: int = 0


class Node:
    __slots__ = ("vid", "verts", "parent", "children", "contains",
                 "indeg", "outdeg", "sid", "entry")

    def __init__(self, verts: set[int]):
        self.vid = 0
        self.verts = verts
        self.parent: Node | None = None
        self.children: dict[Node, None] = {}
        self.contains: dict[int, Node] | None = None
        self.indeg = 0
        self.outdeg = 0
        self.sid = -1
        self.entry = None

    @property
    def internal(self) -> bool:
        return self.contains is not None

    def __repr__(self) -> str:
        kind = f"v{self.vid}" if self.vid else "ext"
        return f"Node({kind}, {sorted(self.verts)})"


def build(out: Adj, verts: Iterable[int], rank: dict[int, int],
          stats: TreeStats | None = None) -> Node:
    """SCC-decomposition of the strongly connected subgraph on ``verts``.

    Internal vertices are those in ``rank``, picked greedily by lowest rank.
    """
    stats = stats or TreeStats()
    root = Node(set(verts))
    stats.nodes_created += 1
    work = [root]
    while work:
        node = work.pop()
        best = None
        for x in node.verts:
            r = rank.get(x)
            if r is not None and (best is None or r < best[0]):
                best = (r, x)
        if best is None:
            continue
        vid = best[1]
        node.vid = vid
        contains = {vid: node}
        node.contains = contains
        for comp in scc_of_subset(out, node.verts, vid):
            child = Node(set(comp))
            stats.nodes_created += 1
            child.parent = node
            node.children[child] = None
            for a in comp:
                contains[a] = child
            work.append(child)
        _count_degrees(node, out, stats)
    return root


def _count_degrees(node: Node, out: Adj, stats: TreeStats) -> None:
    contains = node.contains
    for a in node.verts:
        ca = contains[a]
        for b, k in out[a].items():
            stats.scans += 1
            cb = contains.get(b)
            if cb is None or cb is ca:
                continue
            if ca is not node:
                ca.outdeg += k
            if cb is not node:
                cb.indeg += k


def _cascade(phi: Node, seeds: Iterable[Node], out: Adj, inn: Adj,
             stats: TreeStats) -> list[Node]:
    """Detach every child of ``phi`` that lost its path from φ_out or to φ_in."""
    contains = phi.contains
    dead: dict[Node, None] = {}
    queue = deque(x for x in seeds
                  if x is not phi and x.parent is phi and (x.indeg <= 0 or x.outdeg <= 0))
    while queue:
        x = queue.popleft()
        if x in dead:
            continue
        dead[x] = None
        for a in x.verts:
            for b, k in out[a].items():
                stats.scans += 1
                cb = contains.get(b)
                if cb is None or cb is x or cb is phi or cb in dead:
                    continue
                cb.indeg -= k
                if cb.indeg <= 0:
                    queue.append(cb)
            for b, k in inn[a].items():
                stats.scans += 1
                cb = contains.get(b)
                if cb is None or cb is x or cb is phi or cb in dead:
                    continue
                cb.outdeg -= k
                if cb.outdeg <= 0:
                    queue.append(cb)
    for x in dead:
        del phi.children[x]
        for a in x.verts:
            del contains[a]
        phi.verts -= x.verts
        x.parent = None
        x.indeg = x.outdeg = 0
    stats.detached += len(dead)
    return list(dead)


def _contrib(p: Node, ca: Node, cb: Node, k: int) -> None:
    if ca is cb:
        return
    if ca is not p:
        ca.outdeg += k
    if cb is not p:
        cb.indeg += k


def fix(phi: Node, detached: list[Node], out: Adj, inn: Adj,
        stats: TreeStats) -> list[Node]:
    """Re-hang nodes detached from ``phi`` one level up, repeatedly.

    ``phi.verts`` must already exclude the detached vertices. Returns the roots
    that now exist in place of the original tree, the original root first.
    """
    while detached:
        p = phi.parent
        if p is None:
            return [phi] + detached
        pc = p.contains
        moved: dict[int, Node] = {}
        for x in detached:
            x.parent = p
            p.children[x] = None
            for a in x.verts:
                moved[a] = x
        for a, x in moved.items():
            pc[a] = x
        for a, x in moved.items():
            for b, k in out[a].items():
                stats.scans += 1
                if b == a:
                    continue
                cb = pc.get(b)
                if cb is None:
                    continue
                _contrib(p, phi, phi if b in moved else cb, -k)
                _contrib(p, x, cb, k)
            for b, k in inn[a].items():
                stats.scans += 1
                if b == a or b in moved:
                    continue
                cb = pc.get(b)
                if cb is None:
                    continue
                _contrib(p, cb, phi, -k)
                _contrib(p, cb, x, k)
        detached = _cascade(p, [phi, *detached], out, inn, stats)
        phi = p
    while phi.parent is not None:
        phi = phi.parent
    return [phi]


def lca(root: Node, u: int, v: int) -> Node:
    """Lowest node whose subgraph holds both u and v."""
    node = root
    while node.contains is not None:
        if node.vid == u or node.vid == v:
            return node
        cu = node.contains[u]
        if cu is not node.contains[v]:
            return node
        node = cu
    return node


def lowest_node(root: Node, v: int) -> Node:
    """The node owning v as internal vertex, or the external leaf holding v."""
    node = root
    while node.contains is not None and node.vid != v:
        node = node.contains[v]
    return node


def delete_edge(root: Node, u: int, v: int, out: Adj, inn: Adj,
                stats: TreeStats) -> list[Node] | None:
    """Update the tree after one copy of (u, v) was removed from the graph.

    Returns None when the tree is untouched, else the list of resulting roots.
    """
    if u == v or u not in root.verts or v not in root.verts:
        return None
    phi = lca(root, u, v)
    if phi.contains is None:
        return None
    cu = phi.contains[u]
    cv = phi.contains[v]
    seeds = []
    if cu is not phi:
        cu.outdeg -= 1
        seeds.append(cu)
    if cv is not phi:
        cv.indeg -= 1
        seeds.append(cv)
    detached = _cascade(phi, seeds, out, inn, stats)
    if not detached:
        return [root]
    return fix(phi, detached, out, inn, stats)


def split_leaf(leaf: Node, parts: list[set[int]], out: Adj, inn: Adj,
               stats: TreeStats) -> tuple[list[Node], list[Node]]:
    """Carve ``parts`` out of external ``leaf`` as new sibling leaves.

    Returns (roots of the tree afterwards, new leaf nodes in ``parts`` order).
    """
    fresh = []
    for ps in parts:
        x = Node(ps)
        leaf.verts -= ps
        fresh.append(x)
    stats.nodes_created += len(fresh)
    if leaf.parent is None:
        return [leaf, *fresh], fresh
    return fix(leaf, list(fresh), out, inn, stats), fresh


def iter_nodes(root: Node):
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(node.children)


def leaves(root: Node) -> list[Node]:
    return [x for x in iter_nodes(root) if x.contains is None]


def internal_count(root: Node) -> int:
    return sum(1 for x in iter_nodes(root) if x.contains is not None)


def dump(root: Node) -> list[str]:
    """One line per node in preorder: ``depth | {v1,...} | internal? | deg(in,out)``."""
    lines = []
    stack = [(root, 0)]
    while stack:
        node, d = stack.pop()
        kind = f"internal {node.vid}" if node.contains is not None else "external"
        vs = ",".join(map(str, sorted(node.verts)))
        lines.append(f"{d} | {{{vs}}} | {kind} | deg({node.indeg},{node.outdeg})")
        kids = sorted(node.children, key=lambda c: min(c.verts), reverse=True)
        stack.extend((c, d + 1) for c in kids)
    return lines


def check(root: Node, out: Adj, scc_fn: Callable[[set[int], int], list[list[int]]] | None = None) -> None:
    """Assert structural invariants, recounting degrees from scratch."""
    for node in iter_nodes(root):
        if node.contains is None:
            assert not node.children, node
            continue
        union = {node.vid}
        for c in node.children:
            assert c.parent is node
            assert not (union & c.verts)
            union |= c.verts
        assert union == node.verts, (node, union)
        for a in node.verts:
            want = node if a == node.vid else next(c for c in node.children if a in c.verts)
            assert node.contains[a] is want
        ind = {c: 0 for c in node.children}
        outd = {c: 0 for c in node.children}
        for a in node.verts:
            ca = node.contains[a]
            for b, k in out[a].items():
                cb = node.contains.get(b)
                if cb is None or cb is ca:
                    continue
                if ca is not node:
                    outd[ca] += k
                if cb is not node:
                    ind[cb] += k
        for c in node.children:
            assert c.indeg == ind[c] and c.outdeg == outd[c], (c, c.indeg, ind[c], c.outdeg, outd[c])
            assert c.indeg > 0 and c.outdeg > 0
        if scc_fn is not None:
            got = sorted(sorted(c.verts) for c in node.children)
            assert got == sorted(sorted(c) for c in scc_fn(node.verts, node.vid))
