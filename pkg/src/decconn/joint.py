"""Balanced joint SCC-decomposition and the per-vertex column table built on it.

For every vertex w the structure maintains the SCCs of G minus w ("column w").
Column w assigns each vertex u != w an SCC ID ``aid(u, w)``; the ID of a class
survives splits when the class keeps its largest fragment. ``aid(w, w)`` is -1.

``JointColumns`` maintains the columns through a recursive balanced
decomposition over a power-of-two padded vertex range. ``NaiveColumns`` reruns
Tarjan on G minus w for every w after each deletion and reports identical
change events, so everything layered on top runs unchanged in either mode.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import scc_tree as st
from .graph import Digraph, csr, scc, scc_of_subset
from .partition import Partition
from .scc_tree import Node, TreeStats


def _part_key(vs: set[int]) -> tuple[int, int]:
    return (-len(vs), min(vs))


class ColumnTable:
    """One ``Partition`` per column; ``aid(u, w)`` is the SCC ID of u in G minus w."""

    def __init__(self, n: int):
        self.n = n
        self.cols = [Partition(n) for _ in range(n + 1)]
        # column -> [(old_id, [new_ids])] for the current deletion
        self.events: dict[int, list[tuple[int, list[int]]]] = {}

    def init_column(self, w: int, groups: list[set[int]]) -> list[int]:
        col = self.cols[w]
        return [col.add(grp) for grp in sorted(groups, key=min)]

    def split(self, w: int, old: int, parts: list[set[int]]) -> list[int]:
        ids = self.cols[w].split(old, parts)
        self.events.setdefault(w, []).append((old, ids))
        return ids

    def aid(self, u: int, w: int) -> int:
        return self.cols[w].label[u]

    @property
    def rewrites(self) -> int:
        return sum(c.rewrites for c in self.cols)


class Columns:
    """Interface shared by the joint and naive column providers."""

    n: int
    table: ColumnTable
    g: Digraph

    def aid(self, u: int, w: int) -> int:
        return self.table.cols[w].label[u]

    @property
    def events(self) -> dict[int, list[tuple[int, list[int]]]]:
        return self.table.events

    def delete(self, u: int, v: int) -> dict[int, list[tuple[int, list[int]]]]:
        raise NotImplementedError

    def scc_of(self, w: int) -> set[int]:
        """Vertex set of w's SCC in G."""
        raise NotImplementedError

    def col(self, w: int) -> Partition:
        return self.table.cols[w]

    def same(self, u: int, v: int, w: int) -> bool:
        return self.table.cols[w].same(u, v)

    def count(self, w: int) -> int:
        return self.table.cols[w].count()

    def sizes(self, w: int) -> tuple[int, int]:
        col = self.table.cols[w]
        return col.min_size(), col.max_size()

    def partition(self, w: int) -> list[list[int]]:
        return self.table.cols[w].groups()

    def members(self, w: int, cid: int) -> set[int]:
        return self.table.cols[w].classes[cid]

    def stats(self) -> dict[str, int]:
        return {"a_rewrites": self.table.rewrites}


class NaiveColumns(Columns):
    """Baseline: recompute every column with Tarjan after each deletion."""

    def __init__(self, g: Digraph):
        self.g = g
        self.n = g.n
        self.table = ColumnTable(g.n)
        self.tarjan_runs = 0
        self.scans = 0
        arrays = csr(g)
        for w in range(1, g.n + 1):
            lab = scc(g, w, arrays)
            self.tarjan_runs += 1
            self.scans += g.n + len(arrays[1])
            self.table.init_column(w, [set(c) for c in lab.members])
        self._g_scc = scc(g, 0, arrays)

    def delete(self, u: int, v: int):
        self.table.events.clear()
        arrays = csr(self.g)
        self._g_scc = scc(self.g, 0, arrays)
        tab = self.table
        for w in range(1, self.n + 1):
            comp = scc(self.g, w, arrays).comp
            self.tarjan_runs += 1
            self.scans += self.n + len(arrays[1])
            col = tab.cols[w]
            for cid, members in list(col.classes.items()):
                if len(members) < 2:
                    continue
                groups: dict[int, set[int]] = {}
                for x in members:
                    groups.setdefault(comp[x], set()).add(x)
                if len(groups) > 1:
                    parts = sorted(groups.values(), key=_part_key)
                    tab.split(w, cid, sorted(parts[1:], key=min))
        return tab.events

    def scc_of(self, w: int) -> set[int]:
        lab = self._g_scc
        return set(lab.members[lab.comp[w]])

    def stats(self) -> dict[str, int]:
        return {"a_rewrites": self.table.rewrites, "tarjan_runs": self.tarjan_runs, "scans": self.scans}


class Entry:
    """One SCC of G minus S at some level, with its extension tree and leaf copies."""

    __slots__ = ("tree", "leaves")

    def __init__(self, tree: Node | None = None):
        self.tree = tree
        self.leaves: list[tuple[int, Node]] = []

    @property
    def verts(self) -> set[int]:
        return self.leaves[0][1].verts


class Level:
    __slots__ = ("S", "rank", "kids", "w", "root", "where", "entries", "moves")

    def __init__(self, S: list[int]):
        self.S = S
        self.rank = {x: i for i, x in enumerate(S)}
        self.kids: tuple[Level, Level] | None = None
        self.w = 0
        self.root: Node | None = None
        self.where: dict[int, Entry] = {}
        self.entries: dict[Entry, None] = {}
        self.moves: tuple[dict[int, int], dict[int, int]] = ({}, {})


@dataclass
class JointStats:
    tree: TreeStats = field(default_factory=TreeStats)
    entry_splits: int = 0
    leaf_splits: int = 0


class JointColumns(Columns):
    """Columns maintained by the balanced joint SCC-decomposition."""

    def __init__(self, g: Digraph, check_build: bool = True):
        self.g = g
        self.n = g.n
        self.N = 1 << max(0, math.ceil(math.log2(max(1, g.n))))
        pad = self.N - g.n
        # dummy vertices n+1..N are isolated; their dicts are never written
        self.out = g.out_adj + [{} for _ in range(pad)]
        self.inn = g.in_adj + [{} for _ in range(pad)]
        self.table = ColumnTable(g.n)
        self.st = JointStats()
        self.base: dict[int, Level] = {}
        self.levels: list[Level] = []
        self.check_build = check_build
        self.top = self._build(list(range(1, self.N + 1)))

    # construction

    def _build(self, S: list[int]) -> Level:
        L = Level(S)
        self.levels.append(L)
        if len(S) == 1:
            self._build_base(L, S[0])
            return L
        h = len(S) // 2
        L.kids = (self._build(S[:h]), self._build(S[h:]))
        for side, K in enumerate(L.kids):
            for e in K.entries:
                root = st.build(self.out, set(e.verts), L.rank, self.st.tree)
                root.entry = e
                e.tree = root
                for lf in st.leaves(root):
                    ent = L.where.get(min(lf.verts))
                    if ent is None:
                        ent = Entry()
                        L.entries[ent] = None
                        for x in lf.verts:
                            L.where[x] = ent
                    elif self.check_build:
                        assert ent.verts == lf.verts, "leaf sets of the two halves differ"
                    ent.leaves.append((side, lf))
        if self.check_build:
            for ent in L.entries:
                assert len(ent.leaves) == 2, "entry missing from one half"
        return L

    def _build_base(self, L: Level, w: int) -> None:
        L.w = w
        self.base[w] = L
        leaves = []
        for comp in scc_of_subset(self.out, range(1, self.N + 1)):
            if w in comp:
                L.root = st.build(self.out, comp, {w: 0}, self.st.tree)
                leaves.extend(L.root.children)
            else:
                leaves.append(Node(set(comp)))
                self.st.tree.nodes_created += 1
        for lf in leaves:
            ent = Entry()
            ent.leaves.append((0, lf))
            L.entries[ent] = None
            for x in lf.verts:
                L.where[x] = ent
        if w <= self.n:
            real = sorted((lf for lf in leaves if min(lf.verts) <= self.n), key=lambda x: min(x.verts))
            for lf, cid in zip(real, self.table.init_column(w, [lf.verts for lf in real])):
                lf.sid = cid

    # deletion

    def delete(self, u: int, v: int):
        """Update after one copy of (u, v) was removed from the graph."""
        self.table.events.clear()
        if u != v:
            self._delete(self.top, u, v)
        return self.table.events

    def _delete(self, L: Level, u: int, v: int) -> None:
        e = L.where.get(u)
        if e is not None and L.where.get(v) is e:
            roots = st.delete_edge(e.tree, u, v, self.out, self.inn, self.st.tree)
            if roots is not None and len(roots) > 1:
                self._split_entry(L, e, roots)
            return
        if L.kids is None:
            st.delete_edge(L.root, u, v, self.out, self.inn, self.st.tree)
            return
        self._delete(L.kids[0], u, v)
        self._delete(L.kids[1], u, v)

    def _split_entry(self, L: Level, e: Entry, roots: list[Node]) -> None:
        self.st.entry_splits += 1
        roots = sorted(roots, key=lambda r: _part_key(r.verts))
        keep, rest = roots[0], sorted(roots[1:], key=lambda r: min(r.verts))
        e.tree = keep
        keep.entry = e
        fresh_entries = []
        for r in rest:
            ne = Entry(r)
            r.entry = ne
            L.entries[ne] = None
            for x in r.verts:
                L.where[x] = ne
            fresh_entries.append(ne)
        for side, lf in list(e.leaves):
            new_leaves = self._split_leaf(L, side, lf, [set(r.verts) for r in rest])
            for ne, nl in zip(fresh_entries, new_leaves):
                ne.leaves.append((side, nl))

    def _split_leaf(self, L: Level, side: int, lf: Node, parts: list[set[int]]) -> list[Node]:
        self.st.leaf_splits += 1
        old_sid = lf.sid
        roots, fresh = st.split_leaf(lf, parts, self.out, self.inn, self.st.tree)
        mv = L.moves[side]
        for p in parts:
            for x in p:
                mv[x] = mv.get(x, 0) + 1
        if L.kids is None:
            if L.w <= self.n and old_sid >= 0:
                ids = self.table.split(L.w, old_sid, [nl.verts for nl in fresh])
                for nl, cid in zip(fresh, ids):
                    nl.sid = cid
            return fresh
        if len(roots) > 1:
            K = L.kids[side]
            self._split_entry(K, roots[0].entry, roots)
        return fresh

    # queries and accounting

    def scc_of(self, w: int) -> set[int]:
        return self.base[w].root.verts

    def node_count(self) -> int:
        """Nodes with shared external nodes counted once.

        An external node is shared by both halves of its level and is the same
        node as a trivial (single external node) extension above it, so it is
        counted once at the level where it is extended by a tree with an
        internal root. Internal nodes are counted individually.
        """
        total = 0
        for L in self.levels:
            if L.root is not None:
                total += st.internal_count(L.root)
            for e in L.entries:
                if e.tree is not None and e.tree.contains is not None:
                    total += 1 + st.internal_count(e.tree)
        return total

    def physical_nodes(self) -> int:
        total = 0
        for L in self.levels:
            if L.root is not None:
                total += sum(1 for _ in st.iter_nodes(L.root))
                total += sum(1 for e in L.entries if e.leaves[0][1].parent is None)
            for e in L.entries:
                if e.tree is not None:
                    total += sum(1 for _ in st.iter_nodes(e.tree))
        return total

    def decompositions(self) -> int:
        """Base trees plus one extension per internal level."""
        return len(self.levels)

    def internal_trees(self) -> int:
        """Rooted trees with at least one internal node (base trees and extension trees)."""
        total = len(self.base)
        for L in self.levels:
            total += sum(1 for e in L.entries if e.tree is not None and e.tree.contains is not None)
        return total

    def max_moves(self) -> int:
        return max((c for L in self.levels for mv in L.moves for c in mv.values()), default=0)

    def stats(self) -> dict[str, int]:
        return {
            "a_rewrites": self.table.rewrites,
            "levels": len(self.levels),
            "nodes": self.node_count(),
            "physical_nodes": self.physical_nodes(),
            "internal_trees": self.internal_trees(),
            "max_moves": self.max_moves(),
            "scans": self.st.tree.scans,
            "entry_splits": self.st.entry_splits,
            "leaf_splits": self.st.leaf_splits,
        }

    def check(self) -> None:
        """Assert every tree and membership map against a static recomputation."""
        out = self.out
        for L in self.levels:
            seen: set[int] = set()
            for e in L.entries:
                vs = e.verts
                for _, lf in e.leaves:
                    assert lf.verts == vs and lf.contains is None
                for x in vs:
                    assert L.where[x] is e
                assert not (seen & vs)
                seen |= vs
                if e.tree is not None:
                    assert e.tree.entry is e and e.tree.parent is None and e.tree.verts == vs
                    st.check(e.tree, out)
            if L.kids is None:
                st.check(L.root, out)
                want = sorted(sorted(c) for c in scc_of_subset(out, range(1, self.N + 1), L.w))
                assert sorted(sorted(e.verts) for e in L.entries) == want
            else:
                want = {frozenset(c) for c in scc_of_subset(out, set(range(1, self.N + 1)) - set(L.S))}
                assert {frozenset(e.verts) for e in L.entries} == want
                assert seen == set(range(1, self.N + 1)) - set(L.S)


def make_columns(g: Digraph, mode: str = "joint") -> Columns:
    if mode == "joint":
        return JointColumns(g, check_build=False)
    if mode == "naive":
        return NaiveColumns(g)
    raise ValueError(f"unknown column mode {mode!r}")


class SccForest:
    """SCCs of G itself, kept by full SCC-decompositions (every vertex internal)."""

    def __init__(self, g: Digraph):
        self.g = g
        self.stats = TreeStats()
        rank = {x: x for x in range(1, g.n + 1)}
        self.part = Partition(g.n)
        self.root_of: dict[int, Node] = {}
        for comp in scc_of_subset(g.out_adj, range(1, g.n + 1)):
            root = st.build(g.out_adj, comp, rank, self.stats)
            self.root_of[self.part.add(set(comp))] = root

    @property
    def events(self) -> list[tuple[int, list[int]]]:
        return self.part.events

    def delete(self, u: int, v: int) -> list[tuple[int, list[int]]]:
        """Update after one copy of (u, v) was removed from the graph."""
        part = self.part
        part.events.clear()
        if u == v or not part.same(u, v):
            return part.events
        old = part.label[u]
        roots = st.delete_edge(self.root_of[old], u, v, self.g.out_adj, self.g.in_adj, self.stats)
        if roots is not None and len(roots) > 1:
            roots.sort(key=lambda r: _part_key(r.verts))
            rest = sorted(roots[1:], key=lambda r: min(r.verts))
            self.root_of[old] = roots[0]
            for r, cid in zip(rest, part.split(old, [set(r.verts) for r in rest])):
                self.root_of[cid] = r
        return part.events

    def same(self, u: int, v: int) -> bool:
        return self.part.same(u, v)

    def groups(self) -> list[list[int]]:
        return self.part.groups()
