"""One graph under deletions with every structure attached on first use.

Structures are built from the current graph when a query first needs them
and then follow each later deletion in a fixed order.
"""
from __future__ import annotations

import random

from . import oracle
from .edge_failure import BridgeCore, EdgeFailure, TwoEcs
from .graph import Digraph
from .joint import Columns, SccForest, make_columns
from .reducible import ReducibleDominators
from .vertex_failure import DecrementalDominators, ResilientComponents, TwoVcs, separating_vertices

MODES = ("joint", "naive", "reducible")


class ScriptError(ValueError):
    """A command that is well-formed but cannot be applied."""


class Session:
    def __init__(self, g: Digraph, mode: str = "joint", seed: int = 0, source: int | None = None,
                 degenerate: bool = False):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g.copy()
        self.mode = mode
        self.seed = seed
        self.source = source if source is not None else 1
        self.degenerate = degenerate
        self.col_mode = "naive" if mode == "naive" else "joint"
        self.red: ReducibleDominators | None = None
        if mode == "reducible":
            if source is None:
                raise ScriptError("reducible mode needs a 'source s' header")
            self._vertex(source)
            self.red = ReducibleDominators(self.g, source)
        elif g.n:
            self._vertex(self.source)
        self._cols: Columns | None = None
        self._forest: SccForest | None = None
        self._dom: DecrementalDominators | None = None
        self._core: BridgeCore | None = None
        self._ef: EdgeFailure | None = None
        self._vrc: ResilientComponents | None = None
        self._tvc: TwoVcs | None = None
        self._tec: TwoEcs | None = None

    # lazily built structures

    @property
    def cols(self) -> Columns:
        if self._cols is None:
            self._cols = make_columns(self.g, self.col_mode)
        return self._cols

    @property
    def forest(self) -> SccForest:
        if self._forest is None:
            self._forest = SccForest(self.g)
        return self._forest

    @property
    def dom(self) -> DecrementalDominators:
        if self._dom is None:
            self._dom = DecrementalDominators(self.g, self.source, self.col_mode)
        return self._dom

    @property
    def core(self) -> BridgeCore:
        if self._core is None:
            self._core = BridgeCore(self.g, self.forest, random.Random(self.seed), self.col_mode)
        return self._core

    @property
    def ef(self) -> EdgeFailure:
        if self._ef is None:
            self._ef = EdgeFailure(self.g, self.cols, self.forest, self.core)
        return self._ef

    @property
    def vrc(self) -> ResilientComponents:
        if self._vrc is None:
            self._vrc = ResilientComponents(self.cols, self.forest)
        return self._vrc

    @property
    def tvc(self) -> TwoVcs:
        if self._tvc is None:
            self._tvc = TwoVcs(self.g, self.col_mode)
        return self._tvc

    @property
    def tec(self) -> TwoEcs:
        if self._tec is None:
            self._tec = TwoEcs(self.g, self.seed + 1, self.col_mode)
        return self._tec

    def build_all(self) -> None:
        for name in ("cols", "forest", "dom", "core", "ef", "vrc", "tvc", "tec"):
            getattr(self, name)

    # updates

    def _vertex(self, v: int) -> int:
        if not 1 <= v <= self.g.n:
            raise ScriptError(f"vertex {v} out of range 1..{self.g.n}")
        return v

    def _edge(self, u: int, v: int) -> None:
        self._vertex(u)
        self._vertex(v)
        if not self.g.has_edge(u, v):
            raise ScriptError(f"edge ({u},{v}) is not in the graph")

    def delete(self, u: int, v: int) -> None:
        self._edge(u, v)
        self.g.remove_edge(u, v)
        if self.red is not None:
            self.red.delete(u, v)
            return
        if self._cols is not None:
            self._cols.delete(u, v)
        if self._forest is not None:
            self._forest.delete(u, v)
        if self._dom is not None:
            self._dom.delete(u, v)
        if self._core is not None:
            self._core.delete(u, v)
        if self._ef is not None:
            self._ef.update()
        if self._vrc is not None:
            self._vrc.update()
        if self._tvc is not None:
            self._tvc.delete(u, v)
        if self._tec is not None:
            self._tec.delete(u, v)

    # dominators

    def dominates(self, x: int, v: int) -> bool | None:
        self._vertex(x)
        self._vertex(v)
        if self.red is not None:
            return self.red.dominates(x, v)
        return self.dom.dominates(x, v)

    def parent(self, v: int) -> int | None:
        """Immediate dominator, 0 for the source, None when unreachable."""
        self._vertex(v)
        if self.red is not None:
            return self.red.parent(v)
        return self.dom.parent(v)

    def dominator_tree(self):
        return self.red.tree if self.red is not None else self.dom.tree

    # single vertex failure

    def _distinct(self, *vs: int) -> None:
        for v in vs:
            self._vertex(v)
        if len(set(vs)) != len(vs):
            raise ScriptError("arguments must be distinct")

    def same_without_vertex(self, u: int, w: int, x: int) -> bool:
        self._distinct(u, w, x)
        return self.cols.same(u, w, x)

    def count_without_vertex(self, x: int) -> int:
        return self.cols.count(self._vertex(x))

    def sizes_without_vertex(self, x: int) -> tuple[int, int]:
        return self.cols.sizes(self._vertex(x))

    def report_without_vertex(self, x: int) -> list[list[int]]:
        return self.cols.partition(self._vertex(x))

    def separating_vertices(self, u: int, w: int) -> list[int]:
        self._distinct(u, w)
        if not self.forest.same(u, w):
            raise ScriptError(f"{u} and {w} are not strongly connected")
        d, dr = self.core.pair(u).views(self.g.n)
        cols = self.cols
        return separating_vertices(lambda x: cols.same(u, w, x), d, dr, u, w)

    def resilient_components(self) -> list[list[int]]:
        return self.vrc.components()

    def two_vertex_subgraphs(self) -> list[list[int]]:
        return self.tvc.subgraphs(self.degenerate)

    # single edge failure

    def bridges(self) -> list[tuple[int, int]]:
        return sorted(self.core.bridges)

    def same_without_edge(self, u: int, w: int, x: int, y: int) -> bool:
        self._vertex(u)
        self._vertex(w)
        self._edge(x, y)
        return self.ef.same_without(u, w, x, y)

    def count_without_edge(self, x: int, y: int) -> int:
        self._edge(x, y)
        return self.ef.count_without(x, y)

    def sizes_without_edge(self, x: int, y: int) -> tuple[int, int]:
        self._edge(x, y)
        return self.ef.sizes_without(x, y)

    def report_without_edge(self, x: int, y: int) -> list[list[int]]:
        self._edge(x, y)
        return self.ef.report_without(x, y)

    def separating_edges(self, u: int, w: int) -> list[tuple[int, int]]:
        self._distinct(u, w)
        if not self.forest.same(u, w):
            raise ScriptError(f"{u} and {w} are not strongly connected")
        return self.ef.separating_edges(u, w)

    def two_edge_components(self) -> list[list[int]]:
        return self.ef.components()

    def two_edge_subgraphs(self) -> list[list[int]]:
        return self.tec.subgraphs()

    # accounting

    def stats(self) -> dict[str, int]:
        out: dict[str, int] = {}
        if self.red is not None:
            st = self.red.stats
            return {"deletions": st.deletions, "affected": st.affected,
                    "reinits": st.reinits, "scans": st.scans}
        if self._cols is not None:
            out.update(self._cols.stats())
        if self._dom is not None:
            out["n_volume"] = self._dom.nsum
            out.update({f"dom_{k}": v for k, v in self._dom.cols.stats().items() if k in ("scans", "a_rewrites")})
        if self._core is not None:
            out["bridges_live"] = len(self._core.bridges)
            out["bridges_ever"] = len(self._core.ever)
            out["inout_pairs_built"] = self._core.pairs_built
        if self._forest is not None:
            out["forest_scans"] = self._forest.stats.scans
        return out

    # verification

    def verify(self, rng: random.Random | None = None, samples: int = 20) -> list[oracle.OracleReport]:
        """Compare every built structure, and ``samples`` random queries, against brute force."""
        rng = rng or random.Random(0)
        snap = oracle.Snapshot(self.g)
        g = snap.g
        rep: list[oracle.OracleReport] = []

        def add(name: str, want, got) -> None:
            rep.append(oracle.OracleReport(name, want, got))

        if self.red is not None or self._dom is not None:
            t = self.dominator_tree()
            got = {v: t.parent[v] for v in t.order}
            add("dominator-tree", oracle.idoms(g, self.source), got)
        if self.red is not None:
            return rep
        if self._cols is not None:
            for x in range(1, g.n + 1):
                add(f"column {x}", snap.without_vertex(x).partition(), self._cols.partition(x))
        if self._core is not None:
            add("bridges", snap.bridges(), self.bridges())
        if self._vrc is not None:
            add("vrc", oracle.vertex_resilient(g), self.resilient_components())
        if self._ef is not None:
            add("2ecc", oracle.two_edge_components(g), self.two_edge_components())
        if self._tvc is not None:
            add("2vcs", oracle.two_vertex_subgraphs(g, self.degenerate), self.two_vertex_subgraphs())
        if self._tec is not None:
            add("2ecs", oracle.two_edge_subgraphs(g), self.two_edge_subgraphs())
        for _ in range(samples if g.n >= 3 else 0):
            rep.append(self._sample(rng, snap))
        return rep

    def _sample(self, rng: random.Random, snap: oracle.Snapshot) -> oracle.OracleReport:
        g = snap.g
        kind = rng.randrange(10)
        edges = [(u, v) for u in range(1, g.n + 1) for v in g.out_adj[u]]
        if kind >= 5 and not edges:
            kind -= 5
        if kind == 0:
            u, w, x = rng.sample(range(1, g.n + 1), 3)
            return oracle.OracleReport(f"q-conn {u} {w} {x}", snap.without_vertex(x).same(u, w),
                                       self.same_without_vertex(u, w, x))
        if kind == 1:
            x = rng.randint(1, g.n)
            return oracle.OracleReport(f"q-nscc {x}", snap.without_vertex(x).count,
                                       self.count_without_vertex(x))
        if kind == 2:
            x = rng.randint(1, g.n)
            sizes = snap.without_vertex(x).sizes()
            want = (min(sizes), max(sizes)) if sizes else (0, 0)
            return oracle.OracleReport(f"q-sizes {x}", want, self.sizes_without_vertex(x))
        if kind == 3:
            x = rng.randint(1, g.n)
            return oracle.OracleReport(f"q-report {x}", snap.without_vertex(x).partition(),
                                       self.report_without_vertex(x))
        if kind == 4 or kind == 9:
            pairs = [(u, w) for u in range(1, g.n + 1) for w in range(u + 1, g.n + 1) if snap.base.same(u, w)]
            if not pairs:
                return oracle.OracleReport("no connected pair", None, None)
            u, w = rng.choice(pairs)
            if kind == 4:
                return oracle.OracleReport(f"q-seps {u} {w}", snap.separating_vertices(u, w),
                                           self.separating_vertices(u, w))
            return oracle.OracleReport(f"q-seps-e {u} {w}", snap.separating_edges(u, w),
                                       self.separating_edges(u, w))
        x, y = rng.choice(edges)
        lab = snap.without_edge(x, y)
        if kind == 5:
            u, w = rng.randint(1, g.n), rng.randint(1, g.n)
            return oracle.OracleReport(f"q-conn-e {u} {w} {x} {y}", lab.same(u, w),
                                       self.same_without_edge(u, w, x, y))
        if kind == 6:
            return oracle.OracleReport(f"q-nscc-e {x} {y}", lab.count, self.count_without_edge(x, y))
        if kind == 7:
            sizes = lab.sizes()
            return oracle.OracleReport(f"q-sizes-e {x} {y}", (min(sizes), max(sizes)),
                                       self.sizes_without_edge(x, y))
        return oracle.OracleReport(f"q-report-e {x} {y}", lab.partition(), self.report_without_edge(x, y))
