"""Decremental vertex partitions and overlapping set families."""
from __future__ import annotations

import heapq
from typing import Iterable


class Partition:
    """Labels of a shrinking-only partition with live member sets.

    Classes only split. ``split`` moves parts out of an existing class into
    fresh IDs and logs the event in ``events`` until the owner clears it.
    Member sets may be shared with the caller, who may already have removed
    the moved vertices from the kept set.
    """

    __slots__ = ("label", "classes", "next_id", "_min", "_max", "events", "rewrites")

    def __init__(self, size: int, groups: Iterable[set[int]] = ()):
        self.label = [-1] * (size + 1)
        self.classes: dict[int, set[int]] = {}
        self.next_id = 0
        self._min: list[tuple[int, int]] = []
        self._max: list[tuple[int, int]] = []
        self.events: list[tuple[int, list[int]]] = []
        self.rewrites = 0
        for grp in sorted(groups, key=min):
            self.add(grp)

    def add(self, grp: set[int]) -> int:
        cid = self.next_id
        self.next_id += 1
        self.classes[cid] = grp
        lab = self.label
        for x in grp:
            lab[x] = cid
        self.rewrites += len(grp)
        heapq.heappush(self._min, (len(grp), cid))
        heapq.heappush(self._max, (-len(grp), cid))
        return cid

    def split(self, old: int, parts: list[set[int]]) -> list[int]:
        kept = self.classes[old]
        for p in parts:
            kept -= p
        ids = [self.add(p) for p in parts]
        heapq.heappush(self._min, (len(kept), old))
        heapq.heappush(self._max, (-len(kept), old))
        self.events.append((old, ids))
        return ids

    def split_by(self, old: int, key) -> list[int]:
        """Split class ``old`` by ``key(x)``; the largest group keeps the ID."""
        groups: dict[object, set[int]] = {}
        for x in self.classes[old]:
            groups.setdefault(key(x), set()).add(x)
        if len(groups) < 2:
            return []
        parts = sorted(groups.values(), key=lambda g: (-len(g), min(g)))
        return self.split(old, sorted(parts[1:], key=min))

    def refine(self, block: Iterable[int]) -> None:
        """Separate ``block`` from the rest of every class it meets."""
        hit: dict[int, set[int]] = {}
        for x in block:
            c = self.label[x]
            if c >= 0:
                hit.setdefault(c, set()).add(x)
        for c, inter in hit.items():
            if len(inter) < len(self.classes[c]):
                self.split(c, [inter])

    def same(self, u: int, v: int) -> bool:
        return self.label[u] >= 0 and self.label[u] == self.label[v]

    def count(self) -> int:
        return len(self.classes)

    def _peek(self, heap: list[tuple[int, int]], sign: int) -> int:
        cl = self.classes
        while heap:
            size, cid = heap[0]
            grp = cl.get(cid)
            if grp is not None and len(grp) == sign * size:
                return sign * size
            heapq.heappop(heap)
        return 0

    def min_size(self) -> int:
        return self._peek(self._min, 1)

    def max_size(self) -> int:
        return self._peek(self._max, -1)

    def members(self, cid: int) -> set[int]:
        return self.classes[cid]

    def of(self, v: int) -> set[int]:
        return self.classes[self.label[v]]

    def groups(self) -> list[list[int]]:
        return sorted(sorted(c) for c in self.classes.values())

    def check(self) -> None:
        for cid, grp in self.classes.items():
            assert grp, cid
            for x in grp:
                assert self.label[x] == cid


class SetFamily:
    """Overlapping vertex sets refined by splitting; used for vertex-resilient components.

    A block B refined by a partition of B minus a pivot p becomes the pieces,
    each with p added back when p was in B. Blocks with fewer than two
    vertices are dropped.
    """

    def __init__(self, size: int, blocks: Iterable[set[int]] = ()):
        self.blocks: dict[int, set[int]] = {}
        self.of: list[set[int]] = [set() for _ in range(size + 1)]
        self.next_id = 0
        self.splits = 0
        for b in blocks:
            self._add(set(b))

    def _add(self, b: set[int]) -> None:
        if len(b) < 2:
            return
        bid = self.next_id
        self.next_id += 1
        self.blocks[bid] = b
        for x in b:
            self.of[x].add(bid)

    def _remove(self, bid: int) -> set[int]:
        b = self.blocks.pop(bid)
        for x in b:
            self.of[x].discard(bid)
        return b

    def refine(self, touched: Iterable[int], key, pivot: int = 0) -> None:
        """Split every block meeting ``touched`` by ``key`` over its vertices other than ``pivot``."""
        bids: set[int] = set()
        for x in touched:
            bids |= self.of[x]
        for bid in bids:
            b = self.blocks[bid]
            groups: dict[object, set[int]] = {}
            for x in b:
                if x != pivot:
                    groups.setdefault(key(x), set()).add(x)
            if len(groups) < 2:
                continue
            self._remove(bid)
            self.splits += 1
            for grp in groups.values():
                if pivot in b:
                    grp.add(pivot)
                self._add(grp)

    def maximal(self, universe: Iterable[int]) -> list[list[int]]:
        """Inclusion-maximal blocks plus singletons for uncovered vertices, sorted."""
        uniq = sorted({frozenset(b) for b in self.blocks.values()}, key=len, reverse=True)
        keep: list[frozenset[int]] = []
        for b in uniq:
            if not any(b <= k for k in keep):
                keep.append(b)
        covered = set().union(*keep) if keep else set()
        out = [sorted(b) for b in keep]
        out.extend([x] for x in universe if x not in covered)
        return sorted(out)
