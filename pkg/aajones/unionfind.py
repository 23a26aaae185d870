from __future__ import annotations

from typing import Hashable, Iterable


class UnionFind:
    """Disjoint sets with union by height; nodes are any hashable labels."""

    def __init__(self, nodes: Iterable[Hashable] = ()):
        self.parents: dict = {}
        self.heights: dict = {}
        for v in nodes:
            self.add(v)

    def add(self, v: Hashable) -> None:
        if v not in self.parents:
            self.parents[v] = v
            self.heights[v] = 1

    def join(self, v1: Hashable, v2: Hashable) -> bool:
        """Merge the sets of v1 and v2. Returns False if they were already joined."""
        r1 = self.root(v1)
        r2 = self.root(v2)
        if r1 == r2:
            return False
        h1 = self.heights[r1]
        h2 = self.heights[r2]
        if h1 <= h2:
            self.parents[r1] = r2
            self.heights[r2] = max(h2, h1 + 1)
        else:
            self.parents[r2] = r1
            self.heights[r1] = max(h1, h2 + 1)
        return True

    def root(self, v: Hashable) -> Hashable:
        while self.parents[v] != v:
            # path halving
            self.parents[v] = self.parents[self.parents[v]]
            v = self.parents[v]
        return v

    def count(self) -> int:
        return sum(1 for v, p in self.parents.items() if v == p)

    def groups(self) -> dict:
        """Map each node to a dense group index, numbered by first appearance."""
        index: dict = {}
        result: dict = {}
        for v in self.parents:
            r = self.root(v)
            if r not in index:
                index[r] = len(index)
            result[v] = index[r]
        return result


__all__ = ["UnionFind"]
