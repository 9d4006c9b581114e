"""Shared plumbing for the engines: configuration, forests and static checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..model import DelayBetterError, EdgeKey, Instance, NoReason, PathDemand, TemporalGraph


class SolverError(DelayBetterError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    branch_budget: int = 10**7
    state_budget: int = 10**8
    jobs: int = 1


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def split_forest(g: TemporalGraph) -> tuple[list[int], list[int]]:
    """(forest edge indices, non-forest edge indices), orientation ignored.

    Edges are scanned in instance order, so the split is deterministic.
    """
    dsu = _DSU(len(g.vertices))
    idx = g.vertex_index
    forest, extra = [], []
    for i, e in enumerate(g.edges):
        (forest if dsu.union(idx[e.u], idx[e.v]) else extra).append(i)
    return forest, extra


def is_forest(g: TemporalGraph) -> bool:
    return not split_forest(g)[1]


class ForestPaths:
    """Unique paths in a forest given by edge indices of ``g`` (orientation ignored)."""

    def __init__(self, g: TemporalGraph, edge_ids):
        self.g = g
        self.adj: dict[str, list[str]] = {v: [] for v in g.vertices}
        for i in edge_ids:
            u, v, _ = g.edges[i]
            self.adj[u].append(v)
            self.adj[v].append(u)
        self._parents: dict[str, dict[str, Optional[str]]] = {}

    def _tree_from(self, root: str) -> dict[str, Optional[str]]:
        if root not in self._parents:
            parent: dict[str, Optional[str]] = {root: None}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            self._parents[root] = parent
        return self._parents[root]

    def path(self, s: str, z: str) -> Optional[list[str]]:
        """Vertex sequence from s to z, or None if they lie in different trees."""
        parent = self._tree_from(z)
        if s not in parent:
            return None
        out = [s]
        while out[-1] != z:
            out.append(parent[out[-1]])
        return out


def hops_of(walk: list[str]) -> tuple[EdgeKey, ...]:
    return tuple(zip(walk, walk[1:]))


def oriented(g: TemporalGraph, walk: list[str]) -> bool:
    """True if every hop of ``walk`` may be traversed in ``g``."""
    if not g.directed:
        return True
    return all((a, b) in g.edge_index for a, b in zip(walk, walk[1:]))


def _reach(g: TemporalGraph, s: str, respect: bool) -> set[str]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v, _ in g.edges:
        adj[u].append(v)
        if not (respect and g.directed):
            adj[v].append(u)
    seen = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def static_reason(inst: Instance) -> Optional[NoReason]:
    """A reason code if some demand is impossible regardless of timing."""
    g = inst.graph
    for d in inst.demands:
        if d.source == d.target or isinstance(d, PathDemand):
            continue
        if d.target not in _reach(g, d.source, respect=True):
            if g.directed and d.target in _reach(g, d.source, respect=False):
                return NoReason.ORIENTATION_BLOCKED
            return NoReason.STATICALLY_UNREACHABLE
    return None


def delta_cap_ok(inst: Instance, labels: dict) -> bool:
    if inst.delta is None:
        return True
    g = inst.graph
    return all(labels[k] <= e.time + inst.delta for k, e in zip(g.keys, g.edges))
