"""Edge-precoloring extension on cubic bipartite graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from ..model import InstanceError
from .base import ReductionError
from .schedule import COLORS

MAX_UNCOLORED = 16
UNCOLORED = "U"


def edge_id(u: str, v: str) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class PrecoloredCubicGraph:
    """Cubic bipartite graph; ``adj[v]`` lists v's neighbours in a fixed order.

    ``precolor`` maps an edge (as a frozenset of its endpoints) to B, R, G or U;
    absent edges are uncoloured.
    """

    A: tuple[str, ...]
    B: tuple[str, ...]
    adj: Mapping[str, tuple[str, str, str]]
    precolor: Mapping[frozenset, str]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))
        object.__setattr__(self, "adj", {v: tuple(ns) for v, ns in self.adj.items()})
        pre = {edge_id(*sorted(e)): c for e, c in self.precolor.items() if c != UNCOLORED}
        object.__setattr__(self, "precolor", pre)
        self._check()

    def _check(self):
        a, b = set(self.A), set(self.B)
        if a & b:
            raise ReductionError("A and B overlap")
        if set(self.adj) != a | b:
            raise ReductionError("adjacency must list exactly the vertices of A and B")
        for v, ns in self.adj.items():
            if len(ns) != 3 or len(set(ns)) != 3:
                raise ReductionError(f"vertex {v!r} does not have three distinct neighbours")
            other = b if v in a else a
            for w in ns:
                if w not in other:
                    raise ReductionError(f"edge {v!r}-{w!r} does not cross the bipartition")
                if v not in self.adj[w]:
                    raise ReductionError(f"adjacency is not symmetric at {v!r}-{w!r}")
        edges = {edge_id(u, v) for u, v in self.edges}
        for e, c in self.precolor.items():
            if e not in edges:
                raise ReductionError(f"precoloured pair {sorted(e)} is not an edge")
            if c not in COLORS:
                raise ReductionError(f"unknown colour {c!r}")
        n, m = len(self.adj), len(edges)
        if n >= 3 and m > 2 * n - 4:
            raise ReductionError("too many edges for a planar bipartite graph")

    @property
    def edges(self) -> list[tuple[str, str]]:
        """(a, b) with a in A, b in B, in A-order then adjacency order."""
        return [(u, v) for u in self.A for v in self.adj[u]]

    def index_of(self, v: str, w: str) -> int:
        """1-based position of ``w`` in ``v``'s neighbour list."""
        return self.adj[v].index(w) + 1

    def to_obj(self) -> dict:
        return {
            "A": list(self.A),
            "B": list(self.B),
            "adj": {v: list(ns) for v, ns in self.adj.items()},
            "precolor": {"-".join(sorted(e)): c for e, c in self.precolor.items()},
        }


def parse_cubic(text: str | bytes) -> PrecoloredCubicGraph:
    try:
        doc = json.loads(text)
        pre = {}
        for key, c in doc.get("precolor", {}).items():
            u, v = key.split("-")
            pre[edge_id(u, v)] = c
        return PrecoloredCubicGraph(doc["A"], doc["B"], doc["adj"], pre)
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InstanceError(f"bad precoloured cubic graph: {exc}", "MALFORMED") from exc


def cube_graph() -> PrecoloredCubicGraph:
    """The 3-cube with its natural bipartition by bit parity."""
    names = {i: format(i, "03b") for i in range(8)}
    A = [names[i] for i in range(8) if bin(i).count("1") % 2 == 0]
    B = [names[i] for i in range(8) if bin(i).count("1") % 2 == 1]
    adj = {names[i]: [names[i ^ (1 << k)] for k in range(3)] for i in range(8)}
    return PrecoloredCubicGraph(A, B, adj, {})


def is_proper(g: PrecoloredCubicGraph, coloring: Mapping[frozenset, str]) -> bool:
    for v, ns in g.adj.items():
        seen = [coloring.get(edge_id(v, w)) for w in ns]
        if None in seen or len(set(seen)) != 3:
            return False
    return True


def extends(g: PrecoloredCubicGraph, coloring: Mapping[frozenset, str]) -> bool:
    return all(coloring.get(e) == c for e, c in g.precolor.items())


def solve_cbp_epe_brute(g: PrecoloredCubicGraph) -> tuple[bool, Optional[dict]]:
    """Backtracking over the uncoloured edges; returns (extendable, colouring)."""
    todo = [edge_id(u, v) for u, v in g.edges if edge_id(u, v) not in g.precolor]
    if len(todo) > MAX_UNCOLORED:
        raise ReductionError(f"{len(todo)} uncoloured edges exceed {MAX_UNCOLORED}", "TOO_LARGE")
    color = dict(g.precolor)
    used: dict[str, set] = {v: set() for v in g.adj}
    for e, c in color.items():
        for v in e:
            if c in used[v]:
                return False, None
            used[v].add(c)

    def place(k: int) -> bool:
        if k == len(todo):
            return True
        e = todo[k]
        u, v = tuple(e)
        for c in COLORS:
            if c in used[u] or c in used[v]:
                continue
            color[e] = c
            used[u].add(c)
            used[v].add(c)
            if place(k + 1):
                return True
            used[u].discard(c)
            used[v].discard(c)
            del color[e]
        return False

    if place(0):
        return True, color
    return False, None
