"""Polynomial Path-DelayBetter solver.

The constraints are difference constraints on per-edge labels:

    label(e) >= initial(e)
    label(f) >= label(e) + 1   whenever e immediately precedes f on a demanded path
    label(final edge of d) <= deadline(d)

Their least solution is the longest-path fixed point over the precedence graph,
computed in Kahn order. It is integral and pointwise minimal, so the instance
is feasible iff that fixed point meets every deadline.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .model import (
    Delaying,
    DelayBetterError,
    EdgeKey,
    Instance,
    NoReason,
    PathDemand,
    ProblemKind,
    SolveResult,
    no,
    yes,
)


@dataclass(frozen=True)
class PrecedenceGraph:
    nodes: tuple[EdgeKey, ...]
    arcs: frozenset[tuple[EdgeKey, EdgeKey]]
    lower: dict[EdgeKey, int]
    deadline: dict[EdgeKey, float]

    def in_degree(self, e: EdgeKey) -> int:
        return sum(1 for _, f in self.arcs if f == e)


def build_precedence(inst: Instance) -> PrecedenceGraph:
    g = inst.graph
    arcs = set()
    deadline: dict[EdgeKey, float] = {k: math.inf for k in g.keys}
    for d in inst.demands:
        if not isinstance(d, PathDemand):
            raise DelayBetterError("path demands required", "WRONG_KIND")
        keys = [g.key(a, b) for a, b in d.route]
        arcs.update(zip(keys, keys[1:]))
        if keys:
            deadline[keys[-1]] = min(deadline[keys[-1]], d.deadline)
    lower = {k: e.time for k, e in zip(g.keys, g.edges)}
    return PrecedenceGraph(g.keys, frozenset(arcs), lower, deadline)


def least_fixed_point(pg: PrecedenceGraph) -> dict[EdgeKey, int] | None:
    """Least labels satisfying lower bounds and precedence; None on a cycle.

    Ready nodes are taken smallest key first so the result is reproducible.
    """
    succ: dict[EdgeKey, list[EdgeKey]] = {k: [] for k in pg.nodes}
    indeg = {k: 0 for k in pg.nodes}
    for e, f in pg.arcs:
        succ[e].append(f)
        indeg[f] += 1
    label = dict(pg.lower)
    ready = [k for k in pg.nodes if indeg[k] == 0]
    heapq.heapify(ready)
    done = 0
    while ready:
        e = heapq.heappop(ready)
        done += 1
        for f in sorted(succ[e]):
            if label[e] + 1 > label[f]:
                label[f] = label[e] + 1
            indeg[f] -= 1
            if indeg[f] == 0:
                heapq.heappush(ready, f)
    if done < len(pg.nodes):
        return None
    return label


def solve_path_db(inst: Instance) -> SolveResult:
    if inst.kind is not ProblemKind.PATH_DB:
        raise DelayBetterError("solve_path_db needs a PATH_DB instance", "WRONG_KIND")
    pg = build_precedence(inst)
    label = least_fixed_point(pg)
    if label is None:
        return no(NoReason.PRECEDENCE_CYCLE, "pathdb")
    for k, dl in pg.deadline.items():
        if label[k] > dl:
            return no(NoReason.DEADLINE_UNSATISFIABLE, "pathdb")
    g = inst.graph
    routes = {}
    for i, d in enumerate(inst.demands):
        routes[i] = tuple((a, b, label[g.key(a, b)]) for a, b in d.route)
    return yes(Delaying({k: label[k] for k in g.keys}), routes, "pathdb")
