"""Exhaustive label search, used as the reference oracle.

Edges are branched on in instance order with values ascending, so the first
witness found is the lexicographically smallest feasible label vector (and
therefore Pareto-minimal). Two tests run at every node:

* the cheapest completion (every open edge at its lower bound) is checked
  exactly; if it works it is the answer for the whole subtree;
* an optimistic relaxation, where each open edge may be used at any time in
  its remaining range independently per demand, must still satisfy every
  demand, otherwise the subtree is cut.
"""

from __future__ import annotations

import heapq
import math
from typing import Optional

from ..model import (
    Delaying,
    DelayBetterError,
    Instance,
    NoReason,
    PathDemand,
    ProblemKind,
    no,
    yes,
)
from ..reach import verify

INF = math.inf


class BudgetExceeded(DelayBetterError):
    code = "BUDGET_EXCEEDED"


def label_bounds(inst: Instance, label_cap: Optional[int] = None) -> tuple[list[int], list[int]]:
    """Per-edge search range. Labels past the last deadline are never useful."""
    g = inst.graph
    cap = inst.t_max if label_cap is None else label_cap
    lo = list(g.initial_labels)
    hi = []
    used = None
    if inst.kind is ProblemKind.PATH_DB:
        used = {g.edge_index[g.key(a, b)] for d in inst.demands for a, b in d.route}
    for i, t in enumerate(lo):
        top = max(t, cap)
        if t > cap or (used is not None and i not in used):
            top = t
        elif inst.delta is not None:
            top = min(top, t + inst.delta)
        hi.append(top)
    return lo, hi


class _Checker:
    """Optimistic and exact feasibility tests over per-edge label ranges."""

    def __init__(self, inst: Instance):
        g = inst.graph
        self.inst = inst
        self.adj = g.out_arcs
        self.n = len(g.vertices)
        idx = g.vertex_index
        self.paths = []
        self.by_source: dict[int, list[tuple[int, int]]] = {}
        for d in inst.demands:
            if d.source == d.target:
                continue
            if isinstance(d, PathDemand):
                self.paths.append(([g.edge_index[g.key(a, b)] for a, b in d.route], d.deadline))
            else:
                self.by_source.setdefault(idx[d.source], []).append((idx[d.target], d.deadline))

    def ok(self, lo: list[int], hi: list[int]) -> bool:
        for route, deadline in self.paths:
            cur = 0
            for e in route:
                cur = max(lo[e], cur + 1)
                if cur > hi[e]:
                    return False
            if cur > deadline:
                return False
        adj = self.adj
        for src, wants in self.by_source.items():
            horizon = max(dl for _, dl in wants)
            arr = [INF] * self.n
            arr[src] = 0
            heap = [(0, src)]
            while heap:
                a, x = heapq.heappop(heap)
                if a > arr[x] or a >= horizon:
                    continue
                for y, e in adj[x]:
                    t = lo[e] if lo[e] > a else a + 1
                    if t <= hi[e] and t < arr[y]:
                        arr[y] = t
                        heapq.heappush(heap, (t, y))
            for z, dl in wants:
                if arr[z] > dl:
                    return False
        return True


def solve_brute_force(
    inst: Instance,
    label_cap: Optional[int] = None,
    state_budget: int = 10**8,
) -> "SolveResult":
    lo, hi = label_bounds(inst, label_cap)
    check = _Checker(inst)
    m = len(lo)
    open_edges = [i for i in range(m) if lo[i] < hi[i]]
    states = 0

    def dfs(k: int) -> Optional[list[int]]:
        nonlocal states
        states += 1
        if states > state_budget:
            raise BudgetExceeded(f"brute force exceeded {state_budget} states")
        if check.ok(lo, lo):
            return list(lo)
        if k == len(open_edges) or not check.ok(lo, hi):
            return None
        e = open_edges[k]
        base, top = lo[e], hi[e]
        try:
            for t in range(base, top + 1):
                lo[e] = hi[e] = t
                found = dfs(k + 1)
                if found is not None:
                    return found
        finally:
            lo[e], hi[e] = base, top
        return None

    found = dfs(0)
    if found is None:
        return no(_no_reason(inst), "brute", states=states)
    witness = Delaying.from_sequence(inst.graph, found)
    verdict = verify(inst, witness)
    assert verdict.accepted, verdict.message
    return yes(witness, verdict.routes, "brute", states=states)


def _no_reason(inst: Instance) -> NoReason:
    from .common import static_reason

    return static_reason(inst) or NoReason.DEADLINE_UNSATISFIABLE
