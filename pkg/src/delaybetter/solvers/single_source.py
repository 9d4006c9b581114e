"""DelayBetter when every demand leaves from the same vertex.

The best achievable arrival ``opt(x)`` obeys
``opt(x) = min over edges (w, x) of max(initial(w, x), opt(w) + 1)``
and is computed by a Dijkstra-style search. Labelling each edge of the
resulting arrival tree with the arrival it produces realises every ``opt``
simultaneously, and no delaying can beat ``opt`` anywhere.
"""

from __future__ import annotations

import heapq
import math

from ..model import Delaying, Instance, NoReason, ProblemKind, SolveResult, no, yes
from ..reach import verify
from .common import SolverError, static_reason


def common_source(inst: Instance):
    sources = {d.source for d in inst.demands if d.source != d.target}
    if len(sources) > 1:
        return None
    return next(iter(sources), inst.demands[0].source if inst.demands else None)


def optimal_arrivals(inst: Instance, source: str):
    """(opt per vertex index, tree edge index per vertex index)."""
    g = inst.graph
    n = len(g.vertices)
    opt = [math.inf] * n
    via = [None] * n
    src = g.vertex_index[source]
    opt[src] = 0
    heap = [(0, src)]
    done = [False] * n
    while heap:
        a, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = True
        for y, e in g.out_arcs[x]:
            t0 = g.edges[e].time
            t = max(t0, a + 1)
            if inst.delta is not None and t > t0 + inst.delta:
                continue
            if t < opt[y]:
                opt[y] = t
                via[y] = e
                heapq.heappush(heap, (t, y))
    return opt, via


def solve_db_single_source(inst: Instance) -> SolveResult:
    if inst.kind is ProblemKind.PATH_DB:
        raise SolverError("single-source engine takes DB or DELTA_DB instances", "WRONG_KIND")
    source = common_source(inst)
    if source is None and inst.demands:
        raise SolverError("demands have different sources", "MIXED_SOURCES")
    g = inst.graph
    labels = list(g.initial_labels)
    if source is not None:
        opt, via = optimal_arrivals(inst, source)
        idx = g.vertex_index
        for d in inst.demands:
            if d.source != d.target and opt[idx[d.target]] > d.deadline:
                reason = NoReason.DEADLINE_UNSATISFIABLE
                if opt[idx[d.target]] == math.inf:
                    reason = static_reason(inst) or reason
                return no(reason, "single-source")
        for x, e in enumerate(via):
            if e is not None:
                labels[e] = opt[x]
    witness = Delaying.from_sequence(g, labels)
    verdict = verify(inst, witness)
    assert verdict.accepted, verdict.message
    return yes(witness, verdict.routes, "single-source")
