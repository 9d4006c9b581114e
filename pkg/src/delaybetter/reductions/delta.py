"""Translations between DB and δ-DB.

DB embeds into δ-DB by choosing δ at least the largest deadline. The other
direction replaces every usable edge by a gadget whose demands pin the edge
label into its allowed window ``[t, t+δ]``.

Undirected gadget for a usable edge (u, v, t), u < v, all times shifted by +1
so that t' = t + 1 >= 2:

* hubs ``uv_i`` for i in [t', t'+δ] and a sink ``v'``;
* δ parallel lanes ``u_j - v_j`` next to the original edge, which is lane 0;
* entry edges from every hub to every lane start (u and each u_j), initial i-1;
* exit edges from every lane end (v and each v_j) to ``v'``;
* demands (uv_i, v', i+1).

A demand (uv_i, v', i+1) can only be met by a three-hop walk labelled i-1, i,
i+1, so the δ+1 demands need δ+1 lanes carrying distinct labels in
[t', t'+δ]. There are exactly δ+1 lanes, so the original edge carries one of
them. Walks that enter or leave the gadget through u or v arrive no earlier
than the original edge would deliver, so demands of the source instance gain
nothing.

Directed gadget for a usable edge (u, v, t): the edge becomes u -> uv -> v
(first half starting at 2t, second half at 2t+1), with a trailhead u' -> u and
an exit uv -> v'. The hermit demand (u', v', 2t+2δ+1) caps the first half at
2t+2δ. Source demands (a, b, d) become (a, b, 2d+1).

Edges whose label exceeds every deadline can never be used and are copied
without a gadget.
"""

from __future__ import annotations

import math
from typing import Mapping

from ..model import Delaying, Instance, ProblemKind
from .base import Builder, ReductionError, ReductionOutput, fresh


def reduce_db_to_delta(inst: Instance) -> Instance:
    """Same graph and demands with δ set to the largest deadline."""
    if inst.kind is not ProblemKind.DB:
        raise ReductionError("expected a DB instance", "WRONG_KIND")
    return Instance(inst.graph, inst.demands, inst.t_max)


def _require_delta(inst: Instance):
    if inst.kind is not ProblemKind.DELTA_DB:
        raise ReductionError("expected a DELTA_DB instance", "WRONG_KIND")


def _ename(k: int, part: str) -> str:
    return f"#e{k}.{part}"


def reduce_delta_to_db_undirected(inst: Instance) -> ReductionOutput:
    _require_delta(inst)
    g = inst.graph
    if g.directed:
        raise ReductionError("undirected gadget needs an undirected instance", "DIRECTED_INPUT")
    delta, tmax = inst.delta, inst.t_max
    taken = set(g.vertices)
    b = Builder(directed=False)
    for v in g.vertices:
        b.vertex(v, "original", v)

    usable = [k for k, e in enumerate(g.edges) if e.time <= tmax]
    # original edges first, then lanes and exits, entry edges last
    for k, (u, v, t) in enumerate(g.edges):
        b.edge(u, v, t + 1, "original" if k in usable else "inert", k)
    for k in usable:
        u, v, t = g.edges[k]
        sink = b.vertex(fresh(_ename(k, "sink"), taken), "delta-gadget", k, role="sink")
        b.edge(v, sink, 1, "delta-gadget", k, role="exit", lane=0)
        for j in range(1, delta + 1):
            a = b.vertex(fresh(_ename(k, f"u{j}"), taken), "delta-gadget", k, role="lane-start", lane=j)
            z = b.vertex(fresh(_ename(k, f"v{j}"), taken), "delta-gadget", k, role="lane-end", lane=j)
            b.edge(a, z, 1, "delta-gadget", k, role="lane", lane=j)
            b.edge(z, sink, 1, "delta-gadget", k, role="exit", lane=j)
    for k in usable:
        u, v, t = g.edges[k]
        sink = _ename(k, "sink")
        starts = [u] + [_ename(k, f"u{j}") for j in range(1, delta + 1)]
        for i in range(t + 1, t + 1 + delta + 1):
            hub = b.vertex(fresh(_ename(k, f"uv{i}"), taken), "delta-gadget", k, role="hub", slot=i)
            for lane, a in enumerate(starts):
                b.edge(hub, a, i - 1, "delta-gadget", k, role="entry", slot=i, lane=lane)
            b.demand(hub, sink, i + 1, "delta-gadget", k, slot=i)
    for n, d in enumerate(inst.demands):
        b.demand(d.source, d.target, d.deadline + 1, "original", n)
    return b.build()


def reduce_delta_to_db_directed(inst: Instance) -> ReductionOutput:
    _require_delta(inst)
    g = inst.graph
    if not g.directed:
        raise ReductionError("directed gadget needs a directed instance", "UNDIRECTED_INPUT")
    delta, tmax = inst.delta, inst.t_max
    taken = set(g.vertices)
    b = Builder(directed=True)
    for v in g.vertices:
        b.vertex(v, "original", v)
    for k, (u, v, t) in enumerate(g.edges):
        if t > tmax:
            b.edge(u, v, 2 * t, "inert", k)
            continue
        head = b.vertex(fresh(_ename(k, "trailhead"), taken), "delta-gadget", k, role="trailhead")
        mid = b.vertex(fresh(_ename(k, "mid"), taken), "delta-gadget", k, role="mid")
        sink = b.vertex(fresh(_ename(k, "sink"), taken), "delta-gadget", k, role="sink")
        b.edge(u, mid, 2 * t, "delta-gadget", k, role="first-half")
        b.edge(mid, v, 2 * t + 1, "delta-gadget", k, role="second-half")
        b.edge(head, u, 1, "delta-gadget", k, role="trailhead")
        b.edge(mid, sink, 1, "delta-gadget", k, role="exit")
        b.demand(head, sink, 2 * t + 2 * delta + 1, "delta-gadget", k, role="hermit")
    for n, d in enumerate(inst.demands):
        b.demand(d.source, d.target, 2 * d.deadline + 1, "original", n, role="traveler")
    return b.build()


def lifetime_bound(inst: Instance) -> int:
    """The largest deadline the matching gadget may produce."""
    if inst.graph.directed:
        return 2 * inst.t_max + 2 * inst.delta + 1
    return inst.t_max + inst.delta + 2


def _edge_labels(src: Instance, witness) -> list[int]:
    g = src.graph
    if isinstance(witness, Delaying):
        return witness.as_sequence(g)
    return [int(x) for x in witness]


def lift_undirected(src: Instance, out: ReductionOutput, witness) -> Delaying:
    """DB witness for the gadget instance built from a δ-DB witness of ``src``."""
    lab = _edge_labels(src, witness)
    tg = out.instance.graph
    labels = list(tg.initial_labels)
    recs = out.back_map["edges"]
    by_role: dict[tuple, int] = {}
    for i, r in enumerate(recs):
        by_role[(r["gadget"], r["source"], r.get("role"), r.get("slot"), r.get("lane"))] = i
    for k, (u, v, t) in enumerate(src.graph.edges):
        gadget = "original" if ("original", k, None, None, None) in by_role else "inert"
        labels[by_role[(gadget, k, None, None, None)]] = lab[k] + 1
        if gadget == "inert":
            continue
        x = lab[k] + 1
        others = [i for i in range(t + 1, t + 2 + src.delta) if i != x]
        assignment = {0: x, **{j: i for j, i in enumerate(others, start=1)}}
        for lane, slot in assignment.items():
            if lane:
                labels[by_role[("delta-gadget", k, "lane", None, lane)]] = slot
            labels[by_role[("delta-gadget", k, "exit", None, lane)]] = slot + 1
            labels[by_role[("delta-gadget", k, "entry", slot, lane)]] = slot - 1
    return Delaying.from_sequence(tg, labels)


def recover_undirected(src: Instance, out: ReductionOutput, witness: Delaying) -> Delaying:
    """δ-DB witness read off the original edges of a gadget-instance witness."""
    tg = out.instance.graph
    seq = witness.as_sequence(tg)
    labels = list(src.graph.initial_labels)
    for i, r in enumerate(out.back_map["edges"]):
        if r["gadget"] == "original":
            labels[r["source"]] = seq[i] - 1
    return Delaying.from_sequence(src.graph, labels)


def lift_directed(src: Instance, out: ReductionOutput, witness) -> Delaying:
    lab = _edge_labels(src, witness)
    tg = out.instance.graph
    labels = list(tg.initial_labels)
    for i, r in enumerate(out.back_map["edges"]):
        k, role = r["source"], r.get("role")
        if r["gadget"] == "inert":
            labels[i] = 2 * lab[k]
        elif role == "first-half":
            labels[i] = 2 * lab[k]
        elif role in ("second-half", "exit"):
            labels[i] = 2 * lab[k] + 1
    return Delaying.from_sequence(tg, labels)


def recover_directed(src: Instance, out: ReductionOutput, witness: Delaying) -> Delaying:
    """λ(u, v) := ⌈λ*(u, uv) / 2⌉, the first-half label halved and rounded up."""
    seq = witness.as_sequence(out.instance.graph)
    labels = list(src.graph.initial_labels)
    for i, r in enumerate(out.back_map["edges"]):
        if r.get("role") == "first-half":
            labels[r["source"]] = math.ceil(seq[i] / 2)
    return Delaying.from_sequence(src.graph, labels)


def first_half_labels(out: ReductionOutput, witness: Delaying) -> Mapping[int, tuple[int, int, int]]:
    """Per source edge: (first-half, second-half, trailhead) labels of a witness."""
    seq = witness.as_sequence(out.instance.graph)
    parts: dict[int, dict[str, int]] = {}
    for i, r in enumerate(out.back_map["edges"]):
        if r["gadget"] == "delta-gadget":
            parts.setdefault(r["source"], {})[r["role"]] = seq[i]
    return {k: (p["first-half"], p["second-half"], p["trailhead"]) for k, p in parts.items()}
