"""Strict temporal reachability, solution verification and lifetime compression."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .model import (
    DelayBetterError,
    Delaying,
    Demand,
    EdgeKey,
    Hop,
    Instance,
    PathDemand,
    ProblemKind,
    TemporalGraph,
)

INF = math.inf

LabelsLike = Union[None, Delaying, Mapping[EdgeKey, int], Sequence[int]]


def label_sequence(g: TemporalGraph, labels: LabelsLike) -> list[int]:
    """Normalise any labels representation to a list aligned with ``g.edges``."""
    if labels is None:
        return list(g.initial_labels)
    if isinstance(labels, Delaying):
        return labels.as_sequence(g)
    if isinstance(labels, Mapping):
        return [labels[k] for k in g.keys]
    seq = list(labels)
    if len(seq) != len(g.edges):
        raise ValueError(f"expected {len(g.edges)} labels, got {len(seq)}")
    return seq


@dataclass(frozen=True)
class ArrivalTable:
    source: str
    arrival: Mapping[str, float]
    parent: Mapping[str, tuple[str, int]] = field(repr=False)

    def reachable_by(self, t: float) -> set[str]:
        return {v for v, a in self.arrival.items() if a <= t}

    def route(self, target: str, g: TemporalGraph, labels: Sequence[int]) -> Optional[tuple[Hop, ...]]:
        """The foremost path found to ``target`` as (from, to, time) hops."""
        if self.arrival.get(target, INF) == INF:
            return None
        hops = []
        v = target
        while v != self.source:
            u, i = self.parent[v]
            hops.append((u, v, labels[i]))
            v = u
        return tuple(reversed(hops))


def _arrivals(g: TemporalGraph, labels: Sequence[int], src: int):
    n = len(g.vertices)
    arr = [INF] * n
    parent = [None] * n
    arr[src] = 0
    order = sorted(range(len(labels)), key=labels.__getitem__)
    idx = g.vertex_index
    edges = g.edges
    for i in order:
        t = labels[i]
        u, v = idx[edges[i].u], idx[edges[i].v]
        # an arrival set at time t can never satisfy arr <= t-1, so one bucket
        # of equal-time edges cannot chain
        if arr[u] <= t - 1 and arr[v] > t:
            arr[v] = t
            parent[v] = (u, i)
        if not g.directed and arr[v] <= t - 1 and arr[u] > t:
            arr[u] = t
            parent[u] = (v, i)
    return arr, parent


def earliest_arrivals(g: TemporalGraph, labels: LabelsLike, source: str) -> ArrivalTable:
    """Earliest strict-temporal arrival time from ``source`` to every vertex.

    Time-edges are scanned in nondecreasing time order; an edge (u, v, t)
    relaxes v to t when u was reached by time t - 1.
    """
    if source not in g.vertex_index:
        raise DelayBetterError(f"unknown vertex {source!r}", "UNKNOWN_VERTEX")
    seq = label_sequence(g, labels)
    arr, parent = _arrivals(g, seq, g.vertex_index[source])
    names = g.vertices
    return ArrivalTable(
        source,
        {names[i]: a for i, a in enumerate(arr)},
        {names[i]: (names[p[0]], p[1]) for i, p in enumerate(parent) if p is not None},
    )


# ------------------------------------------------------------------ verifier


@dataclass(frozen=True)
class DemandReport:
    index: int
    arrival: float
    deadline: int
    ok: bool


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    condition: Optional[str] = None  # first violated: "delaying", "delta", "demand", "labels"
    message: str = ""
    demands: tuple[DemandReport, ...] = ()
    routes: Mapping[int, tuple[Hop, ...]] = field(default_factory=dict)

    def __bool__(self):
        return self.accepted


def path_arrival(g: TemporalGraph, labels: Sequence[int], d: PathDemand) -> float:
    """Arrival along the prescribed route, or inf if its labels do not increase."""
    last = 0
    for a, b in d.route:
        t = labels[g.edge_index[g.key(a, b)]]
        if t <= last:
            return INF
        last = t
    return last


def verify(inst: Instance, cand: LabelsLike) -> Verdict:
    """Check a candidate relabelling against every condition of the instance."""
    g = inst.graph
    try:
        seq = label_sequence(g, cand)
    except (KeyError, ValueError) as exc:
        return Verdict(False, "labels", f"candidate is not total over the edges: {exc}")
    for (u, v, t0), t in zip(g.edges, seq):
        if isinstance(t, bool) or not isinstance(t, int):
            return Verdict(False, "labels", f"label of ({u}, {v}) is not an integer")
        if t < t0:
            return Verdict(False, "delaying", f"edge ({u}, {v}) moved earlier: {t} < {t0}")
    if inst.kind is ProblemKind.DELTA_DB:
        for (u, v, t0), t in zip(g.edges, seq):
            if t > t0 + inst.delta:
                return Verdict(
                    False, "delta", f"edge ({u}, {v}) delayed by {t - t0} > {inst.delta}"
                )
    reports = []
    routes = {}
    tables: dict[str, ArrivalTable] = {}
    first_bad = None
    for i, d in enumerate(inst.demands):
        if d.source == d.target:
            arr = 0
            routes[i] = ()
        elif isinstance(d, PathDemand):
            arr = path_arrival(g, seq, d)
            if arr != INF:
                routes[i] = tuple(
                    (a, b, seq[g.edge_index[g.key(a, b)]]) for a, b in d.route
                )
        else:
            if d.source not in tables:
                tables[d.source] = earliest_arrivals(g, seq, d.source)
            table = tables[d.source]
            arr = table.arrival[d.target]
            if arr != INF:
                routes[i] = table.route(d.target, g, seq)
        ok = arr <= d.deadline
        reports.append(DemandReport(i, arr, d.deadline, ok))
        if not ok and first_bad is None:
            first_bad = i
    if first_bad is not None:
        d = inst.demands[first_bad]
        return Verdict(
            False,
            "demand",
            f"demand {first_bad} ({d.source} -> {d.target}) arrives at "
            f"{reports[first_bad].arrival} > {d.deadline}",
            tuple(reports),
        )
    return Verdict(True, None, "", tuple(reports), routes)


# --------------------------------------------------------------- compression


@dataclass(frozen=True)
class TimeRemap:
    """Order-preserving map between original and compressed times.

    ``anchors`` are (original, compressed) pairs; a compressed time s lifts to
    ``orig + (s - new)`` for the last anchor with ``new <= s``.
    """

    anchors: tuple[tuple[int, int], ...]
    original: Instance
    dropped: tuple[int, ...] = ()  # edge indices of the original graph removed as unusable

    def forward(self, t: int) -> int:
        olds = [a for a, _ in self.anchors]
        j = bisect.bisect_right(olds, t) - 1
        if j >= 0 and olds[j] == t:
            return self.anchors[j][1]
        raise KeyError(f"{t} is not an explicit time of the original instance")

    def lift_time(self, s: int) -> int:
        news = [b for _, b in self.anchors]
        j = bisect.bisect_right(news, s) - 1
        old, new = self.anchors[max(j, 0)]
        return old + (s - new)

    def lift(self, witness: Delaying) -> Delaying:
        g = self.original.graph
        out = {}
        for i, k in enumerate(g.keys):
            if k in witness.labels:
                out[k] = self.lift_time(witness.labels[k])
            else:
                out[k] = g.edges[i].time
        return Delaying(out)

    def lift_routes(self, routes: Mapping[int, tuple[Hop, ...]]) -> dict[int, tuple[Hop, ...]]:
        return {i: tuple((a, b, self.lift_time(t)) for a, b, t in hops) for i, hops in routes.items()}


def explicit_times(inst: Instance) -> list[int]:
    times = {d.deadline for d in inst.demands}
    times.update(e.time for e in inst.graph.edges)
    return sorted(times)


def compress_lifetime(inst: Instance) -> tuple[Instance, TimeRemap]:
    """Equisatisfiable instance whose times are polynomial in the instance size.

    DB / Path-DB: every gap between consecutive explicit times (0 included as
    an anchor) longer than |E| shrinks to |E|. Delta-DB: only times within
    delta of an explicit time are kept, renumbered consecutively from 1.
    DB and delta-DB edges whose label exceeds every deadline are dropped.
    """
    g = inst.graph
    t_max = inst.t_max
    keep = list(range(len(g.edges)))
    if inst.kind is not ProblemKind.PATH_DB:
        keep = [i for i in keep if g.edges[i].time <= t_max]
    explicit = sorted({0} | {d.deadline for d in inst.demands} | {g.edges[i].time for i in keep})

    if inst.kind is ProblemKind.DELTA_DB:
        relevant = sorted({0} | {t + k for t in explicit for k in range(inst.delta + 1)})
        anchors = tuple((t, r) for r, t in enumerate(relevant))
    else:
        cap = max(len(keep), 1)
        anchors_l = [(0, 0)]
        for a, b in zip(explicit, explicit[1:]):
            anchors_l.append((b, anchors_l[-1][1] + min(b - a, cap)))
        anchors = tuple(anchors_l)
    lookup = dict(anchors)

    edges = tuple(g.edges[i]._replace(time=lookup[g.edges[i].time]) for i in keep)
    graph = TemporalGraph(g.directed, g.vertices, edges)
    demands = []
    for d in inst.demands:
        if isinstance(d, PathDemand):
            demands.append(PathDemand(d.source, d.target, lookup[d.deadline], d.route))
        else:
            demands.append(Demand(d.source, d.target, lookup[d.deadline]))
    dropped = tuple(i for i in range(len(g.edges)) if i not in set(keep))
    out = Instance(graph, tuple(demands), inst.delta, inst.kind)
    return out, TimeRemap(anchors, inst, dropped)


__all__ = [
    "ArrivalTable",
    "DemandReport",
    "INF",
    "TimeRemap",
    "Verdict",
    "compress_lifetime",
    "earliest_arrivals",
    "explicit_times",
    "label_sequence",
    "path_arrival",
    "verify",
]
