"""Shared plumbing for reductions: an instance builder that records provenance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..model import DelayBetterError, Demand, Edge, Instance, TemporalGraph


class ReductionError(DelayBetterError):
    code = "INVALID_INPUT"


@dataclass(frozen=True)
class ReductionOutput:
    """A generated instance plus the origin of every vertex, edge and demand.

    ``back_map`` has three sections: ``vertices`` (name -> record), ``edges``
    (one record per instance edge, same order) and ``demands`` (likewise).
    Each record holds at least ``gadget`` and ``source``.
    """

    instance: Instance
    back_map: dict[str, Any] = field(default_factory=dict)

    def edges_of(self, gadget: str, **match) -> list[int]:
        """Indices of edges whose record has this gadget and matching fields."""
        out = []
        for i, rec in enumerate(self.back_map["edges"]):
            if rec["gadget"] == gadget and all(rec.get(k) == v for k, v in match.items()):
                out.append(i)
        return out

    def demands_of(self, gadget: str, **match) -> list[int]:
        out = []
        for i, rec in enumerate(self.back_map["demands"]):
            if rec["gadget"] == gadget and all(rec.get(k) == v for k, v in match.items()):
                out.append(i)
        return out


class Builder:
    """Accumulates a temporal graph with per-object provenance records."""

    def __init__(self, directed: bool):
        self.directed = directed
        self.vertices: dict[str, dict] = {}
        self.edges: list[Edge] = []
        self.edge_recs: list[dict] = []
        self._edge_keys: dict[tuple[str, str], int] = {}
        self.demands: list[Demand] = []
        self.demand_recs: list[dict] = []

    def vertex(self, name: str, gadget: str, source: Any = None, **info) -> str:
        if name not in self.vertices:
            self.vertices[name] = dict(gadget=gadget, source=source, **info)
        return name

    def _key(self, u: str, v: str) -> tuple[str, str]:
        return (u, v) if self.directed or u <= v else (v, u)

    def edge(self, u: str, v: str, t: int, gadget: str, source: Any = None, **info) -> int:
        """Add an edge; a repeated footprint edge keeps its first label and record."""
        k = self._key(u, v)
        if k in self._edge_keys:
            return self._edge_keys[k]
        self._edge_keys[k] = len(self.edges)
        self.edges.append(Edge(u, v, t))
        self.edge_recs.append(dict(gadget=gadget, source=source, u=u, v=v, **info))
        return self._edge_keys[k]

    def demand(self, s: str, z: str, deadline: int, gadget: str, source: Any = None, **info) -> int:
        self.demands.append(Demand(s, z, deadline))
        self.demand_recs.append(dict(gadget=gadget, source=source, **info))
        return len(self.demands) - 1

    def build(self, delta: Optional[int] = None) -> ReductionOutput:
        g = TemporalGraph(self.directed, tuple(self.vertices), tuple(self.edges))
        inst = Instance(g, tuple(self.demands), delta)
        back = dict(vertices=self.vertices, edges=self.edge_recs, demands=self.demand_recs)
        return ReductionOutput(inst, back)


def fresh(name: str, taken) -> str:
    """``name`` itself, refusing to collide with an input vertex."""
    if name in taken:
        raise ReductionError(f"generated name {name!r} collides with an input vertex", "NAME_CLASH")
    return name
