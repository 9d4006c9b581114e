"""Planar bounded-delay construction from cubic edge-precoloring extension.

Every vertex of the cubic graph becomes a vertex gadget with three colour
layers (B, R, G) of three vertices each, one per neighbour. Every edge (u, v)
with u in A becomes up to three edge-gadget vertices uv_B, uv_R, uv_G joining
the green layer of u to the blue layer of v through bold edges whose times
encode the colour. A traveler (u, v, 19) per edge must pick one of them, and
the hermits of each vertex gadget leave room for exactly one traveler of each
colour.

A bold time-edge (x, y, t) is pinned at time t by a chain of t-1 fresh
vertices ending in x, labelled 1..t-1, plus the demand (first chain vertex,
y, t).
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Mapping, Optional

from ..model import Delaying
from .base import Builder, ReductionError, ReductionOutput
from .cubic import PrecoloredCubicGraph, edge_id, extends, is_proper
from .schedule import COLORS, DEFAULT_SCHEDULE, PlanarSchedule


def _layer(v: str, c: str, i: int) -> str:
    return f"#{v}.{c}{i}"


def _src(v: str, c: str) -> str:
    return f"#{v}.s{c}"


def _mid(u: str, v: str, c: str) -> str:
    return f"#{u}~{v}.{c}"


class _PlanarBuilder(Builder):
    def __init__(self, directed: bool, bounded: bool):
        super().__init__(directed)
        self.bounded = bounded

    def bold(self, x: str, y: str, t: int, owner: str):
        """Bold edge (x, y, t) with its pinning chain and demand."""
        init = (lambda s: s) if self.bounded else (lambda s: 1)
        chain = [f"#{x}>{y}.{k}" for k in range(1, t)]
        for k, name in enumerate(chain, start=1):
            self.vertex(name, "bold-chain", owner, bold=[x, y, t], step=k)
        walk = chain + [x]
        for k in range(len(chain)):
            self.edge(walk[k], walk[k + 1], init(k + 1), "bold-chain", owner,
                      intended=k + 1, bold=[x, y, t])
        self.edge(x, y, init(t), "bold", owner, intended=t)
        self.demand(walk[0], y, t, "bold", owner, bold=[x, y, t])

    def spoke(self, x: str, y: str, side: str, owner: str, schedule: PlanarSchedule, **info):
        init = 1
        if self.bounded:
            init = schedule.a_initial if side == "A" else schedule.b_initial
        self.edge(x, y, init, f"spoke-{side}", owner, **info)


def reduce_cbpepe_to_delta_db(
    g: PrecoloredCubicGraph,
    bounded: bool = True,
    directed: bool = False,
    schedule: PlanarSchedule = DEFAULT_SCHEDULE,
) -> ReductionOutput:
    """Build the DelayBetter instance for ``g``.

    ``bounded=True`` gives the δ-DB instance (bold edges at their times,
    spokes at the schedule's initial labels, δ from the schedule);
    ``bounded=False`` gives the DB instance whose initial labels are all 1.
    """
    if not isinstance(g, PrecoloredCubicGraph):
        raise ReductionError("expected a PrecoloredCubicGraph")
    s = schedule
    b = _PlanarBuilder(directed, bounded)
    for v in g.A + g.B:
        side = "A" if v in g.A else "B"
        b.vertex(v, f"vertex-{side}", v, role="centre")
        for c in COLORS:
            b.vertex(_src(v, c), f"vertex-{side}", v, role="hermit-source", color=c)
            for i in (1, 2, 3):
                b.vertex(_layer(v, c, i), f"vertex-{side}", v, role="layer", color=c, index=i)

    for u in g.A:
        for ci, c in enumerate(COLORS):
            b.bold(_src(u, c), u, s.a_source[ci], u)
            b.bold(_layer(u, c, 1), _layer(u, c, 2), s.a_chain[ci][0], u)
            b.bold(_layer(u, c, 2), _layer(u, c, 3), s.a_chain[ci][1], u)
        for i in (1, 2, 3):
            b.spoke(u, _layer(u, "B", i), "A", u, s, index=i, step=0)
            b.spoke(_layer(u, "B", i), _layer(u, "R", i), "A", u, s, index=i, step=1)
            b.spoke(_layer(u, "R", i), _layer(u, "G", i), "A", u, s, index=i, step=2)

    for u, v in g.edges:
        owner = f"{u}-{v}"
        j, i = g.index_of(u, v), g.index_of(v, u)
        pre = g.precolor.get(edge_id(u, v))
        for ci, c in enumerate(COLORS):
            if pre is not None and pre != c:
                continue
            m = b.vertex(_mid(u, v, c), "edge", owner, color=c)
            b.bold(_layer(u, "G", j), m, s.edge_in[ci], owner)
            b.bold(m, _layer(v, "B", i), s.edge_out[ci], owner)

    for v in g.B:
        for ci, c in enumerate(COLORS):
            chain = [_src(v, c)] + [_layer(v, c, i) for i in (1, 2, 3)]
            for k in range(3):
                b.bold(chain[k], chain[k + 1], s.b_chain[ci][k], v)
        for i in (1, 2, 3):
            b.spoke(_layer(v, "B", i), _layer(v, "R", i), "B", v, s, index=i, step=0)
            b.spoke(_layer(v, "R", i), _layer(v, "G", i), "B", v, s, index=i, step=1)
            b.spoke(_layer(v, "G", i), v, "B", v, s, index=i, step=2)

    for u in g.A:
        for ci, c in enumerate(COLORS):
            b.demand(_src(u, c), _layer(u, c, 3), s.a_hermit[ci], "hermit", u, color=c)
    for v in g.B:
        for ci, c in enumerate(COLORS):
            b.demand(_src(v, c), v, s.b_hermit[ci], "hermit", v, color=c)
    for u, v in g.edges:
        b.demand(u, v, s.traveler, "traveler", f"{u}-{v}")
    return b.build(s.delta if bounded else None)


def planar_forward_solution(
    g: PrecoloredCubicGraph,
    out: ReductionOutput,
    coloring: Mapping[frozenset, str],
    schedule: PlanarSchedule = DEFAULT_SCHEDULE,
) -> Delaying:
    """The yes-direction labelling for a proper colouring extending the precolouring.

    Bold edges and their chains take their intended times; every spoke on the
    route of a traveler of colour c takes the schedule's spoke time for c.
    """
    coloring = {edge_id(*tuple(e)): c for e, c in coloring.items()}
    if not is_proper(g, coloring) or not extends(g, coloring):
        raise ReductionError("colouring is not a proper extension of the precolouring",
                             "IMPROPER_COLORING")
    colour_at: dict[tuple[str, int], int] = {}
    for u, v in g.edges:
        ci = COLORS.index(coloring[edge_id(u, v)])
        colour_at[(u, g.index_of(u, v))] = ci
        colour_at[(v, g.index_of(v, u))] = ci
    inst = out.instance
    labels = list(inst.graph.initial_labels)
    for k, rec in enumerate(out.back_map["edges"]):
        kind = rec["gadget"]
        if kind in ("bold", "bold-chain"):
            labels[k] = rec["intended"]
        elif kind in ("spoke-A", "spoke-B"):
            ci = colour_at[(rec["source"], rec["index"])]
            table = schedule.a_spokes if kind == "spoke-A" else schedule.b_spokes
            labels[k] = table[ci][rec["step"]]
    return Delaying.from_sequence(inst.graph, labels)


def structure_report(out: ReductionOutput) -> dict:
    """Max degree and the per-component Euler bound |E| <= 3|V| - 6."""
    g = out.instance.graph
    adj: dict[str, set] = defaultdict(set)
    for u, v, _ in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set = set()
    euler_ok = True
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        m = sum(len(adj[x]) for x in comp) // 2
        if len(comp) >= 3 and m > 3 * len(comp) - 6:
            euler_ok = False
    return {
        "max_degree": max((len(a) for a in adj.values()), default=0),
        "euler_ok": euler_ok,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
    }


def edge_gadget_vertices(out: ReductionOutput, owner: Optional[str] = None) -> dict[str, list[str]]:
    """Edge-gadget vertex names grouped by source edge."""
    groups: dict[str, list[str]] = defaultdict(list)
    for name, rec in out.back_map["vertices"].items():
        if rec["gadget"] == "edge" and (owner is None or rec["source"] == owner):
            groups[rec["source"]].append(name)
    return dict(groups)
