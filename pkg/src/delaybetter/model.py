"""Core data types for delay-management instances and their JSON interchange format.

Vertices are opaque strings. Undirected edges are stored with their endpoints in
lexicographic order so every edge has exactly one key in a labels map.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Any, Iterable, Mapping, NamedTuple, Optional, Sequence

EdgeKey = tuple[str, str]


class DelayBetterError(Exception):
    """Base error; ``code`` is a stable machine-readable reason."""

    code = "ERROR"

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InstanceError(DelayBetterError):
    """Raised by the parsers. ``code`` is MALFORMED (syntax) or INVALID (invariants)."""

    def __init__(self, message: str, code: str = "INVALID", where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message, code)


class ProblemKind(str, enum.Enum):
    DB = "DB"
    DELTA_DB = "DELTA_DB"
    PATH_DB = "PATH_DB"


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"


class NoReason(str, enum.Enum):
    DEADLINE_UNSATISFIABLE = "DEADLINE_UNSATISFIABLE"
    PRECEDENCE_CYCLE = "PRECEDENCE_CYCLE"
    STATICALLY_UNREACHABLE = "STATICALLY_UNREACHABLE"
    ORIENTATION_BLOCKED = "ORIENTATION_BLOCKED"
    DELTA_CAP_EXCEEDED = "DELTA_CAP_EXCEEDED"


class Edge(NamedTuple):
    u: str
    v: str
    time: int


@dataclass(frozen=True)
class TemporalGraph:
    directed: bool
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(self._canon(Edge(*e)) for e in self.edges)
        )
        self._check()

    def _canon(self, e: Edge) -> Edge:
        if not self.directed and e.v < e.u:
            return Edge(e.v, e.u, e.time)
        return e

    def _check(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InstanceError("duplicate vertex identifier", where="vertices")
        known = set(self.vertices)
        seen = set()
        for i, (u, v, t) in enumerate(self.edges):
            where = f"edges[{i}]"
            if u not in known or v not in known:
                raise InstanceError(f"unknown endpoint in ({u!r}, {v!r})", where=where)
            if u == v:
                raise InstanceError(f"self-loop at {u!r}", where=where)
            if isinstance(t, bool) or not isinstance(t, int) or t < 1:
                raise InstanceError(f"time must be an integer >= 1, got {t!r}", where=where)
            if (u, v) in seen:
                raise InstanceError(f"repeated edge ({u!r}, {v!r})", where=where)
            seen.add((u, v))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[EdgeKey, int]:
        return {(e.u, e.v): i for i, e in enumerate(self.edges)}

    @cached_property
    def keys(self) -> tuple[EdgeKey, ...]:
        return tuple((e.u, e.v) for e in self.edges)

    @cached_property
    def initial_labels(self) -> tuple[int, ...]:
        return tuple(e.time for e in self.edges)

    @property
    def lifetime(self) -> int:
        return max((e.time for e in self.edges), default=0)

    def key(self, u: str, v: str) -> EdgeKey:
        """Canonical key of the edge between ``u`` and ``v`` (KeyError if absent)."""
        k = (u, v) if self.directed or u <= v else (v, u)
        if k not in self.edge_index:
            raise KeyError(f"no edge ({u!r}, {v!r})")
        return k

    def has_edge(self, u: str, v: str) -> bool:
        k = (u, v) if self.directed or u <= v else (v, u)
        return k in self.edge_index

    @cached_property
    def arcs(self) -> tuple[tuple[int, int, int], ...]:
        """Traversable (tail, head, edge-index) triples over dense vertex indices."""
        idx = self.vertex_index
        out = []
        for i, (u, v, _) in enumerate(self.edges):
            out.append((idx[u], idx[v], i))
            if not self.directed:
                out.append((idx[v], idx[u], i))
        return tuple(out)

    @cached_property
    def out_arcs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex index: (head, edge-index) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for a, b, i in self.arcs:
            adj[a].append((b, i))
        return tuple(tuple(x) for x in adj)

    def with_labels(self, labels: Sequence[int]) -> "TemporalGraph":
        return TemporalGraph(
            self.directed,
            self.vertices,
            tuple(Edge(e.u, e.v, int(t)) for e, t in zip(self.edges, labels)),
        )


@dataclass(frozen=True)
class Demand:
    source: str
    target: str
    deadline: int

    @property
    def path(self) -> Optional[tuple[EdgeKey, ...]]:
        return None


@dataclass(frozen=True)
class PathDemand(Demand):
    """A demand whose footprint route is fixed; ``path`` lists (from, to) hops in order."""

    route: tuple[EdgeKey, ...] = ()

    @property
    def path(self) -> tuple[EdgeKey, ...]:
        return self.route

    @property
    def final_edge(self) -> Optional[EdgeKey]:
        return self.route[-1] if self.route else None


@dataclass(frozen=True)
class Instance:
    graph: TemporalGraph
    demands: tuple[Demand, ...]
    delta: Optional[int] = None
    kind: ProblemKind = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "demands", tuple(self.demands))
        has_paths = [isinstance(d, PathDemand) for d in self.demands]
        kind = self.kind
        if kind is None:
            if self.delta is not None:
                kind = ProblemKind.DELTA_DB
            elif self.demands and all(has_paths):
                kind = ProblemKind.PATH_DB
            else:
                kind = ProblemKind.DB
            object.__setattr__(self, "kind", kind)
        kind = ProblemKind(kind)
        object.__setattr__(self, "kind", kind)
        if (self.delta is not None) != (kind is ProblemKind.DELTA_DB):
            raise InstanceError("delta must be present exactly for DELTA_DB", where="delta")
        if self.delta is not None and (
            isinstance(self.delta, bool) or not isinstance(self.delta, int) or self.delta < 0
        ):
            raise InstanceError(f"delta must be an integer >= 0, got {self.delta!r}", where="delta")
        if kind is ProblemKind.PATH_DB:
            if not all(has_paths):
                raise InstanceError("every PATH_DB demand needs a path", where="demands")
        elif any(has_paths):
            raise InstanceError("paths are only allowed in PATH_DB instances", where="demands")
        for i, d in enumerate(self.demands):
            _check_demand(self.graph, d, f"demands[{i}]")

    @property
    def t_init(self) -> int:
        return self.graph.lifetime

    @property
    def t_max(self) -> int:
        return max((d.deadline for d in self.demands), default=0)

    def replace(self, **changes) -> "Instance":
        fields = dict(graph=self.graph, demands=self.demands, delta=self.delta, kind=self.kind)
        fields.update(changes)
        return Instance(**fields)


def _check_demand(g: TemporalGraph, d: Demand, where: str):
    known = g.vertex_index
    for name in ("source", "target"):
        if getattr(d, name) not in known:
            raise InstanceError(f"unknown vertex {getattr(d, name)!r}", where=f"{where}.{name}")
    if isinstance(d.deadline, bool) or not isinstance(d.deadline, int) or d.deadline < 0:
        raise InstanceError(f"deadline must be an integer >= 0, got {d.deadline!r}", where=where)
    if not isinstance(d, PathDemand):
        return
    route = d.route
    if not route:
        if d.source != d.target:
            raise InstanceError("empty path between distinct vertices", where=f"{where}.path")
        return
    visited = [route[0][0]]
    for j, (a, b) in enumerate(route):
        if a != visited[-1]:
            raise InstanceError(f"hop {j} does not continue the path", where=f"{where}.path")
        if not g.has_edge(a, b):
            raise InstanceError(f"no edge ({a!r}, {b!r}) for hop {j}", where=f"{where}.path")
        visited.append(b)
    if visited[0] != d.source or visited[-1] != d.target:
        raise InstanceError("path does not join source to target", where=f"{where}.path")
    if len(set(visited)) != len(visited):
        raise InstanceError("path repeats a vertex", where=f"{where}.path")


@dataclass(frozen=True)
class Delaying:
    """A full relabelling of a graph's edges, keyed by canonical edge key."""

    labels: Mapping[EdgeKey, int]

    def __post_init__(self):
        object.__setattr__(self, "labels", MappingProxyType(dict(self.labels)))

    @classmethod
    def from_sequence(cls, graph: TemporalGraph, seq: Sequence[int]) -> "Delaying":
        return cls({k: int(t) for k, t in zip(graph.keys, seq)})

    @classmethod
    def identity(cls, graph: TemporalGraph) -> "Delaying":
        return cls.from_sequence(graph, graph.initial_labels)

    def as_sequence(self, graph: TemporalGraph) -> list[int]:
        """Labels aligned with ``graph.edges``; KeyError if a key is missing."""
        return [self.labels[k] for k in graph.keys]

    def __getitem__(self, key: EdgeKey) -> int:
        return self.labels[key]

    def __eq__(self, other):
        if not isinstance(other, Delaying):
            return NotImplemented
        return dict(self.labels) == dict(other.labels)

    def __hash__(self):
        return hash(frozenset(self.labels.items()))


Hop = tuple[str, str, int]


@dataclass(frozen=True)
class SolveResult:
    answer: Answer
    witness: Optional[Delaying] = None
    routes: Mapping[int, tuple[Hop, ...]] = field(default_factory=dict)
    reason: Optional[NoReason] = None
    algorithm: str = ""
    stats: Mapping[str, int] = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES


def yes(witness: Delaying, routes, algorithm: str, **stats) -> SolveResult:
    return SolveResult(Answer.YES, witness, dict(routes), None, algorithm, stats)


def no(reason: NoReason, algorithm: str, **stats) -> SolveResult:
    return SolveResult(Answer.NO, None, {}, reason, algorithm, stats)


# ---------------------------------------------------------------- interchange


def _load(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InstanceError(f"not UTF-8 ({exc})", code="MALFORMED") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(
            f"{exc.msg} at line {exc.lineno} column {exc.colno}", code="MALFORMED"
        ) from exc


def _require(obj: Mapping, key: str, kind, where: str):
    if key not in obj:
        raise InstanceError(f"missing key {key!r}", where=where)
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise InstanceError(f"{key!r} must be an integer", where=where)
    if not isinstance(value, kind):
        raise InstanceError(f"{key!r} has the wrong type", where=where)
    return value


def instance_from_obj(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("top level must be an object", where="$")
    directed = _require(doc, "directed", bool, "$")
    vertices = _require(doc, "vertices", list, "$")
    for i, v in enumerate(vertices):
        if not isinstance(v, str):
            raise InstanceError("vertex identifiers must be strings", where=f"vertices[{i}]")
    edges = []
    for i, e in enumerate(_require(doc, "edges", list, "$")):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            raise InstanceError("edge must be an object", where=where)
        u = _require(e, "u", str, where)
        v = _require(e, "v", str, where)
        t = _require(e, "time", int, where)
        edges.append(Edge(u, v, t))
    graph = TemporalGraph(directed, tuple(vertices), tuple(edges))
    demands: list[Demand] = []
    for i, d in enumerate(_require(doc, "demands", list, "$")):
        where = f"demands[{i}]"
        if not isinstance(d, dict):
            raise InstanceError("demand must be an object", where=where)
        s = _require(d, "from", str, where)
        z = _require(d, "to", str, where)
        t = _require(d, "deadline", int, where)
        if "path" in d:
            hops = d["path"]
            if not isinstance(hops, list) or not all(
                isinstance(h, list) and len(h) == 2 and all(isinstance(x, str) for x in h)
                for h in hops
            ):
                raise InstanceError("path must be a list of [u, v] pairs", where=f"{where}.path")
            demands.append(PathDemand(s, z, t, tuple((a, b) for a, b in hops)))
        else:
            demands.append(Demand(s, z, t))
    delta = doc.get("delta")
    if delta is not None and (isinstance(delta, bool) or not isinstance(delta, int)):
        raise InstanceError("delta must be an integer", where="delta")
    return Instance(graph, tuple(demands), delta)


def parse_instance(text: str | bytes) -> Instance:
    return instance_from_obj(_load(text))


def instance_to_obj(inst: Instance) -> dict:
    g = inst.graph
    doc: dict[str, Any] = {
        "directed": g.directed,
        "vertices": list(g.vertices),
        "edges": [{"u": e.u, "v": e.v, "time": e.time} for e in g.edges],
        "demands": [],
    }
    for d in inst.demands:
        item: dict[str, Any] = {"from": d.source, "to": d.target, "deadline": d.deadline}
        if isinstance(d, PathDemand):
            item["path"] = [[a, b] for a, b in d.route]
        doc["demands"].append(item)
    if inst.delta is not None:
        doc["delta"] = inst.delta
    return doc


def serialize_instance(inst: Instance) -> str:
    return json.dumps(instance_to_obj(inst), indent=1) + "\n"


def solution_to_obj(res: SolveResult) -> dict:
    doc: dict[str, Any] = {"answer": res.answer.value}
    if res.algorithm:
        doc["algorithm"] = res.algorithm
    if res.witness is not None:
        doc["labels"] = [{"u": u, "v": v, "time": t} for (u, v), t in res.witness.labels.items()]
    if res.routes:
        doc["routes"] = [
            {"demand": i, "path": [{"u": a, "v": b, "time": t} for a, b, t in hops]}
            for i, hops in sorted(res.routes.items())
        ]
    if res.reason is not None:
        doc["reason"] = res.reason.value
    return doc


def serialize_solution(res: SolveResult) -> str:
    return json.dumps(solution_to_obj(res), indent=1) + "\n"


def parse_solution(text: str | bytes, graph: Optional[TemporalGraph] = None) -> SolveResult:
    """Parse a solution document. With ``graph``, label keys are canonicalised and checked."""
    doc = _load(text)
    if not isinstance(doc, dict):
        raise InstanceError("top level must be an object", where="$")
    ans = _require(doc, "answer", str, "$")
    if ans not in ("yes", "no"):
        raise InstanceError(f"answer must be 'yes' or 'no', got {ans!r}", where="answer")
    witness = None
    if "labels" in doc:
        labels = {}
        for i, item in enumerate(_require(doc, "labels", list, "$")):
            where = f"labels[{i}]"
            if not isinstance(item, dict):
                raise InstanceError("label must be an object", where=where)
            u = _require(item, "u", str, where)
            v = _require(item, "v", str, where)
            t = _require(item, "time", int, where)
            if graph is not None:
                try:
                    u, v = graph.key(u, v)
                except KeyError as exc:
                    raise InstanceError(str(exc), where=where) from None
            if (u, v) in labels:
                raise InstanceError("edge labelled twice", where=where)
            labels[(u, v)] = t
        witness = Delaying(labels)
    routes = {}
    for i, item in enumerate(doc.get("routes", [])):
        where = f"routes[{i}]"
        idx = _require(item, "demand", int, where)
        hops = tuple(
            (_require(h, "u", str, where), _require(h, "v", str, where), _require(h, "time", int, where))
            for h in _require(item, "path", list, where)
        )
        routes[idx] = hops
    reason = NoReason(doc["reason"]) if doc.get("reason") else None
    return SolveResult(Answer(ans), witness, routes, reason, doc.get("algorithm", ""))


def make_instance(
    directed: bool,
    edges: Iterable[tuple[str, str, int]],
    demands: Iterable[tuple],
    delta: Optional[int] = None,
    vertices: Optional[Iterable[str]] = None,
) -> Instance:
    """Convenience constructor. A demand tuple with a fourth element is a path demand,
    the fourth element being the vertex sequence of the route."""
    edges = [Edge(u, v, t) for u, v, t in edges]
    demands = list(demands)
    if vertices is None:
        seen: dict[str, None] = {}
        for u, v, _ in edges:
            seen.setdefault(u)
            seen.setdefault(v)
        for d in demands:
            seen.setdefault(d[0])
            seen.setdefault(d[1])
        vertices = seen
    graph = TemporalGraph(directed, tuple(vertices), tuple(edges))
    out: list[Demand] = []
    for d in demands:
        if len(d) == 4:
            walk = list(d[3])
            out.append(PathDemand(d[0], d[1], d[2], tuple(zip(walk, walk[1:]))))
        else:
            out.append(Demand(d[0], d[1], d[2]))
    return Instance(graph, tuple(out), delta)
