"""Seeded random instance generators."""

from __future__ import annotations

import random
from typing import Optional

from .model import DelayBetterError, Demand, Edge, Instance, PathDemand, TemporalGraph

KINDS = ("random", "tree", "low-fes", "lifetime2")


class GenerateError(DelayBetterError):
    code = "INFEASIBLE_PARAMETERS"


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


def _orient(rng: random.Random, u: str, v: str, directed: bool) -> tuple[str, str]:
    if directed and rng.random() < 0.5:
        return v, u
    return u, v


def _tree_pairs(rng: random.Random, names, k_components: int = 1):
    """Random spanning forest with ``k_components`` trees."""
    order = list(names)
    rng.shuffle(order)
    pairs = []
    for i in range(k_components, len(order)):
        pairs.append((order[rng.randrange(i)], order[i]))
    return pairs


def _graph(rng, n, pairs, tmax, directed) -> TemporalGraph:
    edges = []
    for u, v in pairs:
        a, b = _orient(rng, u, v, directed)
        edges.append(Edge(a, b, rng.randint(1, max(1, tmax))))
    return TemporalGraph(directed, _names(n), tuple(edges))


def _demands(rng, g: TemporalGraph, count: int, tmax: int, source: Optional[str] = None):
    out = []
    for _ in range(count):
        s = source if source is not None else rng.choice(g.vertices)
        z = rng.choice(g.vertices)
        out.append(Demand(s, z, rng.randint(0, tmax)))
    return tuple(out)


def random_instance(
    kind: str = "random",
    n: int = 6,
    m: int = 7,
    demands: int = 2,
    tmax: int = 6,
    seed: int = 0,
    directed: bool = False,
    delta: Optional[int] = None,
    rho: int = 2,
    single_source: bool = False,
) -> Instance:
    """A random instance; ``kind`` picks the footprint family.

    random: m distinct edges on n vertices. tree: a spanning tree. low-fes: a
    spanning tree plus at most ``rho`` extra edges. lifetime2: like random but
    all labels 1 and deadlines in {1, 2}.
    """
    if kind not in KINDS:
        raise GenerateError(f"unknown kind {kind!r}")
    if n < 1:
        raise GenerateError("need at least one vertex")
    rng = random.Random(seed)
    names = _names(n)
    all_pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    if kind == "tree":
        pairs = _tree_pairs(rng, names)
    elif kind == "low-fes":
        pairs = _tree_pairs(rng, names)
        used = {frozenset(p) for p in pairs}
        rest = [p for p in all_pairs if frozenset(p) not in used]
        rng.shuffle(rest)
        pairs += rest[: max(0, min(rho, len(rest)))]
    else:
        if m > len(all_pairs):
            raise GenerateError(f"{m} edges do not fit on {n} vertices")
        pairs = rng.sample(all_pairs, m)
    if kind == "lifetime2":
        g = _graph(rng, n, pairs, 1, directed)
        tmax = 2
    else:
        g = _graph(rng, n, pairs, tmax, directed)
    source = rng.choice(names) if single_source else None
    ds = _demands(rng, g, demands, tmax, source)
    if kind == "lifetime2":
        ds = tuple(Demand(d.source, d.target, rng.choice((1, 2))) for d in ds)
    return Instance(g, ds, delta)


def simple_paths(g: TemporalGraph, max_len: Optional[int] = None):
    """Every simple footprint path with at least one hop, as vertex lists."""
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v, _ in g.edges:
        adj[u].append(v)
        if not g.directed:
            adj[v].append(u)
    out = []

    def grow(walk):
        if len(walk) > 1:
            out.append(list(walk))
        if max_len is not None and len(walk) - 1 >= max_len:
            return
        for y in adj[walk[-1]]:
            if y not in walk:
                walk.append(y)
                grow(walk)
                walk.pop()

    for v in g.vertices:
        grow([v])
    return out


def random_path_instance(
    n: int = 5, m: int = 6, demands: int = 2, tmax: int = 6, seed: int = 0, directed: bool = False
) -> Instance:
    """Random Path-DB instance whose demands follow random simple paths."""
    rng = random.Random(seed)
    names = _names(n)
    all_pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    m = min(m, len(all_pairs))
    g = _graph(rng, n, rng.sample(all_pairs, m), tmax, directed)
    paths = simple_paths(g)
    ds = []
    for _ in range(demands):
        if not paths:
            break
        w = rng.choice(paths)
        ds.append(PathDemand(w[0], w[-1], rng.randint(0, tmax), tuple(zip(w, w[1:]))))
    if not ds:
        v = names[0]
        ds.append(PathDemand(v, v, 0, ()))
    return Instance(g, tuple(ds))
