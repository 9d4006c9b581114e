"""Shared helpers for the test suite: small-graph sweeps and independent oracles."""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

from delaybetter.model import Demand, Edge, Instance, PathDemand, TemporalGraph

INF = math.inf


def connected_footprints(max_edges: int) -> list[nx.Graph]:
    """Connected simple graphs with 1..max_edges edges, one per isomorphism class."""
    return [g for g in graph_atlas_g()
            if 1 <= g.number_of_edges() <= max_edges and nx.is_connected(g)]


def _automorphisms(g: nx.Graph) -> list[dict]:
    return list(GraphMatcher(g, g).isomorphisms_iter())


def labelled_footprints(g: nx.Graph, directed: bool, labels: Sequence[int]) -> Iterator[TemporalGraph]:
    """Every orientation/labelling of ``g``, one per isomorphism class.

    Configurations are (orientation bit, label) per edge of ``g``; two are
    equivalent when an automorphism of ``g`` maps one onto the other.
    """
    edges = list(g.edges())
    pos = {frozenset(e): i for i, e in enumerate(edges)}
    autos = _automorphisms(g)
    names = {v: f"v{v}" for v in g.nodes()}
    orientations = itertools.product((0, 1), repeat=len(edges)) if directed else [(0,) * len(edges)]
    for bits in orientations:
        arcs = [(v, u) if b else (u, v) for (u, v), b in zip(edges, bits)]
        for labs in itertools.product(labels, repeat=len(edges)):
            config = tuple(zip(bits, labs))
            if _is_canonical(config, arcs, labs, edges, pos, autos, directed):
                yield TemporalGraph(
                    directed,
                    tuple(names[v] for v in g.nodes()),
                    tuple(Edge(names[a], names[b], t) for (a, b), t in zip(arcs, labs)),
                )


def _is_canonical(config, arcs, labs, edges, pos, autos, directed) -> bool:
    for sigma in autos:
        image = [None] * len(edges)
        for (a, b), t in zip(arcs, labs):
            j = pos[frozenset((sigma[a], sigma[b]))]
            if directed:
                bit = 0 if edges[j] == (sigma[a], sigma[b]) else 1
            else:
                bit = 0
            image[j] = (bit, t)
        if tuple(image) < config:
            return False
    return True


def simple_paths(g: TemporalGraph) -> list[tuple[str, ...]]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v, _ in g.edges:
        adj[u].append(v)
        if not g.directed:
            adj[v].append(u)
    out = []

    def grow(walk):
        if len(walk) > 1:
            out.append(tuple(walk))
        for y in adj[walk[-1]]:
            if y not in walk:
                grow(walk + [y])

    for v in g.vertices:
        grow([v])
    return out


def path_demand(walk: Sequence[str], deadline: int) -> PathDemand:
    return PathDemand(walk[0], walk[-1], deadline, tuple(zip(walk, walk[1:])))


class DelayingTable:
    """All delayings of ``g`` with labels in [λ(e), cap], and each path's arrival.

    ``rows`` are label tuples in lexicographic order; ``arrival[r][p]`` is the
    arrival along path p under row r (inf if the labels do not increase).
    """

    def __init__(self, g: TemporalGraph, paths: Sequence[tuple[str, ...]], cap: int):
        self.g = g
        self.paths = list(paths)
        ranges = [range(t, max(t, cap) + 1) for t in g.initial_labels]
        self.rows = list(itertools.product(*ranges))
        hop_ids = [[g.edge_index[g.key(a, b)] for a, b in zip(p, p[1:])] for p in self.paths]
        self.hops = hop_ids
        self.arrival = []
        for row in self.rows:
            arr = []
            for ids in hop_ids:
                last, ok = 0, True
                for i in ids:
                    if row[i] <= last:
                        ok = False
                        break
                    last = row[i]
                arr.append(last if ok else INF)
            self.arrival.append(arr)

    def feasible(self, demands: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
        """Rows meeting every (path index, deadline) pair."""
        return [row for row, arr in zip(self.rows, self.arrival)
                if all(arr[p] <= d for p, d in demands)]


def demanded_edges(g: TemporalGraph, inst: Instance) -> set[int]:
    out = set()
    for d in inst.demands:
        for a, b in d.path or ():
            out.add(g.edge_index[g.key(a, b)])
    return out


def reachable_pairs_oracle(g: TemporalGraph, labels: Sequence[int], source: str) -> dict[str, float]:
    """Earliest arrivals by enumerating every strict temporal path (independent of reach)."""
    best = {v: INF for v in g.vertices}
    best[source] = 0
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in g.vertices}
    for (u, v, _), t in zip(g.edges, labels):
        adj[u].append((v, t))
        if not g.directed:
            adj[v].append((u, t))

    def walk(x, last, seen):
        for y, t in adj[x]:
            if t > last and y not in seen:
                best[y] = min(best[y], t)
                walk(y, t, seen | {y})

    walk(source, 0, {source})
    return best


def exhaustive_db_oracle(inst: Instance, cap: int) -> bool:
    """Does any delaying with labels <= cap (and within δ) satisfy every demand?"""
    g = inst.graph
    ranges = []
    for t in g.initial_labels:
        hi = cap if inst.delta is None else min(cap, t + inst.delta)
        ranges.append(range(t, max(t, hi) + 1))
    for row in itertools.product(*ranges):
        cache: dict[str, dict[str, float]] = {}
        ok = True
        for d in inst.demands:
            if d.source == d.target:
                continue
            if d.source not in cache:
                cache[d.source] = reachable_pairs_oracle(g, row, d.source)
            if cache[d.source][d.target] > d.deadline:
                ok = False
                break
        if ok:
            return True
    return False


def as_demands(ds) -> tuple[Demand, ...]:
    return tuple(Demand(*d) for d in ds)


class MaskTable:
    """Bitmask view of a DelayingTable for fast feasibility and minimality queries.

    ``within[p][d]`` has bit r set when row r meets deadline d along path p;
    ``below[e][v]`` has bit r set when row r labels edge e strictly below v.
    """

    def __init__(self, table: DelayingTable, max_deadline: int):
        self.table = table
        n_paths = len(table.paths)
        self.within = [[0] * (max_deadline + 1) for _ in range(n_paths)]
        m = len(table.g.edges)
        top = max([max(r) for r in table.rows] + [1]) + 2
        self.below = [[0] * top for _ in range(m)]
        for r, (row, arr) in enumerate(zip(table.rows, table.arrival)):
            bit = 1 << r
            for p, a in enumerate(arr):
                if a != INF:
                    for d in range(int(a), max_deadline + 1):
                        self.within[p][d] |= bit
            for e, t in enumerate(row):
                for v in range(t + 1, top):
                    self.below[e][v] |= bit

    def feasible_mask(self, demands) -> int:
        mask = -1
        for p, d in demands:
            mask &= self.within[p][d]
        return mask

    def undercut(self, feasible: int, e: int, value: int) -> bool:
        """Is some feasible row strictly below ``value`` on edge e?"""
        top = len(self.below[e]) - 1
        return bool(feasible & self.below[e][min(value, top)])


def pathdb_sweep(max_edges: int = 4, labels=(1, 2, 3), max_deadline: int = 5,
                 max_demands: int = 2, solvers=None):
    """Exhaustive Path-DB sweep over small footprints, both orientations.

    For each instance compares solve_path_db, solve_brute_force and the
    delaying-table oracle, and checks each YES witness for integrality and
    pointwise minimality on demanded edges.
    """
    from delaybetter.pathdb import solve_path_db
    from delaybetter.solvers import solve_brute_force

    stats = dict(instances=0, yes=0, mismatches=[], not_integral=0, not_minimal=[], configs=0)
    for base in connected_footprints(max_edges):
        for directed in (False, True):
            for g in labelled_footprints(base, directed, labels):
                stats["configs"] += 1
                paths = simple_paths(g)
                table = DelayingTable(g, paths, max_deadline)
                masks = MaskTable(table, max_deadline)
                items = [(p, d) for p in range(len(paths)) for d in range(max_deadline + 1)]
                dem = {it: path_demand(paths[it[0]], it[1]) for it in items}
                combos = [(it,) for it in items]
                if max_demands >= 2:
                    combos += list(itertools.combinations_with_replacement(items, 2))
                for combo in combos:
                    inst = Instance(g, tuple(dem[it] for it in combo))
                    fast = solve_path_db(inst)
                    slow = solve_brute_force(inst)
                    feasible = masks.feasible_mask(combo)
                    stats["instances"] += 1
                    if not (fast.yes == slow.yes == bool(feasible)):
                        stats["mismatches"].append((g, combo, fast.answer, slow.answer, bool(feasible)))
                        continue
                    if not fast.yes:
                        continue
                    stats["yes"] += 1
                    w = fast.witness.as_sequence(g)
                    if not all(isinstance(x, int) for x in w):
                        stats["not_integral"] += 1
                    for p, _ in combo:
                        for e in table.hops[p]:
                            if masks.undercut(feasible, e, w[e]):
                                stats["not_minimal"].append((g, combo, e))
    return stats
