"""Feedback-edge-set branching for DelayBetter.

Removing a feedback edge set E' leaves a forest, so once we know which edges
of E' a demand uses, in which order and (undirected) in which direction, its
route is determined: forest paths stitched through the chosen edges. We fix a
global order of E' (the order their labels will increase in), enumerate each
demand's choice, and solve the resulting Path-DB instance.

There are |E'|! orders and 2^|E'| (directed) or 3^|E'| (undirected) choices
per demand, giving the ``rho! * k^(rho*|D|)`` branch bound.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from ..model import Delaying, EdgeKey, Instance, NoReason, ProblemKind, SolveResult, no, yes
from ..pathdb import solve_path_db
from .brute import BudgetExceeded
from .common import ForestPaths, SolverError, delta_cap_ok, oriented, split_forest, static_reason
from .tree import with_routes


@dataclass(frozen=True)
class FeedbackEdgeSet:
    edges: tuple[EdgeKey, ...]
    spanning_forest: tuple[EdgeKey, ...]

    @property
    def rho(self) -> int:
        return len(self.edges)


def compute_fes(g) -> FeedbackEdgeSet:
    """Minimum feedback edge set: the complement of a spanning forest."""
    forest, extra = split_forest(g)
    return FeedbackEdgeSet(tuple(g.keys[i] for i in extra), tuple(g.keys[i] for i in forest))


@dataclass(frozen=True)
class BranchChoice:
    ordering: tuple[EdgeKey, ...]
    selections: tuple[tuple[tuple[str, str], ...], ...]  # per demand: oriented E' hops used


def branch_bound(rho: int, demands: int, directed: bool) -> int:
    return math.factorial(rho) * (2 if directed else 3) ** (rho * demands)


def _selections(ordering, directed):
    """Every way one demand may use the ordered E' edges: skip, or traverse."""
    per_edge = []
    for u, v in ordering:
        opts = [None, (u, v)] if directed else [None, (u, v), (v, u)]
        per_edge.append(opts)
    for combo in itertools.product(*per_edge):
        yield tuple(h for h in combo if h is not None)


def _stitch(paths: ForestPaths, g, s: str, z: str, hops) -> Optional[list[str]]:
    walk = [s]
    for a, b in hops:
        seg = paths.path(walk[-1], a)
        if seg is None or not oriented(g, seg):
            return None
        walk.extend(seg[1:])
        walk.append(b)
    seg = paths.path(walk[-1], z)
    if seg is None or not oriented(g, seg):
        return None
    walk.extend(seg[1:])
    if len(set(walk)) != len(walk):
        return None
    return walk


class _Search:
    def __init__(self, inst: Instance):
        self.inst = inst
        g = inst.graph
        forest, extra = split_forest(g)
        self.fes = [g.keys[i] for i in extra]
        self.paths = ForestPaths(g, forest)
        self.cache: dict[tuple, Optional[SolveResult]] = {}
        self.branches = 0
        self.discarded = 0
        self.pathdb_calls = 0

    def routes_for(self, ordering):
        """Per demand: list of (selection, walk) with a valid stitched walk."""
        g = self.inst.graph
        out = []
        for d in self.inst.demands:
            options = []
            if d.source == d.target:
                options.append(((), [d.source]))
            else:
                for sel in _selections(ordering, g.directed):
                    walk = _stitch(self.paths, g, d.source, d.target, sel)
                    if walk is None:
                        self.discarded += 1
                    else:
                        options.append((sel, walk))
            out.append(options)
        return out

    def run_ordering(self, ordering) -> Optional[tuple[BranchChoice, SolveResult]]:
        per_demand = self.routes_for(ordering)
        for combo in itertools.product(*per_demand):
            self.branches += 1
            walks = tuple(tuple(w) for _, w in combo)
            if walks not in self.cache:
                self.pathdb_calls += 1
                res = solve_path_db(with_routes(self.inst, [list(w) for w in walks]))
                if res.yes and not delta_cap_ok(self.inst, dict(res.witness.labels)):
                    res = None
                self.cache[walks] = res if (res is not None and res.yes) else None
            res = self.cache[walks]
            if res is not None:
                return BranchChoice(tuple(ordering), tuple(sel for sel, _ in combo)), res
        return None


def _run_one(args):
    inst, ordering = args
    search = _Search(inst)
    found = search.run_ordering(ordering)
    if found is None:
        return None, search.branches, search.discarded
    choice, res = found
    return (choice, dict(res.witness.labels), dict(res.routes)), search.branches, search.discarded


def solve_db_fes(inst: Instance, branch_budget: int = 10**7, jobs: int = 1) -> SolveResult:
    if inst.kind is ProblemKind.PATH_DB:
        raise SolverError("FES engine takes DB or DELTA_DB instances", "WRONG_KIND")
    search = _Search(inst)
    rho = len(search.fes)
    bound = branch_bound(rho, len(inst.demands), inst.graph.directed)
    if bound > branch_budget:
        raise BudgetExceeded(f"{bound} branches exceed the budget of {branch_budget}")
    orderings = list(itertools.permutations(search.fes))
    stats = dict(rho=rho, bound=bound)

    if jobs > 1 and len(orderings) > 1:
        # lowest ordering index wins, independent of completion order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [(inst, o) for o in orderings]))
        branches = discarded = 0
        for found, b, dsc in results:
            branches += b
            discarded += dsc
            if found is not None:
                choice, labels, routes = found
                return yes(Delaying(labels), routes, "fes", branches=branches,
                           discarded=discarded, **stats)
        return no(_reason(inst), "fes", branches=branches, discarded=discarded, **stats)

    for ordering in orderings:
        found = search.run_ordering(ordering)
        if found is not None:
            _, res = found
            return yes(res.witness, res.routes, "fes", branches=search.branches,
                       discarded=search.discarded, pathdb_calls=search.pathdb_calls, **stats)
    return no(_reason(inst), "fes", branches=search.branches, discarded=search.discarded,
              pathdb_calls=search.pathdb_calls, **stats)


def _reason(inst: Instance) -> NoReason:
    return static_reason(inst) or NoReason.DEADLINE_UNSATISFIABLE
