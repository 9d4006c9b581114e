"""DelayBetter on forests: every demand has at most one footprint route."""

from __future__ import annotations

from ..model import Instance, NoReason, PathDemand, ProblemKind, SolveResult, no, yes
from ..pathdb import solve_path_db
from .common import ForestPaths, SolverError, delta_cap_ok, hops_of, oriented, split_forest


def with_routes(inst: Instance, walks: list[list[str]]) -> Instance:
    """The Path-DB instance fixing demand i to the vertex sequence ``walks[i]``."""
    demands = tuple(
        PathDemand(d.source, d.target, d.deadline, hops_of(w))
        for d, w in zip(inst.demands, walks)
    )
    return Instance(inst.graph, demands, None, ProblemKind.PATH_DB)


def solve_db_tree(inst: Instance) -> SolveResult:
    if inst.kind is ProblemKind.PATH_DB:
        raise SolverError("tree engine takes DB or DELTA_DB instances", "WRONG_KIND")
    g = inst.graph
    forest, extra = split_forest(g)
    if extra:
        raise SolverError("footprint has a cycle", "NOT_A_TREE")
    paths = ForestPaths(g, forest)
    walks = []
    for d in inst.demands:
        w = paths.path(d.source, d.target)
        if w is None:
            return no(NoReason.STATICALLY_UNREACHABLE, "tree")
        if not oriented(g, w):
            return no(NoReason.ORIENTATION_BLOCKED, "tree")
        walks.append(w)
    res = solve_path_db(with_routes(inst, walks))
    if not res.yes:
        return no(res.reason, "tree")
    # the Path-DB witness is pointwise minimal, so a cap violation here rules
    # out every delta-delaying
    if not delta_cap_ok(inst, dict(res.witness.labels)):
        return no(NoReason.DELTA_CAP_EXCEEDED, "tree")
    return yes(res.witness, res.routes, "tree")
