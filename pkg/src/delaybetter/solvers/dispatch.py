"""Pick an engine by instance shape, after compressing the lifetime."""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from ..model import Instance, ProblemKind, SolveResult
from ..pathdb import solve_path_db
from ..reach import compress_lifetime, verify
from .brute import BudgetExceeded, solve_brute_force
from .common import SolverConfig, SolverError, is_forest
from .fes import branch_bound, compute_fes, solve_db_fes
from .single_source import common_source, solve_db_single_source
from .tree import solve_db_tree

ENGINES = ("auto", "pathdb", "tree", "single-source", "fes", "brute")


def choose_engine(inst: Instance, config: SolverConfig = SolverConfig()) -> list[str]:
    """Exact engines applicable to ``inst``, in order of preference."""
    if inst.kind is ProblemKind.PATH_DB:
        return ["pathdb", "brute"]
    out = []
    if is_forest(inst.graph):
        out.append("tree")
    if common_source(inst) is not None:
        out.append("single-source")
    fes = compute_fes(inst.graph)
    if branch_bound(fes.rho, len(inst.demands), inst.graph.directed) <= config.branch_budget:
        out.append("fes")
    out.append("brute")
    return out


def run_engine(name: str, inst: Instance, config: SolverConfig) -> SolveResult:
    if name == "pathdb":
        return solve_path_db(inst)
    if name == "tree":
        return solve_db_tree(inst)
    if name == "single-source":
        return solve_db_single_source(inst)
    if name == "fes":
        return solve_db_fes(inst, config.branch_budget, config.jobs)
    if name == "brute":
        return solve_brute_force(inst, state_budget=config.state_budget)
    raise ValueError(f"unknown engine {name!r}")


def solve(inst: Instance, algo: str = "auto", config: Optional[SolverConfig] = None) -> SolveResult:
    """Solve ``inst`` exactly; the witness and routes refer to the original times.

    With ``algo="auto"`` the first applicable engine that stays within budget
    answers; UNDECIDED is raised only if all of them run out of budget.
    """
    config = config or SolverConfig()
    small, remap = compress_lifetime(inst)
    if algo == "auto":
        candidates = choose_engine(small, config)
    else:
        candidates = [algo]
    res = None
    for name in candidates:
        try:
            res = run_engine(name, small, config)
            break
        except BudgetExceeded:
            if algo != "auto":
                raise
    if res is None:
        raise SolverError("every applicable engine exceeded its budget", "UNDECIDED")
    if not res.yes:
        return res
    witness = remap.lift(res.witness)
    verdict = verify(inst, witness)
    assert verdict.accepted, verdict.message
    return replace(res, witness=witness, routes=verdict.routes if inst.kind is not ProblemKind.PATH_DB
                   else remap.lift_routes(res.routes))
