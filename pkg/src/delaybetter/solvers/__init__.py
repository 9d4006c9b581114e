from .brute import BudgetExceeded, label_bounds, solve_brute_force
from .common import SolverConfig, SolverError, is_forest, split_forest
from .dispatch import ENGINES, choose_engine, solve
from .fes import BranchChoice, FeedbackEdgeSet, branch_bound, compute_fes, solve_db_fes
from .single_source import solve_db_single_source
from .tree import solve_db_tree

__all__ = [
    "BranchChoice",
    "BudgetExceeded",
    "ENGINES",
    "FeedbackEdgeSet",
    "SolverConfig",
    "SolverError",
    "branch_bound",
    "choose_engine",
    "compute_fes",
    "is_forest",
    "label_bounds",
    "solve",
    "solve_brute_force",
    "solve_db_fes",
    "solve_db_single_source",
    "solve_db_tree",
    "split_forest",
]
