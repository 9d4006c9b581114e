"""Delay-management decision problems on simple temporal graphs."""

from .model import (
    Answer,
    Delaying,
    DelayBetterError,
    Demand,
    Edge,
    Instance,
    InstanceError,
    NoReason,
    PathDemand,
    ProblemKind,
    SolveResult,
    TemporalGraph,
    make_instance,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from .pathdb import build_precedence, solve_path_db
from .reach import compress_lifetime, earliest_arrivals, verify
from .solvers import solve, solve_brute_force

__version__ = "0.1.0"
