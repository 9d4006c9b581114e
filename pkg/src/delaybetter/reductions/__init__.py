from .base import ReductionError, ReductionOutput
from .cubic import (
    PrecoloredCubicGraph,
    cube_graph,
    is_proper,
    parse_cubic,
    solve_cbp_epe_brute,
)
from .delta import (
    first_half_labels,
    lift_directed,
    lift_undirected,
    lifetime_bound,
    recover_directed,
    recover_undirected,
    reduce_db_to_delta,
    reduce_delta_to_db_directed,
    reduce_delta_to_db_undirected,
)
from .nae import (
    NaeFormula,
    nae_forward_directed,
    nae_forward_undirected,
    parse_nae,
    random_nae,
    reduce_nae_to_db_directed,
    reduce_nae_to_db_undirected,
    solve_nae3sat_brute,
)
from .planar import (
    edge_gadget_vertices,
    planar_forward_solution,
    reduce_cbpepe_to_delta_db,
    structure_report,
)
from .schedule import DEFAULT_SCHEDULE, PlanarSchedule

__all__ = [
    "DEFAULT_SCHEDULE",
    "NaeFormula",
    "PlanarSchedule",
    "PrecoloredCubicGraph",
    "ReductionError",
    "ReductionOutput",
    "cube_graph",
    "edge_gadget_vertices",
    "first_half_labels",
    "is_proper",
    "lift_directed",
    "lift_undirected",
    "lifetime_bound",
    "nae_forward_directed",
    "nae_forward_undirected",
    "parse_cubic",
    "parse_nae",
    "planar_forward_solution",
    "random_nae",
    "recover_directed",
    "recover_undirected",
    "reduce_cbpepe_to_delta_db",
    "reduce_db_to_delta",
    "reduce_delta_to_db_directed",
    "reduce_delta_to_db_undirected",
    "reduce_nae_to_db_directed",
    "reduce_nae_to_db_undirected",
    "solve_cbp_epe_brute",
    "solve_nae3sat_brute",
    "structure_report",
]
