"""Time constants of the planar edge-precoloring construction.

The edge-gadget times, hermit deadlines and traveler deadline are fixed by the
construction. The intra-layer chain times and the hermit source edges are a
reconstruction chosen so that the hermits' stated windows work out: they are
not canonical, and the only normative check on them is that the
yes-direction labelling verifies.
"""

from __future__ import annotations

from dataclasses import dataclass

COLORS = ("B", "R", "G")


@dataclass(frozen=True)
class PlanarSchedule:
    # bold source edges (s_c^u, u, t) of A-gadgets; hermits leave u after these
    a_source: tuple[int, int, int] = (1, 4, 7)
    # bold layer chains u_c^1 - u_c^2 - u_c^3 of A-gadgets, per color
    a_chain: tuple[tuple[int, int], ...] = ((3, 4), (7, 8), (11, 12))
    # bold edges u_G^i -> uv_c and uv_c -> v_B^j, per color
    edge_in: tuple[int, int, int] = (7, 10, 13)
    edge_out: tuple[int, int, int] = (8, 11, 14)
    # bold chains s_c^v -> v_c^1 -> v_c^2 -> v_c^3 of B-gadgets, per color
    b_chain: tuple[tuple[int, int, int], ...] = ((8, 9, 10), (12, 13, 14), (16, 17, 18))
    a_hermit: tuple[int, int, int] = (4, 8, 12)
    b_hermit: tuple[int, int, int] = (13, 16, 19)
    traveler: int = 19
    # yes-direction spoke labels, per color: u -> u_B, u_B -> u_R, u_R -> u_G
    a_spokes: tuple[tuple[int, int, int], ...] = ((2, 3, 4), (5, 6, 7), (8, 9, 10))
    # v_B -> v_R, v_R -> v_G, v_G -> v
    b_spokes: tuple[tuple[int, int, int], ...] = ((11, 12, 13), (14, 15, 16), (17, 18, 19))
    # initial spoke labels of the bounded-delay variant
    a_initial: int = 2
    b_initial: int = 9
    delta: int = 10


DEFAULT_SCHEDULE = PlanarSchedule()
