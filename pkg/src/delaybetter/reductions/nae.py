"""Positive NAE-3SAT and its two lifetime-2 DB encodings.

In both encodings every initial label is 1 and every deadline is 1 or 2, so a
delaying is a choice of {1, 2} per edge.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from ..model import Delaying, InstanceError
from .base import Builder, ReductionError, ReductionOutput

MAX_NAE_VARIABLES = 24


@dataclass(frozen=True)
class NaeFormula:
    """Positive clauses of exactly three variable occurrences (repeats allowed)."""

    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.variable_count < 0:
            raise ReductionError("variable_count must be >= 0")
        for i, c in enumerate(self.clauses):
            if len(c) != 3:
                raise ReductionError(f"clause {i} does not have exactly 3 literals")
            for x in c:
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.variable_count:
                    raise ReductionError(f"clause {i} names unknown variable {x!r}")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(len({assignment[x] for x in c}) == 2 for c in self.clauses)

    def to_obj(self) -> dict:
        return {"n": self.variable_count, "clauses": [list(c) for c in self.clauses]}


def parse_nae(text: str | bytes) -> NaeFormula:
    try:
        doc = json.loads(text)
        return NaeFormula(int(doc["n"]), tuple(tuple(c) for c in doc["clauses"]))
    except (ValueError, KeyError, TypeError) as exc:
        raise InstanceError(f"bad NAE formula: {exc}", "MALFORMED") from exc


def random_nae(n: int, m: int, seed: int, distinct: bool = True) -> NaeFormula:
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        if distinct:
            clauses.append(tuple(rng.sample(range(n), 3)))
        else:
            clauses.append(tuple(rng.randrange(n) for _ in range(3)))
    return NaeFormula(n, tuple(clauses))


def solve_nae3sat_brute(f: NaeFormula) -> tuple[bool, Optional[tuple[bool, ...]]]:
    """Exhaustive search; returns (satisfiable, first satisfying assignment)."""
    if f.variable_count > MAX_NAE_VARIABLES:
        raise ReductionError(f"{f.variable_count} variables exceed {MAX_NAE_VARIABLES}", "TOO_LARGE")
    for bits in itertools.product((False, True), repeat=f.variable_count):
        if f.satisfied_by(bits):
            return True, bits
    return False, None


# ------------------------------------------------------------- undirected


def _x(kind: str, x: int) -> str:
    return f"#{kind}{x}"


def _c(j: int) -> str:
    return f"#c{j}"


def reduce_nae_to_db_undirected(f: NaeFormula) -> ReductionOutput:
    """Undirected encoding with |V| = 4+3n+2m and |D| = 2+6n+3m.

    |E| = 2+6n+4m holds when every clause has three distinct variables.
    """
    b = Builder(directed=False)
    for v in ("F", "F'", "T", "T'"):
        b.vertex(v, "global", None)
    for x in range(f.variable_count):
        for kind in ("s", "t", "m"):
            b.vertex(_x(kind, x), "variable", x, role=kind)
    for j in range(len(f.clauses)):
        b.vertex(_c(j), "clause", j)
        b.vertex(_c(j) + "'", "clause", j, role="partner")

    b.edge("F", "F'", 1, "global", None)
    b.edge("T", "T'", 1, "global", None)
    for x in range(f.variable_count):
        for kind in ("s", "t", "m"):
            for side in ("T", "F"):
                b.edge(_x(kind, x), side, 1, "variable", x, role=f"{kind}-{side}")
    for j, clause in enumerate(f.clauses):
        b.edge(_c(j), _c(j) + "'", 1, "clause", j, role="partner")
        for x in clause:
            b.edge(_c(j), _x("m", x), 1, "clause", j, var=x)

    b.demand("F'", "F", 1, "global", None)
    b.demand("T'", "T", 1, "global", None)
    for x in range(f.variable_count):
        s, t, m = _x("s", x), _x("t", x), _x("m", x)
        b.demand(s, "T", 1, "variable", x)
        b.demand(s, "F", 1, "variable", x)
        b.demand("T'", t, 2, "variable", x)
        b.demand("F'", t, 2, "variable", x)
        b.demand(s, m, 2, "variable", x)
        b.demand(m, t, 2, "variable", x)
    for j in range(len(f.clauses)):
        b.demand(_c(j), _c(j) + "'", 1, "clause", j)
        b.demand("T", _c(j), 2, "clause", j)
        b.demand("F", _c(j), 2, "clause", j)
    return b.build()


def nae_forward_undirected(f: NaeFormula, out: ReductionOutput, assignment: Sequence[bool]) -> Delaying:
    """Labels realising a satisfying assignment: λ(m_x, T) = 1 iff x is true."""
    g = out.instance.graph
    labels = []
    for (u, v, _), rec in zip(g.edges, out.back_map["edges"]):
        role = rec.get("role", "")
        if rec["gadget"] == "variable":
            kind, side = role.split("-")
            if kind == "s":
                t = 1
            elif kind == "t":
                t = 2
            else:
                t = 1 if assignment[rec["source"]] == (side == "T") else 2
        elif rec["gadget"] == "clause" and role != "partner":
            t = 2
        else:
            t = 1
        labels.append(t)
    return Delaying.from_sequence(g, labels)


# --------------------------------------------------------------- directed


_VARIABLE_ARCS = (
    ("sT", "s"), ("sF", "s"), ("s", "tT"), ("s", "tF"), ("tT", "t"), ("tF", "t"),
    ("sT", "T"), ("T", "tT"), ("sF", "F"), ("F", "tF"),
)


def _dname(part: str, x: int) -> str:
    return part if part in ("T", "F") else f"#{part}{x}"


def _occurrence_order(f: NaeFormula) -> list[int]:
    # gadgets of variables met early in the clauses come first, which keeps
    # edge-order searches from exhausting unconstrained gadgets before a conflict
    order = dict.fromkeys(x for c in f.clauses for x in c)
    order.update(dict.fromkeys(range(f.variable_count)))
    return list(order)


def reduce_nae_to_db_directed(f: NaeFormula) -> ReductionOutput:
    """Directed acyclic encoding with six vertices per variable."""
    b = Builder(directed=True)
    b.vertex("T", "global", None)
    b.vertex("F", "global", None)
    for x in range(f.variable_count):
        for part in ("s", "sT", "sF", "t", "tT", "tF"):
            b.vertex(_dname(part, x), "variable", x, role=part)
    for j in range(len(f.clauses)):
        b.vertex(_c(j), "clause", j)
    for x in _occurrence_order(f):
        for a, z in _VARIABLE_ARCS:
            b.edge(_dname(a, x), _dname(z, x), 1, "variable", x, role=f"{a}>{z}")
    for j, clause in enumerate(f.clauses):
        for x in clause:
            b.edge(_c(j), _dname("sT", x), 1, "clause", j, var=x, role="T")
            b.edge(_c(j), _dname("sF", x), 1, "clause", j, var=x, role="F")
    for x in range(f.variable_count):
        for a, z in (("s", "t"), ("sT", "tT"), ("sF", "tF")):
            b.demand(_dname(a, x), _dname(z, x), 2, "variable", x)
    for j in range(len(f.clauses)):
        b.demand(_c(j), "T", 2, "clause", j)
        b.demand(_c(j), "F", 2, "clause", j)
    return b.build()


def _directed_variable_labels(value: bool) -> dict[str, int]:
    # written for x true; a false variable swaps the T and F sides
    true_side = {
        "sT>T": 2, "sT>s": 1, "s>tT": 2, "s>tF": 1, "tF>t": 2, "sF>F": 1, "F>tF": 2,
        "T>tT": 2, "tT>t": 2, "sF>s": 1,
    }
    if value:
        return true_side
    swap = str.maketrans("TF", "FT")
    return {k.translate(swap): v for k, v in true_side.items()}


def nae_forward_directed(f: NaeFormula, out: ReductionOutput, assignment: Sequence[bool]) -> Delaying:
    g = out.instance.graph
    labels = []
    for rec in out.back_map["edges"]:
        if rec["gadget"] == "variable":
            labels.append(_directed_variable_labels(assignment[rec["source"]])[rec["role"]])
        else:
            labels.append(1)
    return Delaying.from_sequence(g, labels)
