from hypothesis import given
from hypothesis import strategies as st

from delaybetter.generate import random_instance, random_path_instance
from delaybetter.model import (
    Demand,
    make_instance,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from delaybetter.pathdb import solve_path_db
from delaybetter.reach import compress_lifetime, explicit_times, verify
from delaybetter.solvers import SolverError, compute_fes, solve, solve_brute_force, solve_db_fes

NAMES = ("a", "b", "c", "d", "e")


@st.composite
def instances(draw, max_edges=5, max_time=6, max_demands=3, delta=True):
    directed = draw(st.booleans())
    n = draw(st.integers(2, len(NAMES)))
    names = NAMES[:n]
    pairs = [(u, v) for u in names for v in names if u != v and (directed or u < v)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges, unique=True))
    if not directed:
        chosen = list(dict.fromkeys(tuple(sorted(p)) for p in chosen))
    edges = [(u, v, draw(st.integers(1, max_time))) for u, v in chosen]
    demands = draw(st.lists(
        st.tuples(st.sampled_from(names), st.sampled_from(names), st.integers(0, max_time + 2)),
        min_size=1, max_size=max_demands))
    d = draw(st.one_of(st.none(), st.integers(0, 3))) if delta else None
    return make_instance(directed, edges, demands, delta=d, vertices=names)


@given(instances())
def test_instance_serialisation_round_trip(inst):
    assert parse_instance(serialize_instance(inst)) == inst


@given(instances())
def test_solution_round_trip_and_verification(inst):
    res = solve_brute_force(inst)
    back = parse_solution(serialize_solution(res), inst.graph)
    assert back.answer == res.answer
    if res.yes:
        assert back.witness == res.witness
        assert verify(inst, back.witness).accepted


@given(instances(), st.integers(2, 10**6))
def test_compression_preserves_answers(inst, scale):
    big = inst.replace(
        graph=inst.graph.with_labels([t * scale for t in inst.graph.initial_labels]),
        demands=tuple(Demand(d.source, d.target, d.deadline * scale) for d in inst.demands),
    )
    small, remap = compress_lifetime(big)
    alpha = len(explicit_times(big))
    if big.delta is None:
        assert small.t_max <= alpha * max(len(big.graph.edges), 1)
    else:
        assert small.t_max <= alpha * (big.delta + 1)
    # scaling preserves DB answers but not δ-DB ones, whose windows stay fixed
    before = solve_brute_force(inst if big.delta is None else big)
    after = solve_brute_force(small)
    assert before.answer == after.answer
    if after.yes:
        assert verify(big, remap.lift(after.witness)).accepted


@given(instances(max_edges=6, delta=False))
def test_engines_agree(inst):
    truth = solve_brute_force(inst).answer
    assert solve(inst).answer == truth
    if compute_fes(inst.graph).rho <= 2:
        assert solve_db_fes(inst).answer == truth
    for algo in ("tree", "single-source"):
        try:
            assert solve(inst, algo).answer == truth
        except SolverError:
            pass


@given(st.integers(0, 10**6), st.sampled_from(["random", "tree", "low-fes", "lifetime2"]),
       st.booleans())
def test_pipeline_never_returns_an_unverifiable_yes(seed, kind, directed):
    inst = random_instance(kind, n=5, m=6, demands=2, tmax=5, seed=seed, directed=directed)
    res = solve(inst)
    if res.yes:
        assert verify(inst, res.witness).accepted


@given(st.data())
def test_path_db_agrees_with_brute_force(data):
    seed = data.draw(st.integers(0, 10**6))
    inst = random_path_instance(n=5, m=5, demands=data.draw(st.integers(1, 3)), tmax=5,
                                seed=seed, directed=data.draw(st.booleans()))
    got = solve_path_db(inst)
    assert got.answer == solve_brute_force(inst).answer
    if got.yes:
        assert verify(inst, got.witness).accepted
