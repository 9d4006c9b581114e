import itertools
import random

import pytest

from delaybetter.generate import random_instance
from delaybetter.model import Delaying, NoReason, ProblemKind, make_instance
from delaybetter.reach import verify
from delaybetter.solvers import (
    BudgetExceeded,
    SolverConfig,
    SolverError,
    choose_engine,
    compute_fes,
    solve,
    solve_brute_force,
    solve_db_fes,
    solve_db_single_source,
    solve_db_tree,
)
from delaybetter.solvers.fes import _Search
from support import exhaustive_db_oracle

# tree engine


def test_star_yes():
    inst = make_instance(False, [("a", "c", 2), ("c", "b", 1)], [("a", "b", 3)])
    res = solve_db_tree(inst)
    assert res.yes and res.witness[("b", "c")] == 3
    assert solve_brute_force(inst).yes


def test_star_no():
    inst = make_instance(False, [("a", "c", 2), ("c", "b", 1)], [("a", "b", 2)])
    assert not solve_db_tree(inst).yes
    assert not solve_brute_force(inst).yes


def test_orientation_blocked():
    inst = make_instance(True, [("u", "v", 1), ("v", "w", 1)], [("w", "u", 5)])
    res = solve_db_tree(inst)
    assert not res.yes and res.reason is NoReason.ORIENTATION_BLOCKED


def test_tree_rejects_cycles():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)], [("a", "c", 1)])
    with pytest.raises(SolverError) as err:
        solve_db_tree(inst)
    assert err.value.code == "NOT_A_TREE"


def test_tree_delta_cap():
    inst = make_instance(True, [("a", "b", 3), ("b", "c", 1)], [("a", "c", 5)], delta=1)
    res = solve_db_tree(inst)
    assert not res.yes and res.reason is NoReason.DELTA_CAP_EXCEEDED
    assert not solve_brute_force(inst).yes


# single-source engine


def test_single_source_prefers_delayed_detour():
    inst = make_instance(True, [("v", "a", 5), ("v", "b", 1), ("b", "a", 1)], [("v", "a", 2)])
    res = solve_db_single_source(inst)
    assert res.yes and res.witness[("b", "a")] == 2
    assert solve_brute_force(inst).yes


def test_single_source_cannot_advance():
    inst = make_instance(True, [("v", "u", 3)], [("v", "u", 2)])
    assert not solve_db_single_source(inst).yes


def test_single_source_trivial_demand():
    inst = make_instance(True, [("v", "u", 3)], [("v", "v", 0)])
    assert solve_db_single_source(inst).yes


def test_mixed_sources():
    inst = make_instance(True, [("a", "b", 1), ("b", "c", 1)], [("a", "b", 3), ("b", "c", 3)])
    with pytest.raises(SolverError) as err:
        solve_db_single_source(inst)
    assert err.value.code == "MIXED_SOURCES"


# FES


def test_fes_sizes():
    tree = make_instance(False, [("a", "b", 1), ("b", "c", 1)], [])
    c4 = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)], [])
    two = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "a", 1),
                                ("x", "y", 1), ("y", "z", 1), ("z", "x", 1)], [])
    assert compute_fes(tree.graph).rho == 0
    assert compute_fes(c4.graph).rho == 1
    assert compute_fes(two.graph).rho == 2


def test_fes_c4():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)],
                         [("a", "c", 2)])
    res = solve_db_fes(inst)
    assert res.yes and verify(inst, res.witness).accepted


def test_fes_directed_triangle():
    inst = make_instance(True, [("u", "v", 1), ("v", "w", 1), ("w", "u", 1)], [("w", "v", 3)])
    res = solve_db_fes(inst)
    assert res.yes
    assert res.routes[0] == (("w", "u", 1), ("u", "v", 2))


def test_fes_budget():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)],
                         [("a", "b", 1)] * 3)
    with pytest.raises(BudgetExceeded):
        solve_db_fes(inst, branch_budget=10)


@pytest.mark.parametrize("seed", range(200))
def test_fes_on_trees_matches_tree_engine(seed):
    inst = random_instance("tree", n=6, demands=3, seed=seed, directed=seed % 2 == 0)
    assert solve_db_fes(inst).answer == solve_db_tree(inst).answer


def test_fes_branches_are_simple_and_ordered():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1),
                                 ("a", "c", 1)], [("a", "c", 2), ("b", "d", 3)])
    search = _Search(inst)
    for ordering in itertools.permutations(search.fes):
        for options in search.routes_for(ordering):
            for sel, walk in options:
                assert len(set(walk)) == len(walk)
                used = [h for h in zip(walk, walk[1:])
                        if frozenset(h) in {frozenset(e) for e in ordering}]
                rank = [ordering.index(tuple(sorted(h))) if tuple(sorted(h)) in ordering
                        else ordering.index(h) for h in used]
                assert rank == sorted(rank)


def test_fes_parallel_matches_serial():
    inst = random_instance("low-fes", n=6, rho=2, demands=2, seed=4)
    serial = solve_db_fes(inst)
    parallel = solve_db_fes(inst, jobs=2)
    assert serial.answer == parallel.answer
    if serial.yes:
        assert serial.witness == parallel.witness


# brute force


@pytest.mark.parametrize("t,d", [(1, 0), (1, 1), (2, 1), (3, 5)])
def test_one_edge_brute_force(t, d):
    inst = make_instance(True, [("u", "v", t)], [("u", "v", d)])
    assert solve_brute_force(inst).yes == (t <= d)


def test_delta_zero_forbids_delays():
    inst = make_instance(True, [("a", "b", 1), ("b", "c", 1)], [("a", "c", 2)], delta=0)
    assert not solve_brute_force(inst).yes
    assert solve_brute_force(inst.replace(delta=1)).yes


def test_brute_force_budget():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)],
                         [("a", "c", 3), ("b", "d", 3), ("c", "a", 3), ("d", "b", 3)])
    assert solve_brute_force(inst).stats["states"] > 3
    with pytest.raises(BudgetExceeded):
        solve_brute_force(inst, state_budget=3)


def test_brute_force_witness_is_lexicographically_first():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)], [("a", "c", 3)])
    res = solve_brute_force(inst)
    assert res.witness.as_sequence(inst.graph) == [1, 1, 1]


@pytest.mark.parametrize("seed", range(150))
def test_brute_force_matches_exhaustive_enumeration(seed):
    rng = random.Random(seed)
    inst = random_instance("random", n=4, m=rng.randint(2, 4), demands=2, tmax=4, seed=seed,
                           directed=seed % 2 == 1, delta=rng.choice([None, 0, 1]))
    assert solve_brute_force(inst).yes == exhaustive_db_oracle(inst, max(inst.t_max, 1))


# dispatcher


def test_dispatch_choices():
    path = make_instance(True, [("u", "v", 1)], [("u", "v", 1, "uv")])
    tree = make_instance(False, [("a", "b", 1), ("b", "c", 1)], [("a", "c", 2), ("c", "a", 3)])
    assert choose_engine(path)[0] == "pathdb"
    assert choose_engine(tree)[0] == "tree"
    assert solve(path).algorithm == "pathdb"
    assert solve(tree).algorithm == "tree"


def test_dense_instance_uses_fes():
    rng = random.Random(0)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "c"), ("b", "d"), ("c", "e")]
    inst = make_instance(False, [(u, v, rng.randint(1, 3)) for u, v in edges],
                         [("a", "e", 4), ("e", "b", 5)])
    assert compute_fes(inst.graph).rho == 3
    res = solve(inst)
    assert res.algorithm == "fes"
    assert res.answer == solve_brute_force(inst).answer


def test_undecided_when_every_budget_runs_out():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)],
                         [("a", "c", 3), ("b", "d", 3), ("c", "a", 3), ("d", "b", 3)])
    with pytest.raises(SolverError) as err:
        solve(inst, config=SolverConfig(branch_budget=1, state_budget=1))
    assert err.value.code == "UNDECIDED"


@pytest.mark.parametrize("seed", range(60))
def test_dispatch_witness_refers_to_original_times(seed):
    inst = random_instance("random", n=5, m=5, demands=2, tmax=6, seed=seed)
    big = inst.replace(graph=inst.graph.with_labels([t * 97 for t in inst.graph.initial_labels]),
                       demands=tuple(type(d)(d.source, d.target, d.deadline * 97)
                                     for d in inst.demands))
    res = solve(big)
    assert res.answer == solve_brute_force(inst).answer
    if res.yes:
        assert verify(big, res.witness).accepted


@pytest.mark.parametrize("seed", range(40))
def test_db_equals_delta_db_with_large_delta(seed):
    inst = random_instance("random", n=5, m=6, demands=2, tmax=5, seed=seed, directed=seed % 2 == 0)
    assert solve(inst).answer == solve(inst.replace(delta=inst.t_max, kind=ProblemKind.DELTA_DB)).answer


@pytest.mark.parametrize("seed", range(40))
def test_raising_a_deadline_never_hurts(seed):
    inst = random_instance("random", n=5, m=6, demands=3, tmax=5, seed=seed)
    base = solve_brute_force(inst).yes
    for i, d in enumerate(inst.demands):
        ds = list(inst.demands)
        ds[i] = type(d)(d.source, d.target, d.deadline + 1)
        if base:
            assert solve_brute_force(inst.replace(demands=tuple(ds))).yes


def test_explicit_engine_choice():
    inst = make_instance(False, [("a", "b", 1), ("b", "c", 1)], [("a", "c", 2)])
    for algo in ("tree", "fes", "brute", "single-source"):
        assert solve(inst, algo).yes
    assert inst.kind is ProblemKind.DB
    assert solve(inst).witness == Delaying({("a", "b"): 1, ("b", "c"): 2})
