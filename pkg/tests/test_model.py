import json

import pytest

from delaybetter.generate import random_instance, random_path_instance
from delaybetter.model import (
    Answer,
    Delaying,
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
from delaybetter.pathdb import solve_path_db


def doc(**over):
    base = {
        "directed": True,
        "vertices": ["u", "v"],
        "edges": [{"u": "u", "v": "v", "time": 1}],
        "demands": [{"from": "u", "to": "v", "deadline": 1}],
    }
    base.update(over)
    return json.dumps(base)


def test_smallest_instance():
    inst = parse_instance(doc())
    assert inst.kind is ProblemKind.DB
    assert inst.t_init == 1 and inst.t_max == 1


def test_time_zero_is_invalid():
    with pytest.raises(InstanceError) as err:
        parse_instance(doc(edges=[{"u": "u", "v": "v", "time": 0}]))
    assert err.value.code == "INVALID"
    assert "edges[0]" in str(err.value)


def test_path_repeating_a_vertex_is_invalid():
    text = json.dumps({
        "directed": False,
        "vertices": ["a", "b", "c"],
        "edges": [{"u": "a", "v": "b", "time": 1}, {"u": "b", "v": "c", "time": 1}],
        "demands": [{"from": "a", "to": "a", "deadline": 3,
                     "path": [["a", "b"], ["b", "c"], ["c", "b"], ["b", "a"]]}],
    })
    with pytest.raises(InstanceError):
        parse_instance(text)


def test_syntax_error_reports_position():
    with pytest.raises(InstanceError) as err:
        parse_instance('{"directed": true,\n  "vertices": [}')
    assert err.value.code == "MALFORMED"
    assert "line 2" in str(err.value)


@pytest.mark.parametrize("edges", [
    [("a", "a", 1)],
    [("a", "b", 1), ("b", "a", 2)],
    [("a", "zz", 1)],
])
def test_undirected_invariants(edges):
    with pytest.raises(InstanceError):
        TemporalGraph(False, ("a", "b"), tuple(Edge(*e) for e in edges))


def test_antiparallel_arcs_allowed_when_directed():
    g = TemporalGraph(True, ("a", "b"), (Edge("a", "b", 1), Edge("b", "a", 2)))
    assert len(g.edges) == 2


def test_undirected_edges_are_canonical():
    g = TemporalGraph(False, ("a", "b"), (Edge("b", "a", 4),))
    assert g.keys == (("a", "b"),)
    assert g.key("b", "a") == ("a", "b")


def test_delta_presence_matches_kind():
    g = TemporalGraph(True, ("a", "b"), (Edge("a", "b", 1),))
    with pytest.raises(InstanceError):
        Instance(g, (Demand("a", "b", 1),), None, ProblemKind.DELTA_DB)
    with pytest.raises(InstanceError):
        Instance(g, (Demand("a", "b", 1),), -1)


def test_paths_only_in_path_kind():
    g = TemporalGraph(True, ("a", "b"), (Edge("a", "b", 1),))
    with pytest.raises(InstanceError):
        Instance(g, (PathDemand("a", "b", 1, (("a", "b"),)), Demand("a", "b", 1)))


def test_directed_path_against_orientation_is_invalid():
    with pytest.raises(InstanceError):
        make_instance(True, [("a", "b", 1)], [("b", "a", 3, "ba")])


@pytest.mark.parametrize("seed", range(25))
def test_instance_round_trip(seed):
    kinds = ["random", "tree", "low-fes", "lifetime2"]
    inst = random_instance(kinds[seed % 4], n=5, m=6, seed=seed, directed=seed % 2 == 0,
                           delta=seed % 3 if seed % 5 == 0 else None)
    assert parse_instance(serialize_instance(inst)) == inst


@pytest.mark.parametrize("seed", range(10))
def test_path_instance_round_trip(seed):
    inst = random_path_instance(seed=seed, directed=seed % 2 == 1)
    assert parse_instance(serialize_instance(inst)) == inst


def test_yes_solution_round_trip():
    inst = make_instance(True, [("u", "v", 2), ("v", "w", 1)], [("u", "w", 3, "uvw")])
    res = solve_path_db(inst)
    back = parse_solution(serialize_solution(res), inst.graph)
    assert back.answer is Answer.YES
    assert back.witness == res.witness
    assert back.routes == res.routes


def test_no_solution_document():
    res = SolveResult(Answer.NO, reason=NoReason.PRECEDENCE_CYCLE, algorithm="pathdb")
    obj = json.loads(serialize_solution(res))
    assert obj["answer"] == "no" and obj["reason"] == "PRECEDENCE_CYCLE"
    assert parse_solution(serialize_solution(res)).reason is NoReason.PRECEDENCE_CYCLE


def test_solution_labels_are_canonicalised():
    g = TemporalGraph(False, ("a", "b"), (Edge("a", "b", 1),))
    text = json.dumps({"answer": "yes", "labels": [{"u": "b", "v": "a", "time": 2}]})
    assert parse_solution(text, g).witness == Delaying({("a", "b"): 2})


def test_delaying_is_hashable_and_immutable():
    d = Delaying({("a", "b"): 1})
    assert hash(d) == hash(Delaying({("a", "b"): 1}))
    with pytest.raises(TypeError):
        d.labels[("a", "b")] = 5


@pytest.mark.parametrize("text", [b"\xff\xfe", b"[]", b'{"directed": 1}', b"",
                                  b'{"directed": false, "vertices": ["a"], "edges": [], "demands": [{"from": "a"}]}'])
def test_garbage_yields_diagnostics(text):
    with pytest.raises(InstanceError):
        parse_instance(text)
