import json

import pytest

from stabred.deformation import SpecialDeformationDatum, sdd_search
from stabred.field import build_field
from stabred.graph import (
    CHECK_NAMES,
    ComponentNode,
    ReductionGraph,
    graph_from_datum,
    graph_from_json,
    graph_to_json,
    graph_validate_special_shape,
    load_graph,
)
from stabred.modular import build_x2p_datum

F25 = build_field(5, 2)


def star(p=5, r=3, F=None):
    F = F or build_field(p, 2)
    nodes = [ComponentNode("Y0", "original", p, None, frozenset({"0", "1", "inf"}))]
    nodes += [ComponentNode(f"Y{i}", "tail", 1, F(i + 1), frozenset()) for i in range(1, r + 1)]
    return ReductionGraph(tuple(nodes), F)


def replace(g, idx, **changes):
    n = g.nodes[idx]
    fields = dict(id=n.id, kind=n.kind, inertia=n.inertia, attach=n.attach, marks=n.marks, parent=n.parent)
    fields.update(changes)
    nodes = list(g.nodes)
    nodes[idx] = ComponentNode(**fields)
    return ReductionGraph(tuple(nodes), g.field)


def failing(report):
    return {k for k, ok in report.checks.items() if not ok}


def test_star_is_valid():
    rep = graph_validate_special_shape(star(), 5)
    assert rep.passed
    assert set(rep.checks) == set(CHECK_NAMES)


def mutants():
    g = star()
    two_bad = replace(g, 1, kind="original", attach=None, marks=frozenset())
    swapped = replace(replace(g, 0, inertia=1), 1, inertia=5)
    dup = replace(g, 2, attach=g.nodes[1].attach)
    nested = replace(g, 3, parent="Y1")
    collide = replace(g, 1, attach=F25(0))
    lost_mark = replace(g, 0, marks=frozenset({"0", "1"}))
    double_mark = replace(g, 2, marks=frozenset({"inf"}))
    tail_inertia = replace(g, 2, inertia=5)
    exceptional = ReductionGraph(g.nodes[:1], g.field)
    return [
        ("two-originals", two_bad, {"unique-original"}),
        ("swapped-inertia", swapped, {"original-inertia-p", "tails-inertia-1"}),
        ("duplicate-attach", dup, {"attach-points-distinct"}),
        ("tail-on-tail", nested, {"star-shaped"}),
        ("attach-at-marked-point", collide, {"attach-avoids-marks"}),
        ("mark-missing", lost_mark, {"marks-assigned-once"}),
        ("mark-twice", double_mark, {"marks-assigned-once"}),
        ("tail-with-inertia-p", tail_inertia, {"tails-inertia-1"}),
        ("exceptional", exceptional, {"not-exceptional"}),
    ]


@pytest.mark.parametrize("name,graph,expected", mutants(), ids=[m[0] for m in mutants()])
def test_mutants_rejected_by_name(name, graph, expected):
    rep = graph_validate_special_shape(graph, 5)
    assert not rep.passed
    assert expected <= failing(rep)


def test_exceptional_message():
    rep = graph_validate_special_shape(ReductionGraph(star().nodes[:1]), 5)
    assert any("exceptional case" in m for m in rep.violations)


def test_wrong_prime_fails_inertia():
    assert "original-inertia-p" in failing(graph_validate_special_shape(star(p=5), 7))


@pytest.mark.parametrize("p,tails", [(5, 2), (7, 3), (11, 5)])
def test_from_modular_datum(p, tails):
    g = graph_from_datum(build_x2p_datum(p))
    assert len(g.tails()) == tails
    assert graph_validate_special_shape(g, p).passed


def test_round_trip_over_search_results():
    res = sdd_search(5, (2, 2), 2)
    for tup in res.tuples:
        g = graph_from_datum(SpecialDeformationDatum(F25, tup, res.signature))
        assert graph_validate_special_shape(g, 5).passed


def test_from_datum_rejects_invalid():
    with pytest.raises(ValueError):
        graph_from_datum(SpecialDeformationDatum(F25, (F25(0), F25(2)), (2, 2)))


def test_json_round_trip(tmp_path):
    g = graph_from_datum(build_x2p_datum(7))
    data = graph_to_json(g)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(data))
    g2, p = load_graph(path)
    assert p == 7 and g2 == g
    # without a field descriptor the prime must be supplied
    bare = {"nodes": data["nodes"]}
    with pytest.raises(ValueError):
        graph_from_json(bare)
    g3, _ = graph_from_json(bare, 7)
    assert graph_validate_special_shape(g3, 7).passed


def test_node_validation():
    with pytest.raises(ValueError):
        ComponentNode("x", "middle", 1)
    with pytest.raises(ValueError):
        ComponentNode("x", "tail", 0)
    with pytest.raises(ValueError):
        ComponentNode("x", "tail", 1, marks=frozenset({"2"}))
