import json

import pytest

from graphspectra.buildings import family_presentation
from graphspectra.graphs import directed_edge_matrix, theta_graph
from graphspectra.io import (
    emit,
    graph_to_dict,
    k_theory_to_dict,
    load_graph,
    load_matrix,
    load_presentation,
    load_sft,
    presentation_to_dict,
    round_floats,
)
from graphspectra.ktheory import AbelianGroup


def test_graph_round_trip(tmp_path):
    g = theta_graph()
    path = tmp_path / "g.json"
    path.write_text(json.dumps(graph_to_dict(g)))
    assert load_graph(path) == g


def test_matrix_round_trip(tmp_path):
    em = directed_edge_matrix(theta_graph())
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"matrix": [list(r) for r in em.matrix],
                                "labels": list(em.labels)}))
    assert load_matrix(path).matrix == em.matrix


def test_sft_with_involution(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({
        "matrix": [[1, 1, 0, 1], [1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1]],
        "involution": [[0, 2], [1, 3]],
    }))
    s = load_sft(path)
    assert s.involution == (2, 3, 0, 1)


def test_presentation_round_trip(tmp_path):
    p = family_presentation(2)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(presentation_to_dict(p)))
    loaded = load_presentation(path)
    assert loaded.orbits() == p.orbits()
    assert loaded.lam_map() == p.lam_map()


def test_k_theory_dict():
    out = k_theory_to_dict(AbelianGroup(2, (3,)), AbelianGroup(2))
    assert out == {"k0": {"rank": 2, "torsion": [3]}, "k1": {"rank": 2}}


def test_round_floats():
    value = round_floats({"x": 1.23456789012345678, "xs": [0.1 + 0.2]})
    assert value["x"] == float("1.23456789012")
    assert value["xs"][0] == 0.3


def test_emit_json_stable():
    report = {"b": 1.0 / 3.0, "a": [1, 2]}
    assert emit(report, "json") == emit(report, "json")


def test_emit_table_alignment():
    rows = [{"name": "x", "value": 1}, {"name": "longer", "value": 22}]
    text = emit({"rows": rows}, "table", rows).decode()
    lines = text.splitlines()
    assert lines[0].startswith("name")
    assert len(lines) == 3
