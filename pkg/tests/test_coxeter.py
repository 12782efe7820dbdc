import json
from pathlib import Path

import pytest

from artin_morse.coxeter import (
    INF, CoxeterGraph, brute_force_poincare, classify, component_exponent, degrees,
    graph_from_json, parse_family, poincare_polynomial, spherical_cells, type_A, type_B,
    type_tA, type_tC, weight_exponent,
)
from artin_morse.polyring import LaurentPoly

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen.json").read_text())


def test_classification_of_subgraphs():
    assert str(classify(type_tC(3), 0b0011)).startswith("B2")
    assert classify(type_tA(2), 0b111) is None
    assert sorted(classify(type_A(5), 0b10110).tags()) == ["A1", "A2"]
    e8 = CoxeterGraph(tuple(range(8)), tuple((i, i + 1, 3) for i in range(6)) + ((2, 7, 3),))
    assert classify(e8, e8.full).tags() == ["E8"]
    h3 = CoxeterGraph((0, 1, 2), ((0, 1, 5), (1, 2, 3)))
    assert classify(h3, 0b111).tags() == ["H3"]
    assert classify(CoxeterGraph((0, 1), ((0, 1, INF),)), 0b11) is None


def test_two_vertex_components():
    for m, tag in ((3, "A2"), (4, "B2"), (6, "I2(6)")):
        g = CoxeterGraph((0, 1), ((0, 1, m),))
        assert classify(g, 0b11).tags() == [tag]


def test_degree_tables():
    assert degrees("D4") == (2, 4, 6, 4)
    assert degrees("F4") == (2, 6, 8, 12)
    assert degrees("I2(7)") == (2, 7)


def test_spherical_cells_of_affine_types():
    assert len(spherical_cells(type_tA(2))) == 7
    assert len(spherical_cells(type_tC(2))) == 7
    assert len(spherical_cells(type_B(4))) == 16


@pytest.mark.parametrize("kind,k", [("A", k) for k in range(1, 6)] + [("B", k) for k in range(1, 5)])
def test_poincare_matches_enumeration(kind, k):
    g = type_A(k) if kind == "A" else type_B(k)
    closed = poincare_polynomial(g, g.full)
    assert closed == LaurentPoly.from_dense(0, FROZEN["poincare"][f"{kind}{k}"])
    if k <= 3:
        assert closed == brute_force_poincare(kind, k)


def test_weights():
    assert component_exponent("A3", 2) == 2
    assert component_exponent("B3", 4) == 1   # floor(3 / 2)
    assert component_exponent("B3", 3) == 1
    assert component_exponent("E6", 6) == 2
    assert weight_exponent(type_B(2), 0b11, 4) == 1
    assert weight_exponent(type_B(2), 0b10, 4) == 0


def test_graph_parsing():
    g = graph_from_json('{"vertices": 3, "edges": [[0, 1, 3], [1, 2, "inf"]]}')
    assert g.m(1, 2) == INF and g.m(0, 2) == 2
    assert parse_family("tC:4") == ("tC", 4)
    with pytest.raises(ValueError):
        parse_family("X:3")
    assert type_A(4).bitstring(0b0101) == "1010"
    assert type_A(4).from_bitstring("1010") == 0b0101
