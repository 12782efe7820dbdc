import pytest

from artin_morse.catalog import matching_A, matching_B, matching_for
from artin_morse.coxeter import type_A, type_B
from artin_morse.kernels import NonTerminating
from artin_morse.morse import (
    HomologyTable, Matching, NotAMatching, alternating_paths, collapse_check, homology_L_phi,
    matching_on_graph, morse_complex, morse_incidence, verify_acyclic, verify_precise,
    verify_weighted,
)


def test_matching_validation():
    cells = {0, 1, 2, 3}
    with pytest.raises(NotAMatching):
        Matching(2, frozenset(cells), {0: 3, 3: 0})
    with pytest.raises(NotAMatching):
        Matching(2, frozenset(cells), {0: 1})
    M = Matching(2, frozenset(cells), {0: 1, 1: 0})
    assert M.critical() == [2, 3] and M.pairs() == [(0, 1)]


def test_cycle_is_detected():
    # each vertex matched up to an edge, rotating around the triangle
    cells = frozenset(range(8)) - {0}
    M = Matching(3, cells, {0b001: 0b011, 0b011: 0b001, 0b010: 0b110, 0b110: 0b010, 0b100: 0b101, 0b101: 0b100})
    assert not verify_acyclic(M)
    with pytest.raises(NonTerminating):
        morse_complex(None, M)


def test_weighted_and_precise_A3():
    g = type_A(3)
    M = matching_A(3, 0, 2)
    assert verify_weighted(g, M, 2)
    mc = morse_complex(g, M, 2)
    assert verify_precise(mc)
    assert collapse_check(g, M, 2)
    phi = homology_L_phi(mc)
    # L_phi sits one degree above C: this is the H_0 torsion of Br_4
    assert phi.summands == {1: {1: 1}}


def test_empty_matching_is_not_weighted_dependent():
    g = type_B(2)
    M = matching_on_graph(g, lambda s: None)
    assert verify_weighted(g, M, 4)
    mc = morse_complex(g, M, 4)
    assert len(mc.cells()) == 4


def test_alternating_paths_agree_with_kernel():
    g = type_B(4)
    M = matching_B(4, 4)
    mc = morse_complex(g, M, 4, backend="python")
    for (s, t), v in mc.incidence.items():
        assert morse_incidence(M, s, t) == v
        assert all(p[0] == s and p[-1] == t for p, _ in alternating_paths(M, s, t))


def test_backends_agree():
    g = type_B(6)
    M = matching_for("B", 6, 6)
    assert morse_complex(g, M, 6, backend="python").incidence == morse_complex(g, M, 6).incidence


def test_homology_table_json():
    t = HomologyTable(2, {1: 1}, {0: {(3, 1): 2}})
    assert t.to_json() == [
        {"m": 0, "free_rank": 0, "torsion": [{"d": 3, "exp": 1, "mult": 2}]},
        {"m": 1, "free_rank": 1, "torsion": []},
    ]
    assert t == HomologyTable(2, {1: 1, 0: 0}, {0: {(3, 1): 2}, 1: {}})
