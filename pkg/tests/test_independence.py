import pytest

from artin_morse.catalog import critical_A_independence, matching_A_independence
from artin_morse.independence import (
    SimpleGraph, check_braid_correspondence, expected_path_betti, graph_from_json, ind_complex,
    ind_path_betti, independence_morse_betti, path_graph, reduced_betti,
)
from artin_morse.morse import verify_acyclic


def test_classical_independence_complex_of_path():
    assert ind_path_betti(3, 1) == {0: 1}
    assert ind_path_betti(4, 1) == {}
    assert ind_path_betti(5, 1) == {1: 1}
    assert ind_path_betti(6, 1) == {1: 1}


def test_empty_complex_conventions():
    assert ind_path_betti(3, 0) == {-1: 1}
    assert ind_path_betti(0, 2) == {-1: 1}


def test_membership():
    K = ind_complex(path_graph(9), 3)
    assert K.contains_vertices([2, 3, 5, 6, 7, 9])
    assert not K.contains_vertices([1, 2, 3, 4])


def test_cycle_graph():
    c5 = SimpleGraph.from_pairs(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert reduced_betti(ind_complex(c5, 1)) == {1: 1}
    g = graph_from_json({"vertices": 3, "edges": [[0, 1, 3], [1, 2, 3]]})
    assert g == path_graph(3)
    with pytest.raises(ValueError):
        SimpleGraph(2, frozenset({(1, 3)}))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_morse_side_matches_direct_betti(d):
    for n in range(d + 1, 10):
        M = matching_A_independence(n, d)
        assert verify_acyclic(M)
        assert M.critical() == critical_A_independence(n, d)
        assert independence_morse_betti(n, d) == ind_path_betti(n - d, d - 2)


def test_braid_correspondence_small():
    assert check_braid_correspondence(6, 3)
    assert expected_path_betti(6, 4) == {}
    with pytest.raises(ValueError):
        check_braid_correspondence(2, 3)
