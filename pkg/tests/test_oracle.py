import json
from pathlib import Path

import pytest

from artin_morse.catalog import graph_for
from artin_morse.complexes import build_C
from artin_morse.coxeter import parse_family
from artin_morse.oracle import divisibility_chain, homology_direct, snf_int, snf_poly
from artin_morse.polyring import ONE, Q, ZERO, cyclotomic

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen.json").read_text())


def test_snf_int():
    assert snf_int([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diagonal == (2, 6, 12)
    assert snf_int([[0, 0], [0, 0]]).rank == 0
    assert snf_int([[6, 0], [0, 4]]).diagonal == (2, 12)


def test_snf_poly_gcd_lcm():
    p2, p3 = cyclotomic(2), cyclotomic(3)
    res = snf_poly([[p2, ZERO], [ZERO, p3]])
    assert res.diagonal == (ONE, p2 * p3)
    assert divisibility_chain(res)


def test_snf_poly_clears_units():
    res = snf_poly([[Q ** -3 * cyclotomic(4)]])
    assert res.diagonal == (cyclotomic(4),)


@pytest.mark.parametrize("key", sorted(FROZEN["homology"]))
def test_homology_matches_frozen(key):
    family, n = parse_family(key)
    assert homology_direct(build_C(graph_for(family, n))).to_json() == FROZEN["homology"][key]
