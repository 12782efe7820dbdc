import pytest

from artin_morse.catalog import (
    BadParams, FamilySpec, critical_A, critical_B, critical_tA, critical_tC, incidence_B,
    incidence_tA, incidence_tC, matching_A, partner_A,
)

# n = dk: the empty cell and the last vertex
EXPECTED_A4_D2 = [("upper", "0001", 1), ("lower", "0000", 0)]


def test_A_critical_cells_small():
    cells = critical_A(4, 0, 2)
    assert [(c.name, c.bits, c.exponent) for c in cells] == EXPECTED_A4_D2


def test_A_partner_is_involution():
    n, d = 7, 3
    for s in range(1 << n):
        p = partner_A(s, n, 0, d)
        if p is not None:
            assert partner_A(p, n, 0, d) == s


def test_A_matching_on_shifted_poset():
    M = matching_A(6, 2, 3)
    assert all(c & 0b11 == 0b11 for c in M.cells)


def test_B4_d4_closed_form():
    cells = critical_B(4, 4)
    assert cells["p0"].bits == "0101"
    assert {c.bits for c in cells.values()} == {"0101", "1101", "0111", "1111"}
    assert incidence_B(4, 4) == {("s0", "p0"): -1, ("p1", "p0"): 1, ("p2", "s0"): 1, ("p2", "p1"): 1}


def test_affine_A_with_n_plus_one_divisible():
    # n = 5, d = 3: k = 2, so q runs up to k - 1 and the top row is attached to sigma_bar
    cells = critical_tA(5, 3)
    assert len(cells) == 9
    assert cells["bar"].bits == "111110" and cells["bar"].exponent == 2
    assert cells["s1,0"].bits == "111011"
    assert incidence_tA(5, 3)[("bar", "p1,1")] == 1


def test_affine_C_odd_d_single_cell():
    assert list(critical_tC(3, 3)) == ["bar"]
    assert critical_tC(3, 3)["bar"].bits == "1110"
    assert all(abs(v) == 1 for v in incidence_tC(4, 4).values())


def test_bad_params():
    with pytest.raises(BadParams):
        FamilySpec("X", 3, 2)
    with pytest.raises(BadParams):
        FamilySpec("A", 3, 1)
    with pytest.raises(BadParams):
        FamilySpec("tA", 1, 2)
