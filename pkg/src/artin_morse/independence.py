"""
r-independence complexes and their reduced homology over Q.

``Ind_r(G)`` consists of the non-empty vertex sets whose induced subgraph
has only components with at most ``r`` vertices. Vertices are ``1..n``;
simplices are bitmasks with bit ``i`` for vertex ``i + 1``.
"""
from __future__ import annotations

import dataclasses
import functools
import json

from .catalog import matching_A_independence, provider
from .complexes import facets, incidence
from .coxeter import type_A
from .kernels import morse_boundary
from .linalg import rank_q
from .morse import homology_artin


@dataclasses.dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.n_vertices and 1 <= b <= self.n_vertices):
                raise ValueError(f"edge ({a}, {b}) out of range")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> SimpleGraph:
        return cls(n, frozenset((min(a, b), max(a, b)) for a, b in pairs))

    @functools.cached_property
    def neighbours(self) -> tuple[int, ...]:
        nb = [0] * self.n_vertices
        for a, b in self.edges:
            nb[a - 1] |= 1 << (b - 1)
            nb[b - 1] |= 1 << (a - 1)
        return tuple(nb)

    def component_sizes(self, sigma: int) -> list[int]:
        sizes = []
        rest = sigma
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = self.neighbours[bit.bit_length() - 1] & sigma & ~comp
                comp |= new
                frontier |= new
            sizes.append(comp.bit_count())
            rest &= ~comp
        return sizes


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_pairs(n, [(i, i + 1) for i in range(1, n)])


def graph_from_json(data: dict | str) -> SimpleGraph:
    """Same edge-list format as Coxeter graphs (positions 0..n-1); labels are ignored."""
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["vertices"])
    return SimpleGraph.from_pairs(n, [(int(e[0]) + 1, int(e[1]) + 1) for e in data.get("edges", [])])


@dataclasses.dataclass(frozen=True)
class IndComplex:
    graph: SimpleGraph
    r: int
    simplices: tuple[int, ...]

    def __contains__(self, sigma: int) -> bool:
        return sigma in self._set

    @functools.cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.simplices)

    def contains_vertices(self, vertices) -> bool:
        return sum(1 << (v - 1) for v in vertices) in self


def ind_complex(G: SimpleGraph, r: int) -> IndComplex:
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return IndComplex(G, r, ())
    out = [s for s in range(1, 1 << G.n_vertices) if max(G.component_sizes(s)) <= r]
    return IndComplex(G, r, tuple(out))


def reduced_betti(complex_: IndComplex) -> dict[int, int]:
    """Nonzero reduced Betti numbers by dimension, from the augmented chain complex."""
    cells = set(complex_.simplices) | {0}
    by_size: dict[int, list[int]] = {}
    for c in cells:
        by_size.setdefault(c.bit_count(), []).append(c)
    ranks = {}
    for k, basis in by_size.items():
        if k == 0:
            ranks[k] = 0
            continue
        ranks[k] = rank_q({t: incidence(s, t) for t in facets(s) if t in cells} for s in basis)
    out = {}
    for k, basis in by_size.items():
        b = len(basis) - ranks[k] - ranks.get(k + 1, 0)
        if b:
            out[k - 1] = b
    return out


def ind_path_betti(n: int, r: int) -> dict[int, int]:
    return reduced_betti(ind_complex(path_graph(n), r))


def expected_path_betti(n: int, d: int) -> dict[int, int]:
    """Ind_{d-2}(A_n) is a (dk - 2k - 1)-sphere for n in {dk, dk - 1} and acyclic otherwise."""
    for k in ((n + 1) // d, n // d):
        if k >= 0 and n in (d * k, d * k - 1):
            return {d * k - 2 * k - 1: 1}
    return {}


def check_braid_correspondence(n: int, d: int) -> bool:
    """
    Compare b~_{m-d+1}(Ind_{d-2}(A_{n-d})) with the phi_d multiplicity of
    H_m(Br_{n+1}; R) for every m.
    """
    if n < d:
        raise ValueError("need n >= d")
    betti = ind_path_betti(n - d, d - 2) if n > d else {-1: 1}
    table = homology_artin(type_A(n), provider("A", n), d_values=[d])
    for m in range(n + 1):
        if betti.get(m - d + 1, 0) != table.phi_multiplicity(m, d):
            return False
    return all(0 <= j + d - 1 <= n for j in betti)


def independence_morse_betti(n: int, d: int) -> dict[int, int]:
    """
    Betti numbers of the Morse complex of the matching on K minus Ind_{d-2}(A_n),
    reindexed as reduced degrees of Ind_{d-2}(A_{n-d}) (drop the last d-1 vertices).
    """
    M = matching_A_independence(n, d)
    dom, par = M.packed()
    edges = morse_boundary(n, dom, par)
    crit = M.critical()
    by_size: dict[int, list[int]] = {}
    for c in crit:
        by_size.setdefault(c.bit_count(), []).append(c)
    rows: dict[int, dict[int, int]] = {c: {} for c in crit}
    for s, t, v in edges:
        rows[s][t] = v
    ranks = {k: rank_q(rows[c] for c in basis) for k, basis in by_size.items()}
    out = {}
    for k, basis in by_size.items():
        b = len(basis) - ranks[k] - ranks.get(k + 1, 0)
        if b:
            out[k - d] = b
    return out
