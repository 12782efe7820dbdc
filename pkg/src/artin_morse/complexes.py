"""
Chain complexes on the spherical complex of a Coxeter graph.

Degree ``k`` holds the simplices with ``k`` vertices, so the empty simplex
sits in degree 0. Within a degree the basis is sorted by bitmask, which puts
the lowest vertex fastest-varying.

- ``C0``: integer boundary ``[sigma:tau]``
- ``C``: boundary ``[sigma:tau] * W_sigma(q) / W_tau(q)`` over Q[q, 1/q]
- ``L_phi``: simplices with positive phi_d exponent, integer boundary
"""
from __future__ import annotations

import dataclasses
from typing import Generic, TypeVar

from .coxeter import CoxeterGraph, poincare_polynomial, spherical_cells, weight_table
from .linalg import rank_q
from .polyring import LaurentPoly

T = TypeVar("T")


def incidence(sigma: int, tau: int) -> int:
    """
    ``(-1)^#{w in sigma : w < v}`` when ``tau = sigma minus {v}``, else 0.

    >>> incidence(0b1011, 0b0011)   # {1,2,4} -> {1,2}
    1
    >>> incidence(0b1011, 0b1001)   # {1,2,4} -> {1,4}
    -1
    """
    removed = sigma ^ tau
    if tau & ~sigma or removed == 0 or removed & (removed - 1):
        return 0
    return -1 if (sigma & (removed - 1)).bit_count() & 1 else 1


def facets(sigma: int):
    rest = sigma
    while rest:
        bit = rest & -rest
        rest ^= bit
        yield sigma ^ bit


@dataclasses.dataclass(frozen=True)
class ChainComplex(Generic[T]):
    """
    ``bases[k]`` is the sorted tuple of cells in degree ``k``;
    ``boundary[k][sigma]`` maps facets ``tau`` (degree ``k-1``) to coefficients.
    """
    nbits: int
    bases: dict[int, tuple[int, ...]]
    boundary: dict[int, dict[int, dict[int, T]]]

    def degrees(self) -> range:
        return range(self.nbits + 1)

    def basis(self, k: int) -> tuple[int, ...]:
        return self.bases.get(k, ())

    def cells(self):
        for k in self.degrees():
            yield from self.basis(k)

    def matrix(self, k: int, zero=0) -> list[list]:
        """Dense ``d_k`` with rows indexed by ``basis(k-1)``, columns by ``basis(k)``."""
        rows = {t: i for i, t in enumerate(self.basis(k - 1))}
        out = [[zero] * len(self.basis(k)) for _ in rows]
        for j, s in enumerate(self.basis(k)):
            for t, v in self.boundary.get(k, {}).get(s, {}).items():
                out[rows[t]][j] = v
        return out

    def rank_q(self, k: int) -> int:
        """Rank over Q of ``d_k`` (integer complexes only)."""
        return rank_q(self.boundary.get(k, {}).values())

    def betti_q(self) -> dict[int, int]:
        ranks = {k: self.rank_q(k) for k in self.degrees()}
        return {k: len(self.basis(k)) - ranks[k] - ranks.get(k + 1, 0) for k in self.degrees()}


IntChainComplex = ChainComplex
PolyChainComplex = ChainComplex


@dataclasses.dataclass(frozen=True)
class PhiWeightedComplex(ChainComplex):
    d: int = 0
    exponents: dict[int, int] = dataclasses.field(default_factory=dict)


def _integer_complex(nbits: int, cells) -> ChainComplex:
    cellset = set(cells)
    bases: dict[int, list[int]] = {}
    for c in sorted(cellset):
        bases.setdefault(c.bit_count(), []).append(c)
    boundary: dict[int, dict[int, dict[int, int]]] = {}
    for k, basis in bases.items():
        col = boundary.setdefault(k, {})
        for s in basis:
            col[s] = {t: incidence(s, t) for t in facets(s) if t in cellset}
    return ChainComplex(nbits, {k: tuple(v) for k, v in bases.items()}, boundary)


def build_C0(graph: CoxeterGraph) -> ChainComplex:
    return _integer_complex(graph.n_vertices, spherical_cells(graph))


def build_C(graph: CoxeterGraph) -> ChainComplex:
    base = build_C0(graph)
    boundary: dict[int, dict[int, dict[int, LaurentPoly]]] = {}
    for k, cols in base.boundary.items():
        out = boundary.setdefault(k, {})
        for s, col in cols.items():
            ws = poincare_polynomial(graph, s)
            out[s] = {t: ws.exact_div(poincare_polynomial(graph, t)) * v for t, v in col.items()}
    return ChainComplex(base.nbits, base.bases, boundary)


def build_Lphi(graph: CoxeterGraph, d: int) -> PhiWeightedComplex:
    weights = weight_table(graph, d)
    support = [s for s in spherical_cells(graph) if weights[s] > 0]
    base = _integer_complex(graph.n_vertices, support)
    return PhiWeightedComplex(base.nbits, base.bases, base.boundary, d, {s: weights[s] for s in support})


def filtration_subcomplex(graph: CoxeterGraph, d: int, s: int) -> tuple[int, ...]:
    """Simplices with phi_d exponent at most ``s`` (a subcomplex, since weights grow with faces)."""
    if s < 0:
        raise ValueError("s must be >= 0")
    weights = weight_table(graph, d)
    return tuple(c for c in spherical_cells(graph) if weights[c] <= s)


def e1_page(graph: CoxeterGraph, d: int) -> dict[tuple[int, int], int]:
    """
    Ranks of ``E^1_{p,q} = H_{p+q}(F^p / F^{p-1})`` over R/(phi^p) for p >= 1.

    The quotient keeps only simplices of exponent exactly ``p``; since every
    nonzero rational is a unit mod phi^p, ranks over Q suffice. Zero entries
    are omitted.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    weights = weight_table(graph, d)
    by_p: dict[int, list[int]] = {}
    for c in spherical_cells(graph):
        if weights[c] > 0:
            by_p.setdefault(weights[c], []).append(c)
    page = {}
    for p, cells in sorted(by_p.items()):
        betti = _integer_complex(graph.n_vertices, cells).betti_q()
        for k, b in betti.items():
            if b:
                page[p, k - p] = b
    return page
