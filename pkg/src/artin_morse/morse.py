"""
Weighted discrete Morse theory on bitmask posets.

A :class:`Matching` pairs cells along cover relations. From an acyclic,
weighted matching :func:`morse_complex` builds the Morse complex on the
critical cells; for precise matchings :func:`homology_L_phi` and
:func:`homology_artin` read off the homology.
"""
from __future__ import annotations

import dataclasses
from typing import Callable, Iterable, Mapping

from . import kernels
from .complexes import build_C0, incidence
from .coxeter import CoxeterGraph, max_weight_d, spherical_cells, weight_table
from .linalg import rank_q
from .kernels import NonTerminating


class NotAMatching(ValueError):
    pass


class NotPrecise(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Matching:
    """
    ``partner`` maps every matched cell to its mate, in both directions.
    ``cells`` is the domain (a subposet of the full simplex on ``nbits`` vertices).
    """
    nbits: int
    cells: frozenset[int]
    partner: Mapping[int, int]

    def __post_init__(self):
        for a, b in self.partner.items():
            if a not in self.cells or b not in self.cells:
                raise NotAMatching(f"pair ({a}, {b}) leaves the domain")
            if self.partner.get(b) != a:
                raise NotAMatching(f"pair ({a}, {b}) is not symmetric")
            diff = a ^ b
            if diff == 0 or diff & (diff - 1) or (a & b) not in (a, b):
                raise NotAMatching(f"cells {a} and {b} do not differ by one vertex")

    @classmethod
    def from_partner_function(cls, nbits: int, cells: Iterable[int], fn: Callable[[int], int | None]) -> Matching:
        cells = frozenset(cells)
        partner = {}
        for c in cells:
            p = fn(c)
            if p is not None:
                partner[c] = p
        return cls(nbits, cells, partner)

    @classmethod
    def empty(cls, nbits: int, cells: Iterable[int]) -> Matching:
        return cls(nbits, frozenset(cells), {})

    def critical(self) -> list[int]:
        return sorted(c for c in self.cells if c not in self.partner)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched pairs as (smaller cell, larger cell)."""
        return sorted((a, b) for a, b in self.partner.items() if a & b == a)

    def packed(self):
        return kernels.pack(self.nbits, self.cells, self.partner)


def verify_acyclic(M: Matching) -> bool:
    dom, par = M.packed()
    return not kernels.find_cycle(M.nbits, dom, par)


def verify_weighted(graph: CoxeterGraph, M: Matching, d: int) -> bool:
    w = weight_table(graph, d)
    return all(w[a] == w[b] for a, b in M.partner.items())


def alternating_paths(M: Matching, sigma: int, tau: int) -> list[tuple[list[int], int]]:
    """
    Every alternating path ``sigma > tau_1 < sigma_1 > ... > tau`` with its sign
    ``(-1)^m [sigma:tau_1][sigma_1:tau_1]...``, found by depth-first search.
    """
    limit = 2 * len(M.cells) + 2
    out = []
    stack = [([sigma], 1)]
    while stack:
        path, sign = stack.pop()
        if len(path) > limit:
            raise NonTerminating("alternating path longer than the poset allows")
        top = path[-1]
        for f in sorted(_facets(top), reverse=True):
            if f not in M.cells or M.partner.get(top) == f:
                continue
            s = sign * incidence(top, f)
            if f == tau:
                out.append((path + [f], s))
                continue
            up = M.partner.get(f)
            if up is None or up & f != f:
                continue
            stack.append((path + [f, up], -s * incidence(up, f)))
    out.reverse()
    return out


def morse_incidence(M: Matching, sigma: int, tau: int) -> int:
    return sum(s for _, s in alternating_paths(M, sigma, tau))


def _facets(x: int):
    rest = x
    while rest:
        bit = rest & -rest
        rest ^= bit
        yield x ^ bit


@dataclasses.dataclass(frozen=True)
class MorseComplex:
    """Critical cells by degree (number of vertices), their exponents and the Morse boundary."""
    d: int
    nbits: int
    critical: dict[int, tuple[int, ...]]
    exponents: dict[int, int]
    incidence: dict[tuple[int, int], int]

    def cells(self) -> list[int]:
        return [c for k in sorted(self.critical) for c in self.critical[k]]

    def degree_of(self, cell: int) -> int:
        return cell.bit_count()

    def boundary_rows(self, k: int) -> list[dict[int, int]]:
        """``delta_k`` as sparse rows, one per critical cell of degree ``k``."""
        rows: dict[int, dict[int, int]] = {s: {} for s in self.critical.get(k, ())}
        for (s, t), v in self.incidence.items():
            if s in rows:
                rows[s][t] = v
        return [rows[s] for s in self.critical.get(k, ())]

    def rank_delta(self, k: int) -> int:
        return rank_q(self.boundary_rows(k))

    def components(self) -> list[list[int]]:
        """Connected components of the incidence graph, orientation ignored."""
        parent = {c: c for c in self.cells()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.incidence:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for c in self.cells():
            groups.setdefault(find(c), []).append(c)
        return [sorted(g) for _, g in sorted(groups.items())]


def morse_complex(graph: CoxeterGraph | None, M: Matching, d: int = 0, backend: str | None = None) -> MorseComplex:
    if not verify_acyclic(M):
        raise NonTerminating("matching has a cycle")
    if d > 0:
        if graph is None:
            raise ValueError("a weighted Morse complex needs the graph")
        if not verify_weighted(graph, M, d):
            raise NotAMatching(f"matching is not weighted for d={d}")
    dom, par = M.packed()
    edges = kernels.morse_boundary(M.nbits, dom, par, backend=backend)
    crit: dict[int, list[int]] = {}
    for c in M.critical():
        crit.setdefault(c.bit_count(), []).append(c)
    weights = weight_table(graph, d) if d > 0 else {}
    return MorseComplex(
        d,
        M.nbits,
        {k: tuple(v) for k, v in crit.items()},
        {c: weights.get(c, 0) for k in crit for c in crit[k]},
        {(s, t): v for s, t, v in edges},
    )


def verify_precise(mc: MorseComplex) -> bool:
    return all(mc.exponents[s] == mc.exponents[t] + 1 for s, t in mc.incidence)


@dataclasses.dataclass(frozen=True)
class PhiHomology:
    """``summands[m]`` maps an exponent ``e >= 1`` to the multiplicity of R/(phi^e)."""
    d: int
    summands: dict[int, dict[int, int]]

    def multiplicity(self, m: int, e: int = 1) -> int:
        return self.summands.get(m, {}).get(e, 0)


@dataclasses.dataclass(frozen=True)
class HomologyTable:
    """Per degree: free rank and ``(d, exponent) -> multiplicity`` torsion."""
    n_degrees: int
    free: dict[int, int]
    torsion: dict[int, dict[tuple[int, int], int]]

    def torsion_list(self, m: int) -> list[tuple[int, int, int]]:
        return sorted((d, e, k) for (d, e), k in self.torsion.get(m, {}).items() if k)

    def phi_multiplicity(self, m: int, d: int) -> int:
        return sum(k for (dd, _), k in self.torsion.get(m, {}).items() if dd == d)

    def normalized(self) -> tuple:
        return tuple(
            (m, self.free.get(m, 0), tuple(self.torsion_list(m))) for m in range(self.n_degrees)
        )

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.normalized() == other.normalized()

    def to_json(self) -> list[dict]:
        return [
            {
                "m": m,
                "free_rank": free,
                "torsion": [{"d": d, "exp": e, "mult": k} for d, e, k in tors],
            }
            for m, free, tors in self.normalized()
        ]


def _offsets(mc: MorseComplex, comp: list[int]) -> set[int]:
    return {mc.exponents[c] - c.bit_count() for c in comp}


def homology_L_phi(mc: MorseComplex) -> PhiHomology:
    if not verify_precise(mc):
        raise NotPrecise("Morse complex is not precise")
    summands: dict[int, dict[int, int]] = {}

    def add(m, e, mult):
        if e >= 1 and mult:
            row = summands.setdefault(m, {})
            row[e] = row.get(e, 0) + mult

    for comp in mc.components():
        offsets = _offsets(mc, comp)
        if len(offsets) != 1:
            raise NotPrecise("offset not constant on a component")
        k_i = offsets.pop()
        members = set(comp)
        sub = MorseComplex(
            mc.d,
            mc.nbits,
            _group(comp),
            {c: mc.exponents[c] for c in comp},
            {e: v for e, v in mc.incidence.items() if e[0] in members},
        )
        for m in sub.critical:
            dim = len(sub.critical[m])
            h = dim - sub.rank_delta(m) - sub.rank_delta(m + 1)
            add(m, m + k_i, h)
    for m in mc.critical:
        add(m, 1, mc.rank_delta(m))
    return PhiHomology(mc.d, summands)


def _group(cells: list[int]) -> dict[int, tuple[int, ...]]:
    out: dict[int, list[int]] = {}
    for c in cells:
        out.setdefault(c.bit_count(), []).append(c)
    return {k: tuple(v) for k, v in out.items()}


def homology_artin(graph: CoxeterGraph, provider: Callable[[int], Matching], d_values: Iterable[int] | None = None) -> HomologyTable:
    """
    ``H_m = (+)_phi (R/phi)^(rank delta^phi_{m+1}) (+) H_m(C0)``.

    ``provider(d)`` returns a precise matching for phi_d. ``d_values``
    restricts the cyclotomic factors considered (all 2..d_max by default).
    """
    n = graph.n_vertices
    torsion: dict[int, dict[tuple[int, int], int]] = {}
    if d_values is None:
        d_values = range(2, max_weight_d(graph) + 1)
    for d in d_values:
        mc = morse_complex(graph, provider(d), d)
        if not verify_precise(mc):
            raise NotPrecise(f"matching for d={d} is not precise")
        for m in range(n + 1):
            r = mc.rank_delta(m + 1)
            if r:
                torsion.setdefault(m, {})[d, 1] = r
    betti = build_C0(graph).betti_q()
    return HomologyTable(n + 1, {m: b for m, b in betti.items() if b}, torsion)


def collapse_check(graph: CoxeterGraph, M: Matching, d: int) -> bool:
    """
    Per component of the Morse complex, the quotients F^p / F^(p-1) must have
    homology only in degree ``p - k_i``.
    """
    mc = morse_complex(graph, M, d)
    for comp in mc.components():
        offsets = _offsets(mc, comp)
        if len(offsets) != 1:
            return False
        k_i = offsets.pop()
        by_p: dict[int, list[int]] = {}
        for c in comp:
            if mc.exponents[c] >= 1:
                by_p.setdefault(mc.exponents[c], []).append(c)
        for p, cells in by_p.items():
            members = set(cells)
            sub = MorseComplex(
                d, mc.nbits, _group(cells), {c: p for c in cells},
                {e: v for e, v in mc.incidence.items() if e[0] in members and e[1] in members},
            )
            for m in sub.critical:
                h = len(sub.critical[m]) - sub.rank_delta(m) - sub.rank_delta(m + 1)
                if h and m != p - k_i:
                    return False
    return True


def matching_on_graph(graph: CoxeterGraph, fn: Callable[[int], int | None]) -> Matching:
    return Matching.from_partner_function(graph.n_vertices, spherical_cells(graph), fn)
