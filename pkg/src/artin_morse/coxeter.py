"""
Coxeter graphs, the complex of spherical subsets and cyclotomic weights.

Simplices are plain ``int`` bitmasks: bit ``i`` stands for the ``i``-th vertex
of the graph in label order. For the named families the labels follow the
usual numbering (``1..n`` for A_n and B_n, ``0..n`` for the affine types), so
bit 0 is vertex 1 in A_n but vertex 0 in affine A_n.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import json
import math
from typing import Iterator

from .polyring import ONE, LaurentPoly, q_integer

INF = math.inf


class NotSpherical(ValueError):
    """The parabolic subgroup generated by the simplex is infinite."""


class TooLarge(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class CoxeterGraph:
    """
    A Coxeter graph. ``edges`` maps position pairs ``(i, j)``, ``i < j``, to
    labels ``m >= 3`` (or ``INF``); absent pairs commute (``m = 2``).
    """
    labels: tuple[int, ...]
    edges: tuple[tuple[int, int, float], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise ValueError("a Coxeter graph needs at least one vertex")
        seen = set()
        for i, j, m in self.edges:
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if not (m == INF or (int(m) == m and m >= 2)):
                raise ValueError(f"bad label {m}")
            seen.add((i, j))

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @functools.cached_property
    def _m(self) -> dict[tuple[int, int], float]:
        out = {}
        for i, j, m in self.edges:
            if m != 2:
                out[i, j] = out[j, i] = m
        return out

    def m(self, i: int, j: int) -> float:
        """Coxeter matrix entry between positions ``i`` and ``j``."""
        if i == j:
            return 1
        return self._m.get((i, j), 2)

    @functools.cached_property
    def neighbours(self) -> tuple[int, ...]:
        """Bitmask of adjacent positions, per position."""
        nb = [0] * self.n_vertices
        for (i, j), m in self._m.items():
            nb[i] |= 1 << j
        return tuple(nb)

    @property
    def full(self) -> int:
        return (1 << self.n_vertices) - 1

    def vertices(self, sigma: int) -> list[int]:
        """Labels of the vertices in ``sigma``."""
        return [self.labels[i] for i in range(self.n_vertices) if sigma >> i & 1]

    def simplex(self, vertices) -> int:
        """Bitmask from a collection of vertex labels."""
        pos = {v: i for i, v in enumerate(self.labels)}
        out = 0
        for v in vertices:
            out |= 1 << pos[v]
        return out

    def bitstring(self, sigma: int) -> str:
        """Lowest vertex leftmost, as in the usual tables."""
        return "".join("1" if sigma >> i & 1 else "0" for i in range(self.n_vertices))

    def from_bitstring(self, bits: str) -> int:
        if len(bits) != self.n_vertices:
            raise ValueError(f"expected {self.n_vertices} bits, got {len(bits)}")
        return sum(1 << i for i, b in enumerate(bits) if b == "1")

    def components(self, sigma: int) -> list[int]:
        """Connected components of the induced subgraph, as bitmasks, by lowest position."""
        out = []
        rest = sigma
        nb = self.neighbours
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = nb[bit.bit_length() - 1] & sigma & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            rest &= ~comp
        return out

    def to_json(self) -> dict:
        pos_edges = []
        for i, j, m in self.edges:
            if m == 2:
                continue
            pos_edges.append([i, j, "inf" if m == INF else int(m)])
        return {"vertices": self.n_vertices, "edges": pos_edges}


def graph_from_json(data: dict | str, name: str = "") -> CoxeterGraph:
    """
    Parse ``{"vertices": n, "edges": [[i, j, m], ...]}`` with positions
    ``0..n-1`` and ``m`` an integer >= 3 or ``"inf"``.
    """
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["vertices"])
    edges = []
    for i, j, m in data.get("edges", []):
        i, j = int(i), int(j)
        if i == j:
            raise ValueError("loops are not allowed")
        if i > j:
            i, j = j, i
        if isinstance(m, str):
            if m.lower() not in ("inf", "infinity", "∞"):
                raise ValueError(f"bad label {m!r}")
            m = INF
        elif int(m) < 3:
            raise ValueError(f"edge labels must be >= 3, got {m}")
        edges.append((i, j, m if m == INF else int(m)))
    return CoxeterGraph(tuple(range(n)), tuple(edges), name)


def type_A(n: int) -> CoxeterGraph:
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    return CoxeterGraph(tuple(range(1, n + 1)), tuple((i, i + 1, 3) for i in range(n - 1)), f"A{n}")


def type_B(n: int) -> CoxeterGraph:
    """B_n with the 4-label on the edge {1, 2}."""
    if n < 1:
        raise ValueError("B_n needs n >= 1")
    edges = tuple((i, i + 1, 4 if i == 0 else 3) for i in range(n - 1))
    return CoxeterGraph(tuple(range(1, n + 1)), edges, f"B{n}")


def type_tA(n: int) -> CoxeterGraph:
    """Affine A_n: a cycle on the vertices 0..n."""
    if n < 2:
        raise ValueError("affine A_n needs n >= 2")
    edges = tuple((i, i + 1, 3) for i in range(n)) + ((0, n, 3),)
    return CoxeterGraph(tuple(range(n + 1)), edges, f"tA{n}")


def type_tC(n: int) -> CoxeterGraph:
    """Affine C_n: a path on 0..n with 4-labels on {0, 1} and {n-1, n}."""
    if n < 2:
        raise ValueError("affine C_n needs n >= 2")
    edges = tuple((i, i + 1, 4 if i in (0, n - 1) else 3) for i in range(n))
    return CoxeterGraph(tuple(range(n + 1)), edges, f"tC{n}")


FAMILIES = {"A": type_A, "B": type_B, "tA": type_tA, "tC": type_tC}


def family_graph(family: str, n: int) -> CoxeterGraph:
    try:
        return FAMILIES[family](n)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}") from None


def parse_family(spec: str) -> tuple[str, int]:
    """``"tC:4"`` -> ``("tC", 4)``."""
    fam, _, n = spec.partition(":")
    if fam not in FAMILIES or not n:
        raise ValueError(f"bad family shorthand {spec!r}")
    return fam, int(n)


# finite-type recognition

DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


def degrees(tag: str) -> tuple[int, ...]:
    """Degrees of the basic invariants of a finite irreducible type."""
    if tag in DEGREES:
        return DEGREES[tag]
    if tag.startswith("I2("):
        return (2, int(tag[3:-1]))
    kind, k = tag[0], int(tag[1:])
    if kind == "A":
        return tuple(range(2, k + 2))
    if kind == "B":
        return tuple(range(2, 2 * k + 1, 2))
    if kind == "D":
        return tuple(range(2, 2 * k - 1, 2)) + (k,)
    raise ValueError(f"unknown type {tag!r}")


@dataclasses.dataclass(frozen=True)
class FiniteTypeLabel:
    components: tuple[tuple[str, tuple[int, ...]], ...]

    def tags(self) -> list[str]:
        return [t for t, _ in self.components]

    def __str__(self):
        return " + ".join(f"{t}{{{','.join(map(str, vs))}}}" for t, vs in self.components) or "empty"


def _path_order(graph: CoxeterGraph, comp: int) -> list[int] | None:
    """Positions of a path-shaped component in walking order, or None."""
    pos = [i for i in range(graph.n_vertices) if comp >> i & 1]
    nb = {i: [j for j in pos if j != i and graph.m(i, j) != 2] for i in pos}
    if any(len(v) > 2 for v in nb.values()):
        return None
    ends = [i for i in pos if len(nb[i]) <= 1]
    if not ends:
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(pos):
        nxt = [j for j in nb[order[-1]] if j != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _classify_component(graph: CoxeterGraph, comp: int) -> str | None:
    pos = [i for i in range(graph.n_vertices) if comp >> i & 1]
    k = len(pos)
    labels = [graph.m(i, j) for i, j in itertools.combinations(pos, 2) if graph.m(i, j) != 2]
    if any(m == INF for m in labels):
        return None
    if len(labels) != k - 1:
        return None  # connected with a cycle
    if k == 1:
        return "A1"
    if k == 2:
        m = int(labels[0])
        return {3: "A2", 4: "B2"}.get(m, f"I2({m})")
    order = _path_order(graph, comp)
    if order is not None:
        seq = [int(graph.m(a, b)) for a, b in zip(order, order[1:])]
        if seq[-1] != 3:
            seq.reverse()
        if all(m == 3 for m in seq):
            return f"A{k}"
        if seq[0] == 4 and all(m == 3 for m in seq[1:]):
            return f"B{k}"
        if seq[0] == 5 and all(m == 3 for m in seq[1:]) and k in (3, 4):
            return f"H{k}"
        if k == 4 and seq == [3, 4, 3]:
            return "F4"
        return None
    # a tree with one branch vertex of valence 3 and simple labels
    if any(m != 3 for m in labels):
        return None
    valence = {i: sum(1 for j in pos if j != i and graph.m(i, j) != 2) for i in pos}
    centres = [i for i in pos if valence[i] >= 3]
    if len(centres) != 1 or valence[centres[0]] != 3:
        return None
    c = centres[0]
    arms = []
    for start in (j for j in pos if j != c and graph.m(c, j) != 2):
        length, prev, cur = 1, c, start
        while True:
            nxt = [j for j in pos if j not in (cur, prev) and graph.m(cur, j) != 2]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{k}"
    return None


@functools.lru_cache(maxsize=1 << 16)
def classify(graph: CoxeterGraph, sigma: int) -> FiniteTypeLabel | None:
    """Finite-type decomposition of the induced subgraph, or None if infinite."""
    comps = []
    for comp in graph.components(sigma):
        tag = _classify_component(graph, comp)
        if tag is None:
            return None
        comps.append((tag, tuple(graph.vertices(comp))))
    return FiniteTypeLabel(tuple(comps))


def spherical_complex(graph: CoxeterGraph) -> Iterator[int]:
    """Every spherical simplex (including the empty one), in increasing bitmask order."""
    for sigma in range(graph.full + 1):
        if classify(graph, sigma) is not None:
            yield sigma


@functools.lru_cache(maxsize=64)
def spherical_cells(graph: CoxeterGraph) -> tuple[int, ...]:
    return tuple(spherical_complex(graph))


def _label(graph, sigma):
    label = classify(graph, sigma)
    if label is None:
        raise NotSpherical(f"{graph.bitstring(sigma)} is not spherical in {graph.name or 'graph'}")
    return label


@functools.lru_cache(maxsize=1 << 14)
def poincare_polynomial(graph: CoxeterGraph, sigma: int) -> LaurentPoly:
    """W_sigma(q) as the product of [d_i]_q over the degrees of every component."""
    out = ONE
    for tag, _ in _label(graph, sigma).components:
        for d in degrees(tag):
            out = out * q_integer(d)
    return out


def component_exponent(tag: str, d: int) -> int:
    """Exponent of phi_d in the Poincare polynomial of one irreducible component."""
    kind = tag[0]
    if kind == "A":
        return (int(tag[1:]) + 1) // d
    if kind == "B":
        k = int(tag[1:])
        return k // d if d % 2 else k // (d // 2)
    return sum(1 for e in degrees(tag) if e % d == 0)


def weight_exponent(graph: CoxeterGraph, sigma: int, d: int) -> int:
    """v_phi(sigma) for phi = phi_d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return sum(component_exponent(tag, d) for tag, _ in _label(graph, sigma).components)


@functools.lru_cache(maxsize=256)
def weight_table(graph: CoxeterGraph, d: int) -> dict[int, int]:
    """v_phi_d for every spherical simplex."""
    return {s: weight_exponent(graph, s, d) for s in spherical_cells(graph)}


def max_weight_d(graph: CoxeterGraph) -> int:
    """Largest d with some positive weight exponent (1 if none)."""
    best = 1
    for s in spherical_cells(graph):
        for tag, _ in classify(graph, s).components:
            best = max(best, max(degrees(tag)))
    return best


# independent oracle: enumerate the group

MAX_GROUP_ORDER = 10 ** 6


def _inversions(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def brute_force_poincare(kind: str, k: int, max_order: int = MAX_GROUP_ORDER) -> LaurentPoly:
    """
    Sum of q^length over the whole group, by enumeration.

    A_k: permutations of k+1 letters, length = inversions.
    B_k: signed permutations, length = inv(w) + sum of |w(i)| over negative entries.
    """
    if kind == "A":
        order = math.factorial(k + 1)
    elif kind == "B":
        order = 2 ** k * math.factorial(k)
    else:
        raise ValueError(f"unsupported type {kind!r}")
    if order > max_order:
        raise TooLarge(f"group of order {order} exceeds bound {max_order}")
    counts: dict[int, int] = {}
    if kind == "A":
        for w in itertools.permutations(range(1, k + 2)):
            ell = _inversions(w)
            counts[ell] = counts.get(ell, 0) + 1
    else:
        for perm in itertools.permutations(range(1, k + 1)):
            for signs in itertools.product((1, -1), repeat=k):
                w = [s * p for s, p in zip(signs, perm)]
                ell = _inversions(w) + sum(-x for x in w if x < 0)
                counts[ell] = counts.get(ell, 0) + 1
    return LaurentPoly(counts)
