"""
Explicit precise matchings for A_n, B_n, affine A_n and affine C_n, their
critical cells in closed form, and the closed-form Morse incidences.

Partner functions work on bitmasks in the graph's own bit order and return
the matched cell or ``None`` for a critical cell. Closed-form cells are
written as bitstrings with the lowest vertex leftmost.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Callable

from .coxeter import CoxeterGraph, family_graph, spherical_cells, type_A
from .morse import Matching


class BadParams(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    d: int
    f: int = 0

    def __post_init__(self):
        if self.family not in ("A", "B", "tA", "tC"):
            raise BadParams(f"unknown family {self.family!r}")
        if self.d < 2:
            raise BadParams("d must be >= 2")
        if self.n < (2 if self.family in ("tA", "tC") else 1):
            raise BadParams(f"n={self.n} too small for {self.family}")
        if self.f and self.family != "A":
            raise BadParams("f applies to type A only")


@dataclasses.dataclass(frozen=True)
class CriticalCell:
    name: str
    bits: str
    exponent: int

    @property
    def degree(self) -> int:
        return self.bits.count("1")

    def mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b == "1")


def _ones(k: int) -> int:
    return (1 << k) - 1 if k > 0 else 0


# type A on K_{n,f}: bit i is vertex i+1, vertices 1..f always present

def partner_A(sigma: int, n: int, f: int, d: int) -> int | None:
    if f >= d:
        shift = (f // d) * d
        sub = partner_A(sigma >> shift, n - shift, f - shift, d)
        return None if sub is None else (sub << shift) | _ones(shift)
    head = _ones(d - 1)
    if sigma & head == head and n >= d - 1:
        if n == d - 1:
            return None
        return sigma ^ (1 << (d - 1))
    if n == f:
        return None
    if sigma >> f & 1:
        return sigma ^ (1 << f)
    mid = _ones(d - 1) & ~_ones(f + 1)
    if sigma & mid != mid or n < d - 1:
        return sigma | (1 << f)
    sub = partner_A(sigma >> (f + 1), n - f - 1, d - 2 - f, d)
    return None if sub is None else (sub << (f + 1)) | (sigma & _ones(f + 1))


def _check_A(n: int, f: int, d: int):
    if d < 2 or f < 0 or n < f:
        raise BadParams(f"need d >= 2 and 0 <= f <= n (got n={n}, f={f}, d={d})")


def domain_A(n: int, f: int) -> list[int]:
    low = _ones(f)
    return [low | (x << f) for x in range(1 << (n - f))]


def matching_A(n: int, f: int, d: int) -> Matching:
    _check_A(n, f, d)
    return Matching.from_partner_function(n, domain_A(n, f), lambda s: partner_A(s, n, f, d))


def critical_A(n: int, f: int, d: int) -> list[CriticalCell]:
    """Closed-form critical cells of :func:`matching_A` with their A_n weights."""
    _check_A(n, f, d)
    if f >= d:
        shift = (f // d) * d
        prefix = "1" * shift
        out = []
        for c in critical_A(n - shift, f - shift, d):
            bits = prefix + c.bits
            out.append(CriticalCell(c.name, bits, _weight_A_bits(bits, d)))
        return out
    if n == f:
        bits = "1" * f
        return [CriticalCell("1^f", bits, _weight_A_bits(bits, d))]
    if f == d - 1:
        return []
    block = "1" * f + "0" + "1" * (d - 2 - f) + "0"
    if (n - f) % d == 0:
        k = (n - f) // d
        return [
            CriticalCell("upper", block * (k - 1) + "1" * f + "0" + "1" * (d - 1), 1),
            CriticalCell("lower", block * k + "1" * f, 0),
        ]
    if (n + 1) % d == 0:
        k = (n + 1) // d
        return [
            CriticalCell("upper", block * (k - 1) + "1" * (d - 1), 1),
            CriticalCell("lower", block * (k - 1) + "1" * f + "0" + "1" * (d - 2 - f), 0),
        ]
    return []


def _weight_A_bits(bits: str, d: int) -> int:
    return sum((len(run) + 1) // d for run in bits.split("0") if run)


# type B: bit i is vertex i+1, the 4-label sits on {1, 2}

def partner_B(sigma: int, n: int, d: int) -> int | None:
    if d % 2:
        return sigma ^ 1
    h = d // 2
    run = 0
    while run < n and sigma >> run & 1:
        run += 1
    q = run // h
    c = q * h
    if run > c:
        return sigma ^ (1 << c)
    if n == c:
        return None
    mid = _ones((q + 1) * h) & ~_ones(c + 1)
    if sigma & mid != mid or (q + 1) * h > n:
        return sigma | (1 << c)
    sub = partner_A(sigma >> (c + 1), n - c - 1, h - 1, d)
    return None if sub is None else (sub << (c + 1)) | (sigma & _ones(c + 1))


def matching_B(n: int, d: int) -> Matching:
    FamilySpec("B", n, d)
    return Matching.from_partner_function(n, range(1 << n), lambda s: partner_B(s, n, d))


def critical_B(n: int, d: int) -> dict[str, CriticalCell]:
    """``sigma_q`` for 0 <= q <= k-2 and ``sigma'_q`` for 0 <= q <= k when d is even and n = k d/2."""
    FamilySpec("B", n, d)
    if d % 2 or n % (d // 2):
        return {}
    h = d // 2
    k = n // h
    out = {}
    for q in range(k - 1):
        bits = "1" * (q * h) + ("0" + "1" * (h - 1)) * (k - q - 2) + "0" + "1" * (d - 1)
        out[f"s{q}"] = CriticalCell(f"sigma_{q}", bits, q + 1)
    for q in range(k + 1):
        bits = "1" * (q * h) + ("0" + "1" * (h - 1)) * (k - q)
        out[f"p{q}"] = CriticalCell(f"sigma'_{q}", bits, q)
    return out


def incidence_B(n: int, d: int) -> dict[tuple[str, str], int]:
    """Nonzero closed-form Morse incidences between the cells of :func:`critical_B`."""
    cells = critical_B(n, d)
    if not cells:
        return {}
    h = d // 2
    k = n // h
    out = {}
    for q in range(k - 1):
        if q >= 1:
            out[f"s{q}", f"s{q - 1}"] = (-1) ** ((q - 1) * h)
        out[f"s{q}", f"p{q}"] = (-1) ** ((k - 1) * (h - 1) + q)
    for q in range(k + 1):
        if q >= 2:
            out[f"p{q}", f"s{q - 2}"] = (-1) ** (k * (h - 1) + q)
        if q >= 1:
            out[f"p{q}", f"p{q - 1}"] = (-1) ** ((q - 1) * h)
    return out


# affine A: bit i is vertex i, vertices 0..n on a cycle

def relabel_tA(n: int, d: int, h: int) -> tuple[int, int, list[int]]:
    """
    For the block K_h (h missing, 0..h-1 present) return ``(m, r, old)``
    where ``old[j-1]`` is the original vertex carrying new label ``j``.
    """
    q, r = divmod(h, d)
    m = n - q * d
    old = [r - j if j <= r else n - (j - r - 1) for j in range(1, m + 1)]
    return m, r, old


def _first_missing(sigma: int) -> int:
    h = 0
    while sigma >> h & 1:
        h += 1
    return h


@functools.lru_cache(maxsize=None)
def _tA_maps(n: int, d: int, h: int):
    m, r, old = relabel_tA(n, d, h)
    return m, r, old, _ones(h)


def partner_tA(sigma: int, n: int, d: int) -> int | None:
    h = _first_missing(sigma)
    m, r, old, fixed = _tA_maps(n, d, h)
    hat = 0
    for j, v in enumerate(old):
        if sigma >> v & 1:
            hat |= 1 << j
    sub = partner_A(hat, m, r, d)
    if sub is None:
        return None
    out = fixed
    for j, v in enumerate(old):
        if sub >> j & 1:
            out |= 1 << v
    return out


def matching_tA(n: int, d: int) -> Matching:
    FamilySpec("tA", n, d)
    g = family_graph("tA", n)
    return Matching.from_partner_function(n + 1, spherical_cells(g), lambda s: partner_tA(s, n, d))


def critical_tA(n: int, d: int) -> dict[str, CriticalCell]:
    FamilySpec("tA", n, d)
    out = {}
    if (n + 1) % d == 0:
        k = (n + 1) // d
        for r in range(d - 1):
            tail = "1" * (d - 2 - r) + "0" + "1" * r + "0"
            last = "1" * (d - 2 - r) + "0"
            for q in range(k - 1):
                bits = "1" * (q * d + r) + "0" + "1" * (d - 1) + "0" + tail * (k - q - 2) + last
                out[f"s{q},{r}"] = CriticalCell(f"sigma_{q},{r}", bits, q + 1)
            # q = k-1: every vertex but (k-1)d + r, the upper cell of K_h with m = d-1
            h = (k - 1) * d + r
            out[f"s{k - 1},{r}"] = CriticalCell(f"sigma_{k - 1},{r}", "1" * h + "0" + "1" * (n - h), k)
            for q in range(k):
                bits = "1" * (q * d + r) + "0" + tail * (k - q - 1) + last
                out[f"p{q},{r}"] = CriticalCell(f"sigma'_{q},{r}", bits, q)
        out["bar"] = CriticalCell("sigma_bar", "1" * n + "0", k)
        return out
    k, r = divmod(n, d)
    block = "1" * r + "0" + "1" * (d - 2 - r) + "0"
    for q in range(k):
        bits = "1" * (q * d + r) + "0" + "1" * (d - 1) + "0" + block * (k - q - 1)
        out[f"t{q}"] = CriticalCell(f"tau_{q}", bits, q + 1)
    for q in range(k + 1):
        bits = "1" * (q * d + r) + "0" + block * (k - q)
        out[f"u{q}"] = CriticalCell(f"tau'_{q}", bits, q)
    return out


def incidence_tA(n: int, d: int) -> dict[tuple[str, str], int]:
    """Closed-form nonzero incidences; the sign is not fixed, so values are magnitudes."""
    cells = critical_tA(n, d)
    out = {}
    if "bar" in cells:
        k = (n + 1) // d
        for r in range(d - 1):
            for q in range(k):
                out[f"s{q},{r}", f"p{q},{r}"] = 1
            out["bar", f"p{k - 1},{r}"] = 1
    else:
        k = n // d
        for q in range(k):
            out[f"t{q}", f"u{q}"] = 1
    return out


# affine C: bit i is vertex i, 4-labels on {0, 1} and {n-1, n}

def partner_tC(sigma: int, n: int, d: int) -> int | None:
    h = _first_missing(sigma)
    m = n - h
    hat = 0
    for j in range(m):
        if sigma >> (n - j) & 1:
            hat |= 1 << j
    if m == 0:
        return None
    sub = partner_B(hat, m, d)
    if sub is None:
        return None
    out = _ones(h)
    for j in range(m):
        if sub >> j & 1:
            out |= 1 << (n - j)
    return out


def matching_tC(n: int, d: int) -> Matching:
    FamilySpec("tC", n, d)
    g = family_graph("tC", n)
    return Matching.from_partner_function(n + 1, spherical_cells(g), lambda s: partner_tC(s, n, d))


def critical_tC(n: int, d: int) -> dict[str, CriticalCell]:
    FamilySpec("tC", n, d)
    if d % 2:
        # weight of 1^n: B_n on 0..n-1 contributes floor(n/d)
        return {"bar": CriticalCell("sigma_bar", "1" * n + "0", n // d)}
    h = d // 2
    k, r = divmod(n, h)
    out = {}
    for q1 in range(k - 1):
        for q2 in range(k - 1 - q1):
            bits = ("1" * (q1 * h + r) + "0" + "1" * (d - 1) + "0"
                    + ("1" * (h - 1) + "0") * (k - q1 - q2 - 2) + "1" * (q2 * h))
            out[f"s{q1},{q2}"] = CriticalCell(f"sigma_{q1},{q2}", bits, q1 + q2 + 1)
    for q1 in range(k + 1):
        for q2 in range(k + 1 - q1):
            bits = "1" * (q1 * h + r) + "0" + ("1" * (h - 1) + "0") * (k - q1 - q2) + "1" * (q2 * h)
            out[f"p{q1},{q2}"] = CriticalCell(f"sigma'_{q1},{q2}", bits, q1 + q2)
    return out


def incidence_tC(n: int, d: int) -> dict[tuple[str, str], int]:
    cells = critical_tC(n, d)
    if d % 2:
        return {}
    h = d // 2
    k, r = divmod(n, h)
    out = {}

    def put(src, dst, e):
        if src in cells and dst in cells:
            out[src, dst] = (-1) ** e

    for q1 in range(k + 1):
        for q2 in range(k + 1 - q1):
            alpha = (k - q2) * (h - 1) + q1 + r + h
            beta = q1 * h + r
            s, p = f"s{q1},{q2}", f"p{q1},{q2}"
            if s in cells:
                put(s, f"s{q1},{q2 - 1}", alpha)
                put(s, f"s{q1 - 1},{q2}", beta + 1)
                put(s, p, beta + h + 1)
            put(p, f"s{q1},{q2 - 2}", beta + 1)
            put(p, f"s{q1 - 2},{q2}", beta)
            put(p, f"p{q1},{q2 - 1}", alpha + 1)
            put(p, f"p{q1 - 1},{q2}", beta + h)
    return out


# the matching on K minus Ind_{d-2}(A_n) used for independence complexes

def partner_A_independence(sigma: int, n: int, d: int) -> int | None:
    """
    Find the first component with at least d-1 vertices, starting at vertex
    ``a``; toggle vertex ``a + d - 1``. Critical when that vertex exceeds n.
    """
    i = 0
    while i < n:
        if not sigma >> i & 1:
            i += 1
            continue
        j = i
        while j < n and sigma >> j & 1:
            j += 1
        if j - i >= d - 1:
            t = i + d - 1
            if t >= n:
                return None
            return sigma ^ (1 << t)
        i = j
    raise BadParams("simplex lies in Ind_{d-2}(A_n)")


def independence_domain(n: int, d: int) -> list[int]:
    """Simplices of A_n with a component of at least d-1 vertices."""
    run = _ones(d - 1)
    out = []
    for s in range(1 << n):
        for i in range(n - d + 2):
            if s >> i & run == run:
                out.append(s)
                break
    return out


def matching_A_independence(n: int, d: int) -> Matching:
    FamilySpec("A", n, d)
    return Matching.from_partner_function(n, independence_domain(n, d), lambda s: partner_A_independence(s, n, d))


def critical_A_independence(n: int, d: int) -> list[int]:
    """``tau`` plus the last d-1 vertices, for ``tau`` in Ind_{d-2}(A_{n-d}) including the empty set."""
    if n < d - 1:
        return []
    tail = _ones(d - 1) << (n - d + 1)
    if n == d - 1:
        return [tail]
    out = []
    for tau in range(1 << max(n - d, 0)):
        if all(len(run) <= d - 2 for run in format(tau, "b").split("0")) or tau == 0:
            out.append(tau | tail)
    return sorted(out)


# providers

def matching_for(family: str, n: int, d: int) -> Matching:
    if family == "A":
        return matching_A(n, 0, d)
    if family == "B":
        return matching_B(n, d)
    if family == "tA":
        return matching_tA(n, d)
    if family == "tC":
        return matching_tC(n, d)
    raise BadParams(f"no cataloged matching for {family!r}")


def provider(family: str, n: int) -> Callable[[int], Matching]:
    """``d -> Matching`` for a cataloged family, cached per d."""
    return functools.lru_cache(maxsize=None)(lambda d: matching_for(family, n, d))


def critical_table(family: str, n: int, d: int) -> dict[str, CriticalCell]:
    if family == "A":
        return {c.name: c for c in critical_A(n, 0, d)}
    if family == "B":
        return critical_B(n, d)
    if family == "tA":
        return critical_tA(n, d)
    if family == "tC":
        return critical_tC(n, d)
    raise BadParams(f"no cataloged matching for {family!r}")


def incidence_table(family: str, n: int, d: int) -> dict[tuple[str, str], int]:
    if family == "A":
        cells = critical_A(n, 0, d)
        if len(cells) == 2:
            return {("upper", "lower"): 1}
        return {}
    if family == "B":
        return incidence_B(n, d)
    if family == "tA":
        return incidence_tA(n, d)
    if family == "tC":
        return incidence_tC(n, d)
    raise BadParams(f"no cataloged matching for {family!r}")


def exact_signs(family: str) -> bool:
    """Whether :func:`incidence_table` fixes signs (affine A only gives magnitudes)."""
    return family in ("B", "tC")


def graph_for(family: str, n: int) -> CoxeterGraph:
    return type_A(n) if family == "A" else family_graph(family, n)
