"""
Smith normal form over Z and Q[q], and homology of the polynomial chain
complex computed directly from it. Used as ground truth for the Morse route.
"""
from __future__ import annotations

import dataclasses
import math
from typing import Generic, TypeVar

from .complexes import ChainComplex
from .morse import HomologyTable
from .polyring import ZERO, LaurentPoly, factor_cyclotomic

T = TypeVar("T")


@dataclasses.dataclass(frozen=True)
class SnfResult(Generic[T]):
    diagonal: tuple
    rank: int


class _IntOps:
    zero = 0

    @staticmethod
    def norm(a):
        return abs(a)

    @staticmethod
    def divmod(a, b):
        return divmod(a, b)

    @staticmethod
    def gcd(a, b):
        return math.gcd(a, b)

    @staticmethod
    def normalize(a):
        return abs(a)

    @staticmethod
    def divides(a, b):
        return b % a == 0


class _PolyOps:
    zero = ZERO

    @staticmethod
    def norm(a: LaurentPoly):
        return a.span()

    @staticmethod
    def divmod(a: LaurentPoly, b: LaurentPoly):
        # Euclidean in R with the span as norm
        return a.divmod(b)

    @staticmethod
    def gcd(a: LaurentPoly, b: LaurentPoly):
        a, b = a.monic(), b.monic()
        while b:
            a, b = b, a.divmod(b)[1].monic()
        return a

    @staticmethod
    def normalize(a: LaurentPoly):
        return a.monic()

    @staticmethod
    def divides(a, b):
        return a.divides(b)


def _shift(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def _snf(matrix: list[list], ops) -> list:
    A = [list(row) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (best is None or ops.norm(A[i][j]) < best[0]):
                    best = (ops.norm(A[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            moved = False
            p = A[t][t]
            for i in range(t + 1, rows):
                if A[i][t]:
                    f, r = ops.divmod(A[i][t], p)
                    A[i] = [a - f * b for a, b in zip(A[i], A[t])]
                    if r:
                        A[t], A[i] = A[i], A[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, cols):
                if A[t][j]:
                    f, r = ops.divmod(A[t][j], p)
                    for row in A:
                        row[j] = row[j] - f * row[t]
                    if r:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if not moved:
                break
        diag.append(ops.normalize(A[t][t]))
        t += 1
    # force the divisibility chain: (a, b) -> (gcd, lcm)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            if not ops.divides(a, b):
                g = ops.gcd(a, b)
                diag[i] = ops.normalize(g)
                diag[j] = ops.normalize(_exact(a * b, g, ops))
    return diag


def _exact(a, b, ops):
    q, r = ops.divmod(a, b)
    assert not r
    return q


def snf_int(matrix: list[list[int]]) -> SnfResult:
    """
    >>> snf_int([[2, 0], [0, 3]]).diagonal
    (1, 6)
    """
    diag = _snf(matrix, _IntOps)
    return SnfResult(tuple(diag), len(diag))


def snf_poly(matrix: list[list[LaurentPoly]]) -> SnfResult:
    """
    SNF over Q[q]. Rows are first multiplied by powers of q (units of R)
    so that every entry is a polynomial; the diagonal is made monic with
    nonzero constant term.
    """
    cleared = []
    for row in matrix:
        low = min((e.low for e in row if e), default=0)
        shift = _shift(-min(low, 0))
        cleared.append([e * shift if e else ZERO for e in row])
    diag = [_strip_q(p) for p in _snf(cleared, _PolyOps)]
    return SnfResult(tuple(diag), len(diag))


def _strip_q(p: LaurentPoly) -> LaurentPoly:
    # q is a unit in R
    return LaurentPoly.from_dense(0, p.dense).monic()


def homology_direct(C: ChainComplex) -> HomologyTable:
    """
    Decompose ``H_k(C)`` over R. Torsion of ``H_k`` is the non-unit part of
    the invariant factors of ``d_{k+1}`` (the cycles are a direct summand,
    since the boundaries land in a free module); the free rank is
    ``dim C_k - rank d_k - rank d_{k+1}``.
    """
    snfs = {}
    for k in range(C.nbits + 2):
        if C.basis(k) and C.basis(k - 1):
            snfs[k] = snf_poly(C.matrix(k, zero=ZERO))
    free = {}
    torsion: dict[int, dict[tuple[int, int], int]] = {}
    for k in range(C.nbits + 1):
        rk = snfs[k].rank if k in snfs else 0
        rk1 = snfs[k + 1].rank if k + 1 in snfs else 0
        b = len(C.basis(k)) - rk - rk1
        if b:
            free[k] = b
        if k + 1 in snfs:
            for p in snfs[k + 1].diagonal:
                if p.is_unit():
                    continue
                prof = factor_cyclotomic(p)
                row = torsion.setdefault(k, {})
                for d, e in prof.exponents.items():
                    row[d, e] = row.get((d, e), 0) + 1
    return HomologyTable(C.nbits + 1, free, torsion)


def divisibility_chain(result: SnfResult) -> bool:
    diag = result.diagonal
    if not diag:
        return True
    ops = _PolyOps if isinstance(diag[0], LaurentPoly) else _IntOps
    return all(ops.divides(a, b) for a, b in zip(diag, diag[1:]))

