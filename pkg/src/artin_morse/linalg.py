"""Exact rank over Q for sparse integer or rational matrices."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping


def rank_q(rows: Iterable[Mapping[int, object]]) -> int:
    """
    Rank over Q of a matrix given as sparse rows ``{column: value}``.

    Incremental echelon form keyed on each row's smallest column. Integer
    rows are reduced fraction-free and divided by their content, which keeps
    entries small for the +-1 boundary matrices; rational rows are scaled to
    integers first.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        cur = _integral({c: v for c, v in row.items() if v != 0})
        while cur:
            c = min(cur)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = cur
                break
            a, b = piv[c], cur[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            out = {}
            for k in cur.keys() | piv.keys():
                nv = a * cur.get(k, 0) - b * piv.get(k, 0)
                if nv:
                    out[k] = nv
            cur = _primitive(out)
    return len(pivots)


def _integral(row: dict) -> dict[int, int]:
    if all(isinstance(v, int) for v in row.values()):
        return _primitive(row)
    fr = {k: Fraction(v) for k, v in row.items()}
    den = 1
    for v in fr.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    return _primitive({k: int(v * den) for k, v in fr.items()})


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def dense_rank_q(matrix: list[list]) -> int:
    return rank_q({j: v for j, v in enumerate(row) if v} for row in matrix)


def transpose_sparse(cols: Mapping[int, Mapping[int, object]]) -> dict[int, dict[int, object]]:
    out: dict[int, dict[int, object]] = {}
    for j, col in cols.items():
        for i, v in col.items():
            out.setdefault(i, {})[j] = v
    return out
