"""
Pure-Python bitmask kernels. ``_kernels.pyx`` mirrors these signatures.

Cells are bitmasks in ``range(1 << nbits)``. ``in_dom[x]`` is nonzero when
``x`` belongs to the poset; ``partner[x]`` is the matched cell or -1.
"""
from __future__ import annotations


class NonTerminating(RuntimeError):
    """An alternating-path recursion revisited a cell: the matching has a cycle."""


def _facets(x: int):
    rest = x
    while rest:
        bit = rest & -rest
        rest ^= bit
        yield x ^ bit, bit


def _sign(x: int, bit: int) -> int:
    # (-1)^(number of vertices of x below the removed one)
    return -1 if bin(x & (bit - 1)).count("1") & 1 else 1


def morse_boundary(nbits: int, in_dom, partner) -> list[tuple[int, int, int]]:
    """
    Nonzero Morse incidences ``(sigma, tau, coefficient)`` between critical
    cells of consecutive sizes.

    For a cell ``t`` the flow ``phi(t)`` is the signed count of alternating
    continuations from ``t`` down to each critical cell of the same size;
    ``phi`` is memoised so every cell is expanded once.
    """
    size = 1 << nbits
    phi: dict[int, dict[int, int]] = {}
    state: dict[int, int] = {}  # 1 = on the stack

    def flow(start: int) -> dict[int, int]:
        stack = [start]
        while stack:
            t = stack[-1]
            if t in phi:
                stack.pop()
                continue
            p = partner[t]
            if p < 0:
                phi[t] = {t: 1}
                stack.pop()
                continue
            if p < t or (p & t) != t:
                # matched with a face: alternating paths stop here
                phi[t] = {}
                stack.pop()
                continue
            pending = []
            for f, _ in _facets(p):
                if f != t and in_dom[f] and f not in phi:
                    pending.append(f)
            if pending:
                if state.get(t) == 1:
                    raise NonTerminating(f"cycle through cell {t}")
                state[t] = 1
                for f in pending:
                    if state.get(f) == 1:
                        raise NonTerminating(f"cycle through cell {f}")
                    stack.append(f)
                continue
            acc: dict[int, int] = {}
            outer = -_sign(p, p ^ t)
            for f, bit in _facets(p):
                if f == t or not in_dom[f]:
                    continue
                s = outer * _sign(p, bit)
                for c, v in phi[f].items():
                    acc[c] = acc.get(c, 0) + s * v
            phi[t] = {c: v for c, v in acc.items() if v}
            state[t] = 2
            stack.pop()
        return phi[start]

    out = []
    for sigma in range(size):
        if not in_dom[sigma] or partner[sigma] >= 0:
            continue
        acc: dict[int, int] = {}
        for f, bit in _facets(sigma):
            if not in_dom[f]:
                continue
            s = _sign(sigma, bit)
            for c, v in flow(f).items():
                acc[c] = acc.get(c, 0) + s * v
        for c in sorted(acc):
            if acc[c]:
                out.append((sigma, c, acc[c]))
    return out


def find_cycle(nbits: int, in_dom, partner) -> bool:
    """
    True if the Hasse diagram with matched edges reversed has a directed cycle.

    Out-neighbours of ``x``: its facets other than a matched facet, plus its
    partner when the partner is a coface.
    """
    size = 1 << nbits
    color = bytearray(size)  # 0 white, 1 grey, 2 black
    for root in range(size):
        if not in_dom[root] or color[root]:
            continue
        stack = [(root, _succ(root, in_dom, partner))]
        color[root] = 1
        while stack:
            x, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[x] = 2
                stack.pop()
                continue
            c = color[nxt]
            if c == 1:
                return True
            if c == 0:
                color[nxt] = 1
                stack.append((nxt, _succ(nxt, in_dom, partner)))
    return False


def _succ(x, in_dom, partner):
    p = partner[x]
    for f, _ in _facets(x):
        if in_dom[f] and f != p:
            yield f
    if p >= 0 and p > x and (p & x) == x:
        yield p
