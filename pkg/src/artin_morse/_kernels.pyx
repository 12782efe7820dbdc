# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contract as ``artin_morse._pure``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t


class NonTerminating(RuntimeError):
    pass


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


cdef inline int sign_of(long long x, long long bit) nogil:
    return -1 if (popcount(<unsigned long long>(x & (bit - 1))) & 1) else 1


cdef long long LIMIT = 1LL << 60


def morse_boundary(int nbits, in_dom, partner):
    cdef const unsigned char[:] dom = in_dom
    cdef const long long[:] par = partner
    cdef Py_ssize_t size = (<Py_ssize_t>1) << nbits
    cdef Py_ssize_t x, t, f, p, g, c, k, total, top, cap
    cdef long long bit, rest, rest2, b2, s, outer, v
    cdef int pending

    cdef int* deg = <int*>malloc(size * sizeof(int))
    cdef int* cid = <int*>malloc(size * sizeof(int))
    cdef int* ncrit = <int*>calloc(nbits + 2, sizeof(int))
    cdef Py_ssize_t* offset = <Py_ssize_t*>malloc(size * sizeof(Py_ssize_t))
    cdef unsigned char* state = <unsigned char*>calloc(size, 1)
    cdef Py_ssize_t* stack = NULL
    cdef int64_t* phi = NULL
    cdef int64_t* acc = NULL
    if deg == NULL or cid == NULL or ncrit == NULL or offset == NULL or state == NULL:
        raise MemoryError()
    out = []
    try:
        for x in range(size):
            deg[x] = popcount(<unsigned long long>x)
            cid[x] = -1
            if dom[x] and par[x] < 0:
                cid[x] = ncrit[deg[x]]
                ncrit[deg[x]] += 1
        total = 0
        for x in range(size):
            offset[x] = total
            if dom[x]:
                total += ncrit[deg[x]]
        phi = <int64_t*>calloc(total + 1, sizeof(int64_t))
        acc = <int64_t*>calloc(size + 1, sizeof(int64_t))
        cap = size * (nbits + 1) + 1
        stack = <Py_ssize_t*>malloc(cap * sizeof(Py_ssize_t))
        if phi == NULL or acc == NULL or stack == NULL:
            raise MemoryError()

        crit_by_deg = [[] for _ in range(nbits + 1)]
        for x in range(size):
            if cid[x] >= 0:
                crit_by_deg[deg[x]].append(x)

        for x in range(size):
            if cid[x] < 0 or deg[x] == 0 or ncrit[deg[x] - 1] == 0:
                continue
            # make sure the flow of every facet is known
            rest = x
            while rest:
                bit = rest & -rest
                rest ^= bit
                f = x ^ bit
                if not dom[f] or state[f] == 2:
                    continue
                top = 0
                stack[top] = f
                top += 1
                while top > 0:
                    t = stack[top - 1]
                    if state[t] == 2:
                        top -= 1
                        continue
                    p = par[t]
                    if p < 0:
                        phi[offset[t] + cid[t]] = 1
                        state[t] = 2
                        top -= 1
                        continue
                    if p < t or (p & t) != t:
                        state[t] = 2
                        top -= 1
                        continue
                    pending = 0
                    rest2 = p
                    while rest2:
                        b2 = rest2 & -rest2
                        rest2 ^= b2
                        g = p ^ b2
                        if g != t and dom[g] and state[g] != 2:
                            if state[g] == 1:
                                raise NonTerminating(f"cycle through cell {g}")
                            if top >= cap:
                                raise MemoryError("flow stack exhausted")
                            stack[top] = g
                            top += 1
                            pending = 1
                    if pending:
                        if state[t] == 1:
                            raise NonTerminating(f"cycle through cell {t}")
                        state[t] = 1
                        continue
                    k = ncrit[deg[t]]
                    outer = -sign_of(p, p ^ t)
                    rest2 = p
                    while rest2:
                        b2 = rest2 & -rest2
                        rest2 ^= b2
                        g = p ^ b2
                        if g == t or not dom[g]:
                            continue
                        s = outer * sign_of(p, b2)
                        for c in range(k):
                            v = phi[offset[g] + c]
                            if v:
                                phi[offset[t] + c] += s * v
                                if phi[offset[t] + c] > LIMIT or phi[offset[t] + c] < -LIMIT:
                                    raise OverflowError("flow coefficient exceeds int64 guard")
                    state[t] = 2
                    top -= 1
            k = ncrit[deg[x] - 1]
            for c in range(k):
                acc[c] = 0
            rest = x
            while rest:
                bit = rest & -rest
                rest ^= bit
                f = x ^ bit
                if not dom[f]:
                    continue
                s = sign_of(x, bit)
                for c in range(k):
                    v = phi[offset[f] + c]
                    if v:
                        acc[c] += s * v
                        if acc[c] > LIMIT or acc[c] < -LIMIT:
                            raise OverflowError("flow coefficient exceeds int64 guard")
            targets = crit_by_deg[deg[x] - 1]
            for c in range(k):
                if acc[c]:
                    out.append((x, targets[c], acc[c]))
    finally:
        free(deg)
        free(cid)
        free(ncrit)
        free(offset)
        free(state)
        free(stack)
        free(phi)
        free(acc)
    return out


def find_cycle(int nbits, in_dom, partner):
    cdef const unsigned char[:] dom = in_dom
    cdef const long long[:] par = partner
    cdef Py_ssize_t size = (<Py_ssize_t>1) << nbits
    cdef Py_ssize_t root, x, nxt, top, p, f
    cdef int stage
    cdef unsigned char* color = <unsigned char*>calloc(size, 1)
    cdef Py_ssize_t* sx = <Py_ssize_t*>malloc((size + 1) * sizeof(Py_ssize_t))
    cdef int* sstage = <int*>malloc((size + 1) * sizeof(int))
    if color == NULL or sx == NULL or sstage == NULL:
        free(color)
        free(sx)
        free(sstage)
        raise MemoryError()
    try:
        for root in range(size):
            if not dom[root] or color[root]:
                continue
            top = 0
            sx[0] = root
            sstage[0] = 0
            top = 1
            color[root] = 1
            while top > 0:
                x = sx[top - 1]
                stage = sstage[top - 1]
                nxt = -1
                p = par[x]
                while stage <= nbits and nxt < 0:
                    if stage < nbits:
                        if (x >> stage) & 1:
                            f = x ^ ((<Py_ssize_t>1) << stage)
                            if dom[f] and f != p:
                                nxt = f
                    else:
                        if p >= 0 and p > x and (p & x) == x:
                            nxt = p
                    stage += 1
                sstage[top - 1] = stage
                if nxt < 0:
                    color[x] = 2
                    top -= 1
                    continue
                if color[nxt] == 1:
                    return True
                if color[nxt] == 0:
                    color[nxt] = 1
                    sx[top] = nxt
                    sstage[top] = 0
                    top += 1
        return False
    finally:
        free(color)
        free(sx)
        free(sstage)
