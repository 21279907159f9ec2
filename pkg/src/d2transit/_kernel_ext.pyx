# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled feasibility kernel for host graphs with at most 64 vertices.

Same search, same visiting order and same node counts as ``_kernel_py``;
bitsets are single ``uint64_t`` words.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64

cdef struct Ctx:
    int n
    int k
    uint64_t adj[MAXN]
    uint64_t capmask[MAXN + 2]
    uint64_t parts[MAXN + 2]
    long long nodes
    long long budget


cdef inline bint key_less(uint64_t a, uint64_t b) nogil:
    cdef int ca = popcount(a), cb = popcount(b)
    return ca < cb or (ca == cb and a < b)


cdef inline bint enough(Ctx* c, uint64_t placed, uint64_t R, int need) nogil:
    if popcount(R) < need:
        return False
    while placed:
        if popcount(c.adj[ctz(placed)] & R) < need:
            return False
        placed &= placed - 1
    return True


cdef bint all_private(Ctx* c, uint64_t targets, uint64_t B) nogil:
    cdef int members[MAXN]
    cdef int cnt = 0, i, j
    cdef uint64_t m = B, others
    if B & (B - 1) == 0:
        return True
    while m:
        members[cnt] = ctz(m)
        cnt += 1
        m &= m - 1
    for i in range(cnt):
        others = 0
        for j in range(cnt):
            if j != i:
                others |= c.adj[members[j]]
        if targets & c.adj[members[i]] & ~others == 0:
            return False
    return True


cdef int next_level(Ctx* c, int j, uint64_t R, uint64_t placed) nogil:
    if j == 2:
        return 1
    return build(c, j - 1, R, placed, 0, 0, R & c.capmask[j - 1])


cdef int build(Ctx* c, int j, uint64_t R, uint64_t placed, uint64_t B,
               uint64_t dom, uint64_t avail) nogil:
    cdef uint64_t und, A, b, cand, low, B2, R2, um
    cdef int t, cnt, best_t, best_c, u, r
    cdef bint mutual
    c.nodes += 1
    if c.nodes > c.budget:
        return -1
    und = placed & ~dom
    if und == 0:
        A = c.parts[j + 1]
        b = B
        mutual = True
        while b:
            if c.adj[ctz(b)] & A == 0:
                mutual = False
                break
            b &= b - 1
        if mutual and not key_less(A, B):
            return 0
        c.parts[j] = B
        r = next_level(c, j, R, placed | B)
        if r != 0:
            return r
        c.parts[j] = 0
        return 0
    best_t = -1
    best_c = c.n + 1
    um = und
    while um:
        t = ctz(um)
        um &= um - 1
        cnt = popcount(c.adj[t] & avail)
        if cnt < best_c:
            best_t = t
            best_c = cnt
            if cnt <= 1:
                break
    if best_c == 0:
        return 0
    cand = c.adj[best_t] & avail
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        avail &= ~low
        u = ctz(low)
        B2 = B | low
        R2 = R & ~low
        if not enough(c, placed | B2, R2, j - 1):
            continue
        if not all_private(c, placed, B2):
            continue
        r = build(c, j, R2, placed, B2, dom | c.adj[u], avail)
        if r != 0:
            return r
    return 0


def feasible(list adj, int k, list cap, long long node_budget):
    """See ``_kernel_py.feasible``; requires ``len(adj) <= 64``."""
    cdef Ctx c
    cdef int n = len(adj), v, j, r
    cdef uint64_t roots, low, full, R, m
    if n > MAXN:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if k <= 1:
        return 1, [1] * n, 0
    if k > n:
        return 0, None, 0
    c.n = n
    c.k = k
    c.nodes = 0
    c.budget = node_budget
    for j in range(MAXN + 2):
        c.capmask[j] = 0
        c.parts[j] = 0
    for v in range(n):
        c.adj[v] = <uint64_t>adj[v]
        for j in range(1, min(<int>cap[v], k) + 1):
            c.capmask[j] |= (<uint64_t>1) << v
    full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    roots = c.capmask[k]
    while roots:
        low = roots & (~roots + 1)
        roots ^= low
        c.nodes += 1
        if c.nodes > c.budget:
            return -1, None, c.nodes
        R = full & ~low
        if not enough(&c, low, R, k - 1):
            continue
        c.parts[k] = low
        r = next_level(&c, k, R, low)
        if r == -1:
            return -1, None, c.nodes
        if r == 1:
            levels = [1] * n
            for j in range(2, k + 1):
                m = c.parts[j]
                while m:
                    levels[ctz(m)] = j
                    m &= m - 1
            return 1, levels, c.nodes
        c.parts[k] = 0
    return 0, None, c.nodes
