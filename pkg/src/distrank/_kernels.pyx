# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel: BFS distances and exact rank for every labelled mask.

Entries of a distance matrix on n <= 11 vertices are at most 10, so every
Bareiss intermediate (a minor, bounded by Hadamard) fits in a signed 128-bit
integer together with the product taken before each exact division.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    ctypedef long long i128 "__int128"
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    CMAX = 11

MAX_N = CMAX

cdef int _PI[64]
cdef int _PJ[64]


cdef void _init_pairs():
    cdef int b = 0, i, j
    for j in range(1, CMAX):
        for i in range(j):
            _PI[b] = i
            _PJ[b] = j
            b += 1

_init_pairs()


cdef inline int _lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline i128 _abs128(i128 v) nogil:
    return -v if v < 0 else v


cdef int _distances(int n, uint64_t mask, uint64_t* adj, i128 (*d)[CMAX], int* diam) nogil:
    """Fill ``d`` with BFS distances; return 0 if disconnected."""
    cdef int b, i, j, s, dist, v
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t seen, frontier, nxt, f
    for i in range(n):
        adj[i] = 0
    b = 0
    while mask:
        if mask & 1:
            adj[_PI[b]] |= <uint64_t>1 << _PJ[b]
            adj[_PJ[b]] |= <uint64_t>1 << _PI[b]
        mask >>= 1
        b += 1
    diam[0] = 0
    for s in range(n):
        d[s][s] = 0
        seen = <uint64_t>1 << s
        frontier = seen
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            f = frontier
            while f:
                nxt |= adj[_lowbit(f)]
                f &= f - 1
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                v = _lowbit(f)
                d[s][v] = dist
                f &= f - 1
            frontier = nxt
        if seen != full:
            return 0
        if dist - 1 > diam[0]:
            diam[0] = dist - 1
    return 1


cdef int _rank(int n, i128 (*a)[CMAX]) nogil:
    cdef int r = 0, c, i, j, p
    cdef i128 prev = 1, piv, f, v, best, tmp
    for c in range(n):
        if r == n:
            break
        p = -1
        best = 0
        for i in range(r, n):
            v = _abs128(a[i][c])
            if v != 0 and (p < 0 or v < best):
                p = i
                best = v
        if p < 0:
            continue
        if p != r:
            for j in range(n):
                tmp = a[p][j]
                a[p][j] = a[r][j]
                a[r][j] = tmp
        piv = a[r][c]
        for i in range(r + 1, n):
            f = a[i][c]
            for j in range(c + 1, n):
                a[i][j] = (piv * a[i][j] - f * a[r][j]) / prev
            a[i][c] = 0
        prev = piv
        r += 1
    return r


def mask_rank(int n, object mask):
    """(distance rank, diameter) of the labelled graph, or (-1, -1) if disconnected."""
    cdef uint64_t adj[CMAX]
    cdef i128 d[CMAX][CMAX]
    cdef int diam
    if n < 1 or n > CMAX:
        raise ValueError(f"compiled kernel supports 1 <= n <= {CMAX}")
    if n == 1:
        return 0, 0
    if not _distances(n, <uint64_t>mask, adj, d, &diam):
        return -1, -1
    return _rank(n, d), diam


def scan(int n, object lo, object hi, int target=-1):
    """Scan masks ``lo <= mask < hi`` on ``n`` vertices.

    Returns ``(connected, hist, hits, bound_violations)``.
    """
    cdef uint64_t adj[CMAX]
    cdef i128 d[CMAX][CMAX]
    cdef int diam, rk
    cdef uint64_t mask, ulo = lo, uhi = hi
    cdef long long connected = 0, violations = 0
    cdef long long hist[CMAX + 1]
    if n < 1 or n > CMAX:
        raise ValueError(f"compiled kernel supports 1 <= n <= {CMAX}")
    for rk in range(CMAX + 1):
        hist[rk] = 0
    hits = []
    mask = ulo
    while mask < uhi:
        if n == 1:
            rk = 0
            diam = 0
        elif not _distances(n, mask, adj, d, &diam):
            mask += 1
            continue
        else:
            rk = _rank(n, d)
        connected += 1
        hist[rk] += 1
        if n > 1 and diam + 1 > rk:
            violations += 1
        if rk == target:
            hits.append(mask)
        mask += 1
    return connected, [hist[i] for i in range(n + 1)], hits, violations
