"""Pure-Python census kernel. Same API as the compiled ``_kernels`` module."""

from __future__ import annotations

MAX_N = 62


def _pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def _adjacency(n, mask, pairs):
    adj = [0] * n
    b = 0
    while mask:
        if mask & 1:
            i, j = pairs[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        b += 1
    return adj


def _distances(n, adj):
    """Rows of BFS distances, or None if the graph is disconnected."""
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
            frontier = nxt
        if seen != full:
            return None
        rows.append(row)
    return rows


def int_rank(a):
    """Rank of an integer matrix by fraction-free elimination; mutates ``a``."""
    nrows = len(a)
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            v = a[i][c]
            if v:
                bits = abs(v).bit_length()
                if p < 0 or bits < best:
                    p, best = i, bits
        if p < 0:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = a[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def mask_rank(n, mask):
    """(distance rank, diameter) of the labelled graph, or (-1, -1) if disconnected."""
    if n == 1:
        return 0, 0
    rows = _distances(n, _adjacency(n, mask, _pairs(n)))
    if rows is None:
        return -1, -1
    diam = max(max(r) for r in rows)
    return int_rank(rows), diam


def scan(n, lo, hi, target=-1):
    """Scan masks ``lo <= mask < hi`` on ``n`` vertices.

    Returns ``(connected, hist, hits, bound_violations)`` where ``hist[k]``
    counts connected graphs of distance rank ``k`` and ``hits`` lists the
    masks whose rank equals ``target``.
    """
    pairs = _pairs(n)
    hist = [0] * (n + 1)
    hits = []
    connected = 0
    violations = 0
    for mask in range(lo, hi):
        if n == 1:
            rk, diam = 0, 0
        else:
            rows = _distances(n, _adjacency(n, mask, pairs))
            if rows is None:
                continue
            diam = max(max(r) for r in rows)
            rk = int_rank(rows)
        connected += 1
        hist[rk] += 1
        if diam + 1 > rk and n > 1:
            violations += 1
        if rk == target:
            hits.append(mask)
    return connected, hist, hits, violations
