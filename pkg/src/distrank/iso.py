"""Graph isomorphism by invariant screening plus refined backtracking.

Decision only; no canonical labels are produced.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, _bits


def _all_bfs(g: Graph) -> list[list[int]]:
    return [g.bfs(v) for v in range(g.n)]


def _vertex_colors(g: Graph) -> list[tuple]:
    """Initial colour per vertex: degree and the multiset of its distances."""
    rows = _all_bfs(g)
    return [(g.degree(v), tuple(sorted(Counter(r).items()))) for v, r in enumerate(rows)]


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before the exact test."""
    return (g.n, g.m, tuple(sorted(_vertex_colors(g))))


def _joint_refine(g: Graph, h: Graph, cg: list, ch: list):
    """Refine both graphs with a shared colour table; ``None`` if they diverge."""
    cur_g, cur_h = list(cg), list(ch)
    while True:
        sg = [(cur_g[v], tuple(sorted(cur_g[u] for u in _bits(g.adj[v])))) for v in range(g.n)]
        sh = [(cur_h[v], tuple(sorted(cur_h[u] for u in _bits(h.adj[v])))) for v in range(h.n)]
        if Counter(sg) != Counter(sh):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sg)))}
        ng = [table[s] for s in sg]
        nh = [table[s] for s in sh]
        if len(table) == len(set(cur_g)):
            return ng, nh
        cur_g, cur_h = ng, nh


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cg, ch = _vertex_colors(g), _vertex_colors(h)
    if Counter(cg) != Counter(ch):
        return False
    palette = {c: i for i, c in enumerate(sorted(set(cg)))}
    start = _joint_refine(g, h, [palette[c] for c in cg], [palette[c] for c in ch])
    if start is None:
        return False
    return _search(g, h, *start)


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> bool:
    n = g.n
    if len(set(cg)) == n:
        # discrete partition: the map is forced
        where = {c: v for v, c in enumerate(ch)}
        perm = [where[cg[v]] for v in range(n)]
        return g.relabel(perm) == h
    # branch on the smallest non-singleton cell
    cells = Counter(cg)
    target = min((c for c, k in cells.items() if k > 1), key=lambda c: (cells[c], c))
    v = cg.index(target)
    fresh = max(max(cg), max(ch)) + 1
    for w in (u for u in range(n) if ch[u] == target):
        ng = list(cg)
        nh = list(ch)
        ng[v] = fresh
        nh[w] = fresh
        refined = _joint_refine(g, h, ng, nh)
        if refined is not None and _search(g, h, *refined):
            return True
    return False


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every permutation. Only for tiny graphs in tests."""
    from itertools import permutations

    if g.n != h.n or g.m != h.m:
        return False
    return any(g.relabel(p) == h for p in permutations(range(g.n)))


def dedupe(graphs) -> list[Graph]:
    """Keep the first graph of each isomorphism class, preserving order."""
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in graphs:
        key = invariant(g)
        bucket = buckets.setdefault(key, [])
        if any(is_isomorphic(g, r) for r in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out
