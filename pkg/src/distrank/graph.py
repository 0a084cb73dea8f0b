"""Simple undirected graphs stored as per-vertex neighbourhood bitsets."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .linalg import ExactMatrix


class GraphError(ValueError):
    """Base class for graph construction and metric errors."""


class InvalidEdgeError(GraphError):
    pass


class NotConnectedError(GraphError):
    def __init__(self, msg: str = "graph is not connected"):
        super().__init__(msg)


class DomainError(GraphError):
    pass


class ParseError(ValueError):
    """Malformed graph text. ``line`` and ``pos`` are 1-based."""

    def __init__(self, msg: str, line: int = 1, pos: int = 1):
        super().__init__(f"line {line}, byte {pos}: {msg}")
        self.line = line
        self.pos = pos


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    """

    __slots__ = ("n", "adj", "_dist")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 1:
            raise DomainError("a graph needs at least one vertex")
        adj = tuple(adj)
        if len(adj) != n:
            raise DomainError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a >> v & 1:
                raise InvalidEdgeError(f"self-loop at vertex {v}")
            if a & ~full:
                raise IndexError(f"neighbour of {v} out of range")
            for u in _bits(a):
                if not adj[u] >> v & 1:
                    raise DomainError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self.adj = adj
        self._dist = None

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices relabelled in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            a = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    a |= 1 << pos[u]
            adj.append(a)
        return Graph(len(vertices), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            a = 0
            for u in _bits(self.adj[v]):
                a |= 1 << perm[u]
            adj[perm[v]] = a
        return Graph(self.n, adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    # metric ----------------------------------------------------------------

    def bfs(self, source: int) -> list[int]:
        """Distances from ``source``; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        seen = 1 << source
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen
            for v in _bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        return dist

    def distances(self) -> tuple[tuple[int, ...], ...]:
        if self._dist is None:
            rows = tuple(tuple(self.bfs(v)) for v in range(self.n))
            if -1 in rows[0]:
                raise NotConnectedError()
            self._dist = rows
        return self._dist


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise DomainError("a graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def make_complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def make_empty(n: int) -> Graph:
    """``n`` isolated vertices (nK_1)."""
    return Graph(n, [0] * n)


def make_path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return build_graph(n, [(0, i) for i in range(1, n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.adj) + [a << shift for a in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    hmask = ((1 << h.n) - 1) << shift
    gmask = (1 << g.n) - 1
    return Graph(g.n + h.n, [a | hmask for a in g.adj] + [(a << shift) | gmask for a in h.adj])


# named small graphs used throughout the tests and the CLI
def paw() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


def diamond() -> Graph:
    return build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def house() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


# ---------------------------------------------------------------------------
# metrics


def is_connected(g: Graph) -> bool:
    return -1 not in g.bfs(0)


def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs BFS distances; raises :class:`NotConnectedError` if disconnected."""
    if not is_connected(g):
        raise NotConnectedError()
    return g.distances()


def distance_exact_matrix(g: Graph) -> ExactMatrix:
    return ExactMatrix(distance_matrix(g))


def diameter(g: Graph) -> int:
    return max(max(r) for r in distance_matrix(g))


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def is_isometric_subgraph(g: Graph, subset: Iterable[int]) -> bool:
    """True iff distances inside ``G[subset]`` equal distances in ``G``."""
    s = sorted(set(subset))
    if not s:
        raise DomainError("empty vertex subset")
    dg = distance_matrix(g)
    h = g.induced(s)
    if not is_connected(h):
        return False
    dh = h.distances()
    return all(dh[i][j] == dg[u][v] for i, u in enumerate(s) for j, v in enumerate(s) if i < j)


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    return u != v and (g.adj[u] | 1 << u) == (g.adj[v] | 1 << v)


def are_false_twins(g: Graph, u: int, v: int) -> bool:
    return u != v and g.adj[u] == g.adj[v]


def has_induced(g: Graph, pattern: Graph) -> bool:
    """Brute-force induced-subgraph test over all vertex subsets of the pattern's order."""
    from .iso import is_isomorphic

    k = pattern.n
    target = sorted(pattern.degrees())
    for sub in combinations(range(g.n), k):
        h = g.induced(sub)
        if sorted(h.degrees()) == target and is_isomorphic(h, pattern):
            return True
    return False


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """DIMACS-style edge list: ``p edge n m`` then ``e u v`` lines, 1-based."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c"):
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        toks = stripped.split()
        if toks[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno, col)
            if len(toks) != 4 or toks[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno, col)
            try:
                n, m = int(toks[2]), int(toks[3])
            except ValueError:
                raise ParseError("non-integer vertex or edge count", lineno, col) from None
            if n < 1 or m < 0:
                raise ParseError("vertex count must be positive", lineno, col)
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno, col)
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno, col)
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError("non-integer vertex index", lineno, col) from None
            if u == v:
                raise InvalidEdgeError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n}", lineno, col)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", lineno, col)
    if n is None:
        raise ParseError("missing problem line", 1, 1)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", 1, 1)
    return build_graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def pair_index(i: int, j: int) -> int:
    """Bit position of pair ``i < j`` in graph6 column-major upper-triangle order."""
    return j * (j - 1) // 2 + i


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    return Graph(n, adj)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for i, j in g.edges():
        mask |= 1 << pair_index(i, j)
    return mask


def parse_graph6(text: str) -> Graph:
    """Decode the short form of graph6 (n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string", 1, 1)
    for pos, ch in enumerate(s, 1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", 1, pos)
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("only the short form (n <= 62) is supported", 1, 1)
    if n < 1:
        raise ParseError("graph6 with zero vertices", 1, 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1, 2)
    mask = 0
    b = 0
    for pos, ch in enumerate(body, 2):
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if b < nbits:
                mask |= bit << b
            elif bit:
                raise ParseError("nonzero padding bit", 1, pos)
            b += 1
    return graph_from_mask(n, mask)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise DomainError("graph6 short form supports n <= 62")
    nbits = n * (n - 1) // 2
    mask = graph_to_mask(g)
    out = [chr(n + 63)]
    for start in range(0, nbits, 6):
        val = 0
        for k in range(6):
            b = start + k
            bit = mask >> b & 1 if b < nbits else 0
            val = val << 1 | bit
        out.append(chr(val + 63))
    return "".join(out)


def read_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edgelist" if first[:1] in ("p", "c", "e") and " " in first else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {fmt!r}")
