"""Trivially perfect graphs from rooted clique trees.

A tree is written ``SIZE[(child,child,...)]``, e.g. ``6(7(9,8),9(8(6,7),6))``.
Nodes are numbered in arrow order: depth-first pre-order, children in the
order they appear in the text.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .graph import DomainError, Graph, ParseError
from .linalg import ExactMatrix, RowOp, determinant, nullity, row_reduce


@dataclass(frozen=True)
class CliqueTree:
    """Rooted tree, nodes indexed in arrow order; node 0 is the root."""

    sizes: tuple[int, ...]
    parent: tuple[int, ...]  # parent[0] == -1

    def __post_init__(self):
        if not self.sizes or len(self.sizes) != len(self.parent):
            raise DomainError("sizes and parent arrays must be nonempty and aligned")
        if any(s < 1 for s in self.sizes):
            raise DomainError("clique sizes must be positive")
        if self.parent[0] != -1 or any(not 0 <= p < i for i, p in enumerate(self.parent) if i):
            raise DomainError("parent array must describe a tree in pre-order")
        # descendants of each node must be a contiguous block after it
        for i in range(len(self.sizes)):
            end = self.subtree_end(i)
            if any(self.is_ancestor(i, j) for j in range(end, len(self.sizes))):
                raise DomainError("nodes are not in arrow order")

    @property
    def k(self) -> int:
        return len(self.sizes)

    def children(self, v: int) -> list[int]:
        return [i for i, p in enumerate(self.parent) if p == v]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` is a proper ancestor of ``b``."""
        p = self.parent[b]
        while p != -1:
            if p == a:
                return True
            p = self.parent[p]
        return False

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.is_ancestor(a, b) or self.is_ancestor(b, a)

    def subtree_end(self, v: int) -> int:
        """One past the last node of the subtree rooted at ``v``."""
        j = v + 1
        while j < self.k and self._under(v, j):
            j += 1
        return j

    def _under(self, v: int, j: int) -> bool:
        p = self.parent[j]
        while p != -1 and p >= v:
            if p == v:
                return True
            p = self.parent[p]
        return False

    def subtree(self, v: int) -> "CliqueTree":
        end = self.subtree_end(v)
        nodes = range(v, end)
        sizes = tuple(self.sizes[i] for i in nodes)
        parent = tuple(-1 if i == v else self.parent[i] - v for i in nodes)
        return CliqueTree(sizes, parent)

    def to_text(self) -> str:
        def go(v):
            kids = self.children(v)
            s = str(self.sizes[v])
            return s + ("(" + ",".join(go(c) for c in kids) + ")" if kids else "")

        return go(0)

    def __str__(self) -> str:
        return self.to_text()


def build_tree(nested) -> CliqueTree:
    """From nested ``(size, [children...])`` tuples, or a bare int for a leaf."""
    sizes: list[int] = []
    parent: list[int] = []

    def go(node, par):
        if isinstance(node, int):
            size, kids = node, []
        else:
            size, kids = node
        idx = len(sizes)
        sizes.append(size)
        parent.append(par)
        for c in kids:
            go(c, idx)

    go(nested, -1)
    return CliqueTree(tuple(sizes), tuple(parent))


def parse_clique_tree(text: str) -> CliqueTree:
    s = "".join(text.split())
    pos = 0
    sizes: list[int] = []
    parent: list[int] = []

    def fail(msg):
        raise ParseError(msg, 1, pos + 1)

    def node(par):
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            fail("expected a clique size")
        size = int(s[start:pos])
        if size < 1:
            pos = start
            fail("clique size must be positive")
        idx = len(sizes)
        sizes.append(size)
        parent.append(par)
        if pos < len(s) and s[pos] == "(":
            pos += 1
            node(idx)
            while pos < len(s) and s[pos] == ",":
                pos += 1
                node(idx)
            if pos >= len(s) or s[pos] != ")":
                fail("expected ',' or ')'")
            pos += 1

    if not s:
        fail("empty tree")
    node(-1)
    if pos != len(s):
        fail(f"unexpected {s[pos]!r}")
    return CliqueTree(tuple(sizes), tuple(parent))


def node_vertices(t: CliqueTree) -> list[range]:
    out = []
    start = 0
    for s in t.sizes:
        out.append(range(start, start + s))
        start += s
    return out


def clique_tree_to_graph(t: CliqueTree) -> Graph:
    blocks = node_vertices(t)
    masks = [sum(1 << v for v in b) for b in blocks]
    n = sum(t.sizes)
    adj = [0] * n
    for a in range(t.k):
        nb = 0
        for b in range(t.k):
            if t.comparable(a, b):
                nb |= masks[b]
        for v in blocks[a]:
            adj[v] = nb & ~(1 << v)
    return Graph(n, adj)


def arrow_ordering(t: CliqueTree) -> list[int]:
    """Depth-first pre-order, which is how nodes are already numbered."""
    order = []

    def go(v):
        order.append(v)
        for c in t.children(v):
            go(c)

    go(0)
    return order


def is_arrow_ordering(t: CliqueTree, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(t.k)):
        return False
    for i, a in enumerate(order):
        for j in range(i + 1, len(order)):
            b = order[j]
            if t.is_ancestor(b, a):
                return False
            for c in order[j + 1:]:
                if t.is_ancestor(a, c) and not t.is_ancestor(a, b):
                    return False
    return True


def height(t: CliqueTree, v: int = 0) -> int:
    kids = t.children(v)
    return 0 if not kids else 1 + max(height(t, c) for c in kids)


def tp_quotient(t: CliqueTree) -> ExactMatrix:
    """D/W with one true-twin class per node, rows in arrow order."""
    rows = []
    for i in range(t.k):
        row = []
        for j in range(t.k):
            if i == j:
                row.append(t.sizes[i] - 1)
            else:
                row.append(t.sizes[j] * (1 if t.comparable(i, j) else 2))
        rows.append(row)
    return ExactMatrix(rows)


def m1_ops(k: int) -> list[RowOp]:
    ops = []
    for i in range(1, k):
        ops.append(RowOp.add(i, 0, -2))
        ops.append(RowOp.scale(i, -1))
    return ops


def m1_reduction(t: CliqueTree) -> ExactMatrix:
    """Subtract twice the root row from every other row, then negate those rows.

    The shape of the result is checked: first column below the root is
    ``|R| - 2`` and the lower-right part is block diagonal with one arrow
    matrix per child of the root.
    """
    if t.k < 2:
        raise DomainError("m1_reduction needs a tree with at least two nodes")
    m = row_reduce(tp_quotient(t), m1_ops(t.k))
    r = t.sizes[0]
    if any(m[i, 0] != r - 2 for i in range(1, t.k)):
        raise AssertionError("first column of M1 is not constant |R|-2")
    for c in t.children(0):
        end = t.subtree_end(c)
        block = m.submatrix(range(c, end), range(c, end))
        if block != arrow_matrix(t.subtree(c), as_subtree=True):
            raise AssertionError(f"M1 block at node {c} is not the arrow matrix of its subtree")
        outside = [j for j in range(1, t.k) if not c <= j < end]
        if any(m[i, j] != 0 for i in range(c, end) for j in outside):
            raise AssertionError("M1 is not block diagonal below the root")
    return m


def arrow_matrix(t: CliqueTree, as_subtree: bool = True) -> ExactMatrix:
    """Arrow matrix of a clique tree.

    Top-left ``|R|+1``, first row the sizes of all proper descendants in arrow
    order, first column ``|R|`` repeated, then the children's arrow matrices
    down the diagonal. A single node gives ``[|R|+1]`` when it hangs under some
    ancestor and ``[|R|-1]`` when it is the whole graph.
    """
    if t.k == 1:
        return ExactMatrix([[t.sizes[0] + 1 if as_subtree else t.sizes[0] - 1]])
    k = t.k
    rows = [[0] * k for _ in range(k)]
    rows[0][0] = t.sizes[0] + 1
    for j in range(1, k):
        rows[0][j] = t.sizes[j]
        rows[j][0] = t.sizes[0]
    for c in t.children(0):
        sub = arrow_matrix(t.subtree(c), as_subtree=True)
        for i in range(sub.nrows):
            for j in range(sub.ncols):
                rows[c + i][c + j] = sub[i, j]
    return ExactMatrix(rows)


def tp_nullity(t: CliqueTree) -> int:
    return nullity(tp_quotient(t))


# ---------------------------------------------------------------------------
# nullity gadgets and families


def gadget_matrix(w: int, a: int, b: int) -> ExactMatrix:
    """Arrow matrix of a size-w node with two leaf children of sizes a and b."""
    return ExactMatrix([[w + 1, a, b], [w, a + 1, 0], [w, 0, b + 1]])


def singular_gadget_triples(bound: int) -> list[tuple[int, int, int]]:
    if bound < 1:
        raise DomainError("bound must be >= 1")
    rng = range(1, bound + 1)
    return [t for t in product(rng, rng, rng) if determinant(gadget_matrix(*t)) == 0]


LISTED_GADGETS = frozenset(
    [(2, 3, 3), (2, 2, 5), (2, 5, 2), (3, 2, 2), (3, 1, 5), (3, 5, 1), (4, 1, 3), (4, 3, 1), (6, 1, 2), (6, 2, 1)]
)


def nullity_family(k: int, r: int, n: int, root_sizes: Sequence[int] | None = None) -> CliqueTree:
    """Root R1 with leaf children R2..Rr and k gadgets (3 with leaves 2, 2).

    ``root_sizes`` gives |R1|..|Rr| and must sum to n - 7k. The distance
    nullity is k when |R1| = 2 and k - 1 otherwise.
    """
    if k < 2:
        raise DomainError("k must be >= 2")
    if r not in (1, 2, 3):
        raise DomainError("r must be 1, 2 or 3")
    if n < 7 * k + r:
        raise DomainError(f"n must be >= 7k + r = {7 * k + r}")
    rest = n - 7 * k
    if root_sizes is None:
        if r != 1:
            raise DomainError("root_sizes is required when r > 1")
        root_sizes = [rest]
    root_sizes = list(root_sizes)
    if len(root_sizes) != r:
        raise DomainError(f"expected {r} root sizes, got {len(root_sizes)}")
    if any(s < 1 for s in root_sizes) or sum(root_sizes) != rest:
        raise DomainError(f"root sizes must be positive and sum to n - 7k = {rest}")
    kids = list(root_sizes[1:]) + [(3, [2, 2])] * k
    return build_tree((root_sizes[0], kids))


def expected_family_nullity(k: int, root_sizes: Sequence[int]) -> int:
    return k if root_sizes[0] == 2 else k - 1


def root_size_partitions(k: int, r: int, n: int) -> list[tuple[int, ...]]:
    """All ordered (|R1|, ..., |Rr|) with positive parts summing to n - 7k."""
    rest = n - 7 * k

    def go(total, parts):
        if parts == 1:
            return [(total,)] if total >= 1 else []
        return [(f,) + tail for f in range(1, total) for tail in go(total - f, parts - 1)]

    return go(rest, r)
