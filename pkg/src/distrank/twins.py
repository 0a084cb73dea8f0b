"""Twin partitions and the compressed distance matrix D/W."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import DomainError, Graph, distance_matrix
from .linalg import ExactMatrix, ShapeError, null_space_basis, nullity

TRUE = "T"
FALSE = "F"


class TwinConsistencyError(RuntimeError):
    """A computed class mixes true-twin and false-twin pairs."""


@dataclass(frozen=True)
class TwinClass:
    members: tuple[int, ...]
    kind: str  # TRUE or FALSE

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]
    representatives: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c.members}

    def to_text(self) -> str:
        """One line per class: ``T|F <size>: v1 v2 ...`` with 1-based vertices."""
        return "".join(
            f"{c.kind} {c.size}: {' '.join(str(v + 1) for v in c.members)}\n" for c in self.classes
        )


def _check_class(g: Graph, members: Sequence[int], kind: str) -> None:
    closed = kind == TRUE
    base = members[0]
    for v in members[1:]:
        if closed:
            ok = (g.adj[base] | 1 << base) == (g.adj[v] | 1 << v)
        else:
            ok = g.adj[base] == g.adj[v]
        if not ok:
            raise TwinConsistencyError(f"class {members} is not homogeneous ({kind})")


def twin_partition(g: Graph) -> TwinPartition:
    """Maximal partition under u ~ v iff N(u) = N(v) or N[u] = N[v]."""
    distance_matrix(g)  # connectivity precondition
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    open_key: dict[int, int] = {}
    closed_key: dict[int, int] = {}
    for v in range(g.n):
        for table, key in ((open_key, g.adj[v]), (closed_key, g.adj[v] | 1 << v)):
            if key in table:
                a, b = find(v), find(table[key])
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                table[key] = v
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = []
    for members in sorted(groups.values()):
        if len(members) == 1:
            kind = TRUE
        else:
            u, w = members[0], members[1]
            kind = TRUE if g.has_edge(u, w) else FALSE
            _check_class(g, members, kind)
        classes.append(TwinClass(tuple(members), kind))
    return TwinPartition(tuple(classes), tuple(c.members[0] for c in classes))


def validate_partition(g: Graph, p: TwinPartition) -> None:
    seen = sorted(v for c in p.classes for v in c.members)
    if seen != list(range(g.n)):
        raise DomainError("partition does not cover the vertex set exactly once")
    for c, w in zip(p.classes, p.representatives):
        if w not in c.members:
            raise DomainError(f"representative {w} not in its class")
        if c.size > 1:
            try:
                _check_class(g, list(c.members), c.kind)
            except TwinConsistencyError as exc:
                raise DomainError(str(exc)) from None


def quotient_matrix(g: Graph, p: TwinPartition) -> ExactMatrix:
    """The k x k matrix with the same nullity as D(G)."""
    validate_partition(g, p)
    d = distance_matrix(g)
    k = len(p)
    rows = []
    for i in range(k):
        ci, wi = p.classes[i], p.representatives[i]
        row = []
        for j in range(k):
            cj, wj = p.classes[j], p.representatives[j]
            if i != j:
                row.append(cj.size * d[wi][wj])
            elif ci.kind == TRUE:
                row.append(ci.size - 1)
            else:
                row.append(2 * (ci.size - 1))
        rows.append(row)
    return ExactMatrix(rows)


def verify_nullity_equivalence(g: Graph) -> tuple[int, int]:
    """(nullity of D, nullity of D/W), computed along separate paths."""
    full = nullity(ExactMatrix(distance_matrix(g)))
    quot = nullity(quotient_matrix(g, twin_partition(g)))
    return full, quot


def null_vector_twin_constancy(g: Graph, x: Sequence) -> bool:
    """True iff ``x`` takes equal values on every pair of (true or false) twins."""
    if len(x) != g.n:
        raise ShapeError(f"vector of length {len(x)} for a graph on {g.n} vertices")
    xs = [Fraction(v) for v in x]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            twins = g.adj[u] == g.adj[v] or (g.adj[u] | 1 << u) == (g.adj[v] | 1 << v)
            if twins and xs[u] != xs[v]:
                return False
    return True


def distance_null_space(g: Graph) -> list[list[Fraction]]:
    return null_space_basis(ExactMatrix(distance_matrix(g)))
