"""Connected threshold graphs given by power sequences [n1, ..., n2k].

The creation sequence is 0^n1 1^n2 0^n3 ... 1^n2k: odd blocks add isolated
vertices, even blocks add universal ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .graph import DomainError, Graph
from .linalg import ExactMatrix, RowOp, nullity, row_reduce
from .twins import FALSE, TRUE, TwinClass, TwinPartition


class PowerSequenceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PowerSequence:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or len(parts) % 2:
            raise PowerSequenceFormatError(f"power sequence needs even length >= 2, got {len(parts)}")
        if any((not isinstance(p, int)) or p < 1 for p in parts):
            raise PowerSequenceFormatError("every part must be a positive integer")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts) // 2

    @property
    def order(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def parse_power_sequence(text: str) -> PowerSequence:
    toks = [t.strip() for t in text.replace(" ", "").split(",")]
    try:
        parts = [int(t) for t in toks]
    except ValueError:
        raise PowerSequenceFormatError(f"not a comma-separated integer list: {text!r}") from None
    return PowerSequence(tuple(parts))


def _as_ps(ps) -> PowerSequence:
    return ps if isinstance(ps, PowerSequence) else PowerSequence(tuple(ps))


def block_ranges(ps) -> list[range]:
    ps = _as_ps(ps)
    out = []
    start = 0
    for p in ps.parts:
        out.append(range(start, start + p))
        start += p
    return out


def power_sequence_to_graph(ps) -> Graph:
    ps = _as_ps(ps)
    adj = [0] * ps.order
    v = 0
    for idx, p in enumerate(ps.parts):
        universal = idx % 2 == 1
        for _ in range(p):
            if universal:
                earlier = (1 << v) - 1
                adj[v] = earlier
                for u in range(v):
                    adj[u] |= 1 << v
            v += 1
    return Graph(ps.order, adj)


def natural_partition(ps) -> TwinPartition:
    """Block-by-block partition: odd blocks false twins, even blocks true twins."""
    ps = _as_ps(ps)
    classes = tuple(
        TwinClass(tuple(r), FALSE if i % 2 == 0 else TRUE) for i, r in enumerate(block_ranges(ps))
    )
    return TwinPartition(classes, tuple(c.members[0] for c in classes))


def threshold_quotient(ps) -> ExactMatrix:
    """D/W for the natural partition, written straight from the block pattern.

    A 0-block is at distance 2 from every earlier block, a 1-block at distance 1.
    """
    n = list(_as_ps(ps).parts)
    size = len(n)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(2 * n[i] - 2 if i % 2 == 0 else n[i] - 1)
            else:
                later = max(i, j)
                row.append(n[j] * (2 if later % 2 == 0 else 1))
        rows.append(row)
    return ExactMatrix(rows)


def alpha_sequence(ps) -> list[Fraction]:
    n = _as_ps(ps).parts
    last = len(n) - 1
    out = []
    for i, ni in enumerate(n):
        if i == 0:
            out.append(Fraction(ni - 2))
        elif i == last:
            out.append(Fraction(2 - ni, 2))
        elif i % 2 == 0:
            out.append(Fraction(ni))
        else:
            out.append(Fraction(-ni, 2))
    return out


def continuants(alphas) -> list[Fraction]:
    """d1 = a1, d2 = 1 + a1 a2, d_i = a_i d_{i-1} + d_{i-2}."""
    a = [Fraction(x) for x in alphas]
    if len(a) < 2:
        raise DomainError("continuants need at least two terms")
    d = [a[0], 1 + a[0] * a[1]]
    for x in a[2:]:
        d.append(x * d[-1] + d[-2])
    return d


def threshold_nullity(ps) -> int:
    return 1 if continuants(alpha_sequence(ps))[-1] == 0 else 0


def oracle_nullity(ps) -> int:
    """Nullity of the full distance matrix, by exact elimination."""
    from .graph import distance_exact_matrix

    return nullity(distance_exact_matrix(power_sequence_to_graph(ps)))


def reduction_ops(size: int) -> list[RowOp]:
    """Row operations taking the quotient to tridiagonal form (0-based rows).

    r_i - r_{i+1} top to bottom, negate every even row but the last, then
    r_i - r_{i-1} bottom to top.
    """
    ops = [RowOp.add(i, i + 1, -1) for i in range(size - 1)]
    ops += [RowOp.scale(i, -1) for i in range(1, size - 1, 2)]
    ops += [RowOp.add(i, i - 1, -1) for i in range(size - 1, 0, -1)]
    return ops


def tridiagonal_form(ps) -> ExactMatrix:
    """Replay :func:`reduction_ops` on the quotient."""
    q = threshold_quotient(ps)
    return row_reduce(q, reduction_ops(q.nrows))


def expected_tridiagonal(ps) -> ExactMatrix:
    """Closed form of the reduced matrix: diagonal n1-2, n2, n3, ..., n2k-2."""
    n = _as_ps(ps).parts
    size = len(n)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        if i == 0:
            rows[i][i] = n[0] - 2
        elif i == size - 1:
            rows[i][i] = n[i] - 2
        else:
            rows[i][i] = n[i]
        if i % 2 == 0:
            if i + 1 < size:
                rows[i][i + 1] = 1
            if i > 0:
                rows[i][i - 1] = -1
        else:
            rows[i][i - 1] = 2
            if i + 1 < size:
                rows[i][i + 1] = -2
    return ExactMatrix(rows)


def all_power_sequences(max_total: int) -> Iterator[PowerSequence]:
    """Every valid power sequence with sum <= max_total, ordered by (length, parts)."""

    def compositions(total, length):
        if length == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - length + 2):
            for rest in compositions(total - first, length - 1):
                yield (first,) + rest

    for length in range(2, max_total + 1, 2):
        seqs = []
        for total in range(length, max_total + 1):
            seqs.extend(compositions(total, length))
        for parts in sorted(seqs):
            yield PowerSequence(parts)


@dataclass(frozen=True)
class SearchHit:
    sequence: PowerSequence
    d_last: Fraction
    oracle_nullity: int

    def to_tsv(self) -> str:
        from .linalg import format_rational

        return f"{self.sequence}\t{self.sequence.order}\t{format_rational(self.d_last)}\t{self.oracle_nullity}"


class OracleDisagreement(AssertionError):
    pass


def search_singular_power_sequences(max_total: int) -> list[SearchHit]:
    """All power sequences of total <= max_total whose continuant vanishes.

    Every sequence (hit or not) is cross-checked against the full-matrix oracle.
    """
    if max_total < 2:
        raise DomainError("vertex budget must be at least 2")
    hits = []
    for ps in all_power_sequences(max_total):
        d_last = continuants(alpha_sequence(ps))[-1]
        rec = 1 if d_last == 0 else 0
        orc = oracle_nullity(ps)
        if rec != orc:
            raise OracleDisagreement(f"{ps}: recursion says {rec}, oracle says {orc}")
        if rec:
            hits.append(SearchHit(ps, d_last, orc))
    return hits


FAMILIES = {"A": (4, 1), "B": (3, 2)}


def family_generator(name: str, m: int) -> PowerSequence:
    """Family A is [4,1,m,2], family B is [3,2,m,2]; both have nullity 1."""
    key = name.upper()
    if key not in FAMILIES:
        raise DomainError(f"unknown family {name!r}; choose A or B")
    if m < 1:
        raise DomainError("family parameter must be >= 1")
    a, b = FAMILIES[key]
    return PowerSequence((a, b, m, 2))


def composed_sequence(repeats: int, eps: int) -> PowerSequence:
    """[3, 2, (1, 2) * repeats, eps, 2]; its nullity is decided by the oracle, not assumed."""
    return PowerSequence((3, 2) + (1, 2) * repeats + (eps, 2))
