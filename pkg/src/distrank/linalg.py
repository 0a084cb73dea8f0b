"""Exact dense linear algebra over the rationals.

Every matrix entry is a :class:`fractions.Fraction`; nothing here touches
floating point. Integer matrices go through fraction-free (Bareiss)
elimination so intermediate values stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class DegenerateOperationError(ValueError):
    """A row operation would destroy rank (e.g. scaling by zero)."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class ExactMatrix:
    """Immutable rows x cols matrix of reduced rationals."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ShapeError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def rows(self) -> list[list[Fraction]]:
        """A mutable copy of the entries."""
        return [list(r) for r in self._rows]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactMatrix):
            return self._rows == other._rows
        try:
            return self == ExactMatrix(other)
        except (TypeError, ValueError, ShapeError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(x) for x in r] for r in self._rows]})"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.ncols:
            raise ShapeError(f"vector of length {len(x)} for {self.ncols} columns")
        xs = [_frac(v) for v in x]
        return [sum((a * b for a, b in zip(r, xs)), Fraction(0)) for r in self._rows]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ShapeError("inner dimensions differ")
        cols = list(zip(*other._rows))
        return ExactMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows]
        )

    def to_text(self) -> str:
        return format_matrix(self)


def format_rational(x: Fraction) -> str:
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_matrix(m: ExactMatrix) -> str:
    """``<rows> <cols>`` header, then one line of rationals per row."""
    lines = [f"{m.nrows} {m.ncols}"]
    lines += [" ".join(format_rational(x) for x in m.row(i)) for i in range(m.nrows)]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ExactMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        r, c = (int(t) for t in lines[0].split())
    except ValueError:
        raise ValueError(f"bad matrix header: {lines[0]!r}") from None
    body = [ln.split() for ln in lines[1:]]
    if len(body) != r or any(len(row) != c for row in body):
        raise ValueError(f"matrix body does not match header {r} {c}")
    return ExactMatrix([[Fraction(t) for t in row] for row in body])


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(m: ExactMatrix) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row.

    Returns the integer rows and the factor ``s`` with det(original) = det(int) / s.
    """
    out = []
    scale = Fraction(1)
    for row in m.rows():
        den = lcm(*(x.denominator for x in row))
        out.append([int(x * den) for x in row])
        scale *= den
    return out, scale


def _pick_pivot(a: list[list[int]], col: int, start: int) -> int | None:
    best = None
    best_bits = None
    for i in range(start, len(a)):
        v = a[i][col]
        if v:
            bits = abs(v).bit_length()
            if best is None or bits < best_bits:
                best, best_bits = i, bits
                if bits == 1:
                    break
    return best


def bareiss(a: list[list[int]]) -> tuple[int, int, list[int]]:
    """Fraction-free elimination of an integer matrix, in place.

    Returns ``(rank, sign, pivot_cols)``. For a square nonsingular input the
    last pivot equals ``sign * det``.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = _pick_pivot(a, c, r)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
            sign = -sign
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return r, sign, pivots


def rank(m: ExactMatrix) -> int:
    a, _ = _integer_rows(m)
    return bareiss(a)[0]


def determinant(m: ExactMatrix) -> Fraction:
    if m.nrows != m.ncols:
        raise ShapeError(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    a, scale = _integer_rows(m)
    n = len(a)
    r, sign, _ = bareiss(a)
    if r < n:
        return Fraction(0)
    return Fraction(sign * a[n - 1][n - 1]) / scale


def nullity(m: ExactMatrix) -> int:
    return m.ncols - rank(m)


def rref(m: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, over Fractions."""
    a = m.rows()
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        best = None
        for i in range(r, nrows):
            v = a[i][c]
            if v:
                bits = v.numerator.bit_length() + v.denominator.bit_length()
                if p is None or bits < best:
                    p, best = i, bits
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def null_space_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """One basis vector per free column, that column set to 1, in column order."""
    a, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            x[pc] = -a[row_idx][f]
        basis.append(x)
    return basis


def cofactor_determinant(m: ExactMatrix) -> Fraction:
    """Laplace expansion along the first row. Exponential; for cross-checks only."""
    if m.nrows != m.ncols:
        raise ShapeError("non-square")
    rows = m.rows()

    def go(mat):
        if len(mat) == 1:
            return mat[0][0]
        total = Fraction(0)
        for j, x in enumerate(mat[0]):
            if x:
                minor = [r[:j] + r[j + 1:] for r in mat[1:]]
                total += (-1) ** j * x * go(minor)
        return total

    return go(rows)


# ---------------------------------------------------------------------------
# row operations


@dataclass(frozen=True)
class RowOp:
    """Elementary row operation (0-based rows).

    kind ``swap``: exchange rows i and j. ``add``: r_i += scalar * r_j.
    ``scale``: r_i *= scalar.
    """

    kind: str
    i: int
    j: int = -1
    scalar: Fraction = Fraction(1)

    @staticmethod
    def swap(i: int, j: int) -> "RowOp":
        return RowOp("swap", i, j)

    @staticmethod
    def add(i: int, j: int, scalar=1) -> "RowOp":
        return RowOp("add", i, j, _frac(scalar))

    @staticmethod
    def scale(i: int, scalar) -> "RowOp":
        return RowOp("scale", i, -1, _frac(scalar))


def row_reduce(m: ExactMatrix, ops: Iterable[RowOp]) -> ExactMatrix:
    a = m.rows()
    n = m.nrows
    for op in ops:
        idx = (op.i,) if op.kind == "scale" else (op.i, op.j)
        if any(not 0 <= t < n for t in idx):
            raise IndexError(f"row index out of range in {op}")
        if op.kind == "swap":
            a[op.i], a[op.j] = a[op.j], a[op.i]
        elif op.kind == "add":
            if op.i == op.j:
                raise DegenerateOperationError("row added to itself")
            s = op.scalar
            a[op.i] = [x + s * y for x, y in zip(a[op.i], a[op.j])]
        elif op.kind == "scale":
            if op.scalar == 0:
                raise DegenerateOperationError("scaling a row by zero")
            a[op.i] = [x * op.scalar for x in a[op.i]]
        else:
            raise ValueError(f"unknown row operation {op.kind!r}")
    return ExactMatrix(a)
