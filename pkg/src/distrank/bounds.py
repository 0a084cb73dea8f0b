"""Order bounds from diameter, maximum degree and diagonal Ramsey numbers."""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor
from typing import NamedTuple

from .graph import DomainError

# diagonal Ramsey numbers R(k) = R(k, k) that are actually known
KNOWN_RAMSEY = {2: 2, 3: 6, 4: 18}


class RamseyValue(NamedTuple):
    value: int
    exact: bool


def moore_bound(d: int, r: int) -> Fraction:
    """Upper bound on the order of a graph with diameter ``d`` and max degree ``r``.

    f(d, r) = (1 + ((r - 1)^d - 1) r) / (r - 2); undefined at r = 2, so r >= 3.
    """
    if r <= 2:
        raise DomainError(f"moore_bound needs max degree >= 3, got {r}")
    if d < 1:
        raise DomainError(f"moore_bound needs diameter >= 1, got {d}")
    return Fraction(1 + ((r - 1) ** d - 1) * r, r - 2)


def ramsey_value(k: int) -> RamseyValue:
    """R(k, k) when known, otherwise the Erdos-Szekeres bound C(2k-2, k-1)."""
    if k < 2:
        raise DomainError(f"Ramsey number needs k >= 2, got {k}")
    if k in KNOWN_RAMSEY:
        return RamseyValue(KNOWN_RAMSEY[k], True)
    return RamseyValue(comb(2 * k - 2, k - 1), False)


class RankOrderBound(NamedTuple):
    k: int
    ramsey: RamseyValue
    bound: Fraction | None
    floor: int | None
    note: str


def rank_order_bound(k: int) -> RankOrderBound:
    """The order bound f(k, R(k)) for connected graphs of distance rank ``k``.

    When R(k) = 2 the Moore-type formula has a pole; a graph with maximum
    degree at most 2 and diameter below k is a path or cycle, reported via the
    path bound d + 1 with d = k.
    """
    rv = ramsey_value(k)
    if rv.value <= 2:
        return RankOrderBound(k, rv, None, None, f"pole at r=2; path bound d+1 = {k + 1}")
    f = moore_bound(k, rv.value)
    return RankOrderBound(k, rv, f, floor(f), "" if rv.exact else "R(k) is an upper bound only")
