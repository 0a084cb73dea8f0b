"""Exhaustive labelled-graph enumeration and the census by distance rank."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import _backend
from .graph import DomainError, Graph, graph_from_mask, is_connected
from .iso import dedupe

DEFAULT_CAP = 7


class EnumerationCapError(DomainError):
    pass


def _check_cap(n: int, cap: int, override: bool) -> None:
    if n < 1:
        raise DomainError(f"vertex count must be >= 1, got {n}")
    if n > cap and not override:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {cap}; pass an override to proceed"
        )


def mask_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_connected(
    n: int, lo: int = 0, hi: int | None = None, cap: int = DEFAULT_CAP, override: bool = False
) -> Iterator[Graph]:
    """Connected labelled graphs on ``n`` vertices, masks ascending in ``[lo, hi)``."""
    _check_cap(n, cap, override)
    hi = mask_count(n) if hi is None else hi
    for mask in range(lo, hi):
        g = graph_from_mask(n, mask)
        if is_connected(g):
            yield g


@dataclass(frozen=True)
class Shard:
    index: int
    count: int

    @classmethod
    def parse(cls, text: str) -> "Shard":
        try:
            i, of = (int(t) for t in text.split("/"))
        except ValueError:
            raise ValueError(f"shard must look like i/of, got {text!r}") from None
        if of < 1 or not 0 <= i < of:
            raise ValueError(f"shard index {i} out of range for {of} shards")
        return cls(i, of)

    def ranges(self, n_max: int, n_min: int = 1) -> list[tuple[int, int, int]]:
        """``(n, lo, hi)`` mask ranges owned by this shard.

        All orders ``n_min..n_max`` are laid end to end as one index space and
        cut into ``count`` contiguous pieces, so concatenating shard outputs in
        shard order reproduces the unsharded scan order.
        """
        sizes = [(n, mask_count(n)) for n in range(n_min, n_max + 1)]
        total = sum(s for _, s in sizes)
        start = self.index * total // self.count
        stop = (self.index + 1) * total // self.count
        out = []
        offset = 0
        for n, size in sizes:
            lo = max(start, offset) - offset
            hi = min(stop, offset + size) - offset
            if lo < hi:
                out.append((n, lo, hi))
            offset += size
        return out


@dataclass
class CensusWitness:
    """Connected graphs of one distance rank found by a scan."""

    rank: int
    representatives: list[Graph] = field(default_factory=list)
    labeled_count: int = 0
    # every hit as (n, mask), in scan order
    labeled: list[tuple[int, int]] = field(default_factory=list)


def _scan_range(args):
    n, lo, hi, k = args
    connected, hist, hits, _ = _backend.scan(n, lo, hi, k)
    return n, hits


def census_by_distance_rank(
    k: int,
    n_max: int = DEFAULT_CAP,
    shard: Shard | None = None,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    override: bool = False,
    dedupe_result: bool = True,
) -> CensusWitness:
    """Scan connected graphs on up to ``n_max`` vertices for distance rank ``k``."""
    if k < 2:
        raise DomainError(f"target rank must be >= 2, got {k}")
    _check_cap(n_max, cap, override)
    shard = shard or Shard(0, 1)
    tasks = [(n, lo, hi, k) for n, lo, hi in shard.ranges(n_max)]
    if jobs > 1 and len(tasks) > 0:
        tasks = _split(tasks, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_range, tasks))
    else:
        results = [_scan_range(t) for t in tasks]
    labeled = [(n, mask) for n, hits in results for mask in hits]
    graphs = [graph_from_mask(n, mask) for n, mask in labeled]
    reps = dedupe(graphs) if dedupe_result else graphs
    return CensusWitness(k, reps, len(labeled), labeled)


def _split(tasks, pieces):
    """Cut large mask ranges further so a worker pool stays busy; order is kept."""
    total = sum(hi - lo for _, lo, hi, _ in tasks)
    step = max(1, total // pieces)
    out = []
    for n, lo, hi, k in tasks:
        for a in range(lo, hi, step):
            out.append((n, a, min(hi, a + step), k))
    return out


def merge_witnesses(parts: list[CensusWitness], dedupe_result: bool = True) -> CensusWitness:
    """Combine shard results in shard order."""
    if not parts:
        raise ValueError("nothing to merge")
    k = parts[0].rank
    if any(p.rank != k for p in parts):
        raise ValueError("cannot merge censuses of different ranks")
    labeled = [x for p in parts for x in p.labeled]
    graphs = [graph_from_mask(n, m) for n, m in labeled]
    reps = dedupe(graphs) if dedupe_result else graphs
    return CensusWitness(k, reps, sum(p.labeled_count for p in parts), labeled)


@dataclass
class RankHistogram:
    n: int
    connected: int
    by_rank: list[int]
    bound_violations: int


def rank_histogram(n: int, cap: int = DEFAULT_CAP, override: bool = False) -> RankHistogram:
    """Distance-rank distribution over all connected labelled graphs on ``n`` vertices."""
    _check_cap(n, cap, override)
    connected, hist, _, viol = _backend.scan(n, 0, mask_count(n), -1)
    return RankHistogram(n, connected, list(hist), viol)
