"""Search for minimal-edge-boundary sets of a given size and dimension.

The exhaustive mode does not scan arbitrary sets.  Axis compression maps any
size-k set, without raising its edge boundary, to a set whose every axis
section is a centered run, so the minimum over all size-k sets equals the
minimum over those fixed points.  Fixed points of a given size form a small
finite family near the origin, enumerated here layer by layer: a fixed point
in Z^n is exactly a nested chain of fixed points in Z^(n-1) stacked along the
last axis in center-out order.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .core import Point, PointSet, directions
from .boundary import (
    edge_boundary_direct,
    edge_boundary_formula,
    exterior_vertex_boundary,
    gap_set,
)
from .compression import canonical_segment, compress_to_fixed_point

MAX_SETS_ENV = "KINGLATTICE_MAX_SETS"
DEFAULT_MAX_SETS = 1_000_000


class EnumerationOverflowError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""


def _max_sets_default() -> int:
    raw = os.environ.get(MAX_SETS_ENV)
    return int(raw) if raw else DEFAULT_MAX_SETS


def fully_gap_free(ps: PointSet) -> bool:
    """True iff ps has no gaps along any of the 3^n - 1 step directions."""
    return all(not gap_set(ps, d) for d in directions(ps.dim))


@lru_cache(maxsize=None)
def _fixed_point_family(n: int, k: int) -> tuple[frozenset[Point], ...]:
    """All size-k sets in Z^n whose every axis section is a centered run."""
    if n == 1:
        return (frozenset((x,) for x in canonical_segment(k)),)

    # Stack layers along the last axis.  Layer depth m = 1, 2, 3, ... sits at
    # coordinate 0, 1, -1, 2, -2, ...; a section through the stack picks up
    # exactly the layers containing its column, so sections along the last
    # axis are centered runs iff consecutive layers are nested.
    out: list[frozenset[Point]] = []

    def extend(chain: list[frozenset[Point]], remaining: int) -> None:
        if remaining == 0:
            pts: set[Point] = set()
            for depth, layer in enumerate(chain, start=1):
                y = depth // 2 if depth % 2 == 0 else -(depth // 2)
                pts.update(q + (y,) for q in layer)
            out.append(frozenset(pts))
            return
        cap = min(remaining, len(chain[-1])) if chain else remaining
        for size in range(cap, 0, -1):
            for layer in _fixed_point_family(n - 1, size):
                if not chain or layer <= chain[-1]:
                    extend(chain + [layer], remaining - size)

    extend([], k)
    return tuple(out)


def enumerate_compressed_sets(
    n: int, k: int, max_sets: int | None = None
) -> Iterator[PointSet]:
    """Yield every size-k set fixed by central compression along every axis.

    No two yielded sets are translates of each other, and all coordinates
    stay within ceil(k/2) + 1 of the origin.  Exceeding ``max_sets`` raises
    EnumerationOverflowError rather than truncating.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"size must be >= 1, got {k}")
    cap = _max_sets_default() if max_sets is None else max_sets
    for count, pts in enumerate(_fixed_point_family(n, k), start=1):
        if count > cap:
            raise EnumerationOverflowError(
                f"more than {cap} compressed sets for n={n}, k={k}; raise the cap"
            )
        yield PointSet(n, pts)


def random_point_set(
    n: int, k: int, window: int | tuple[int, ...], seed: int
) -> PointSet:
    """Uniform k-subset of the box [0, w_1) x ... x [0, w_n), seeded."""
    extents = (window,) * n if isinstance(window, int) else tuple(window)
    if len(extents) != n:
        raise ValueError(f"window {extents} does not match dimension {n}")
    cells = list(itertools.product(*(range(w) for w in extents)))
    if len(cells) < k:
        raise ValueError(f"window of {len(cells)} cells cannot hold {k} points")
    rng = random.Random(seed)
    return PointSet(n, frozenset(rng.sample(cells, k)))


class WitnessStats(NamedTuple):
    exterior_vertex_boundary: int
    fully_gap_free: bool


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a minimal-edge-boundary search for one (dimension, size).

    Witnesses are translated so their minimum corner is the origin and come
    with per-witness diagnostics.  ``optimal`` is set only when a completed
    exhaustive scan proves the minimum.
    """

    dimension: int
    size: int
    min_edge_boundary: int
    witnesses: tuple[PointSet, ...]
    witness_stats: tuple[WitnessStats, ...]
    method: str
    optimal: bool
    sets_scanned: int

    @property
    def any_witness_gap_free(self) -> bool:
        return any(s.fully_gap_free for s in self.witness_stats)

    @property
    def all_witnesses_gap_free(self) -> bool:
        return all(s.fully_gap_free for s in self.witness_stats)


def _verify_candidate(ps: PointSet) -> int:
    """Boundary of a candidate by both computations, which must agree."""
    direct = edge_boundary_direct(ps)[0]
    total = edge_boundary_formula(ps).total
    if direct != total:
        raise RuntimeError(
            f"boundary computations disagree on {sorted(ps.points)}: "
            f"direct={direct} formula={total}"
        )
    return direct


def _build_report(
    n: int,
    k: int,
    best: int,
    found: list[PointSet],
    method: str,
    optimal: bool,
    scanned: int,
) -> SearchReport:
    normalized = sorted(
        {ps.normalized() for ps in found}, key=lambda ps: sorted(ps.points)
    )
    stats = tuple(
        WitnessStats(exterior_vertex_boundary(ps), fully_gap_free(ps))
        for ps in normalized
    )
    return SearchReport(
        dimension=n,
        size=k,
        min_edge_boundary=best,
        witnesses=tuple(normalized),
        witness_stats=stats,
        method=method,
        optimal=optimal,
        sets_scanned=scanned,
    )


def min_edge_boundary(
    n: int,
    k: int,
    *,
    exhaustive: bool = True,
    seed: int = 0,
    max_sets: int | None = None,
    restarts: int = 5,
) -> SearchReport:
    """Minimal edge boundary over all size-k subsets of Z^n.

    Exhaustive mode scans the compressed fixed-point family and returns the
    true minimum with every minimizing witness.  Heuristic mode (seeded
    random restarts, greedy single-point moves, compression) returns an
    upper bound and is labeled as such.
    """
    if exhaustive:
        best: int | None = None
        witnesses: list[PointSet] = []
        scanned = 0
        for ps in enumerate_compressed_sets(n, k, max_sets=max_sets):
            scanned += 1
            b = _verify_candidate(ps)
            if best is None or b < best:
                best, witnesses = b, [ps]
            elif b == best:
                witnesses.append(ps)
        assert best is not None
        return _build_report(n, k, best, witnesses, "exhaustive", True, scanned)
    return _heuristic_min(n, k, seed=seed, restarts=restarts)


def _improve_once(ps: PointSet, current: int) -> PointSet | None:
    """First strictly improving single-point relocation, or None."""
    pts = ps.points
    frontier: set[Point] = set()
    for p in pts:
        frontier.update(
            tuple(a + s for a, s in zip(p, d)) for d in directions(ps.dim)
        )
    frontier -= pts
    for p in sorted(pts):
        remaining = pts - {p}
        for q in sorted(frontier):
            if q == p:
                continue
            cand = PointSet(ps.dim, remaining | {q})
            if len(cand) != len(ps):
                continue
            if edge_boundary_direct(cand)[0] < current:
                return cand
    return None


def _heuristic_min(n: int, k: int, *, seed: int, restarts: int) -> SearchReport:
    rng = random.Random(seed)
    side = max(2, k)
    best: int | None = None
    found: list[PointSet] = []
    scanned = 0
    for _ in range(max(1, restarts)):
        ps = random_point_set(n, k, side, rng.getrandbits(64))
        ps = compress_to_fixed_point(ps).final
        b = _verify_candidate(ps)
        scanned += 1
        while True:
            better = _improve_once(ps, b)
            if better is None:
                break
            ps = compress_to_fixed_point(better).final
            b = _verify_candidate(ps)
            scanned += 1
        if best is None or b < best:
            best, found = b, [ps]
        elif b == best:
            found.append(ps)
    assert best is not None
    return _build_report(n, k, best, found, "heuristic", False, scanned)


def survey_gap_free_optima(
    n: int, k_max: int, *, max_sets: int | None = None
) -> list[SearchReport]:
    """Exhaustive minima for every size up to k_max, with gap diagnostics.

    Each report records whether some, and whether every, minimizing witness
    is gap-free in all directions, not just along the axes.
    """
    return [
        min_edge_boundary(n, k, exhaustive=True, max_sets=max_sets)
        for k in range(1, k_max + 1)
    ]
