"""Boundary quantities for finite sets in the king-move lattice graph.

Two routes to the edge boundary are provided on purpose.
``edge_boundary_direct`` enumerates exiting edges one by one.
``edge_boundary_formula`` counts, for every step direction, the occupied
lines plus the gap starts along those lines; the two totals agree on every
finite set, and keeping both exposes that identity as a runtime check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    Direction,
    Point,
    PointSet,
    directions,
    line_sections,
    neighbors,
)


class EdgeRecord(NamedTuple):
    """A boundary edge, stored with the in-set endpoint first.

    Exactly one endpoint of a boundary edge lies in the set, so this
    orientation canonicalizes the unordered pair.
    """

    inside: Point
    outside: Point


def edge_boundary_direct(ps: PointSet) -> tuple[int, list[EdgeRecord]]:
    """All edges with exactly one endpoint in ps, by brute enumeration.

    Returns (count, records); records are sorted and each unordered edge
    appears once since only its in-set endpoint generates it.
    """
    dirs = directions(ps.dim) if ps.points else []
    edges = [
        EdgeRecord(p, q)
        for p in sorted(ps.points)
        for q in (tuple(a + s for a, s in zip(p, d)) for d in dirs)
        if q not in ps.points
    ]
    return len(edges), edges


def exterior_vertex_boundary(ps: PointSet) -> int:
    """Number of points outside ps adjacent to at least one point of ps."""
    outside: set[Point] = set()
    for p in ps.points:
        outside.update(q for q in neighbors(p) if q not in ps.points)
    return len(outside)


def closed_vertex_boundary(ps: PointSet) -> int:
    """Points at distance <= 1 from ps: the set itself plus its neighbors."""
    return exterior_vertex_boundary(ps) + len(ps)


def projection_count(ps: PointSet, d: Direction) -> int:
    """Number of distinct lines in direction d that meet ps."""
    return len(line_sections(ps, d))


def gap_set(ps: PointSet, d: Direction) -> frozenset[Point]:
    """Points x with x-d in ps, x not in ps, and x+b*d in ps for some b >= 1.

    Such an x marks, per line, the first missing point after a run that is
    followed by more of the set further along d.  All candidates lie strictly
    between a section's extremes, so only consecutive position pairs with a
    jump of at least 2 contribute.
    """
    out: set[Point] = set()
    for sec in line_sections(ps, d):
        for a, b in zip(sec.positions, sec.positions[1:]):
            if b - a >= 2:
                out.add(tuple(c + (a + 1) * s for c, s in zip(sec.base, d)))
    return frozenset(out)


@dataclass(frozen=True)
class BoundaryBreakdown:
    """Edge boundary split by step direction.

    ``per_direction`` maps every nonzero direction in {-1,0,1}^n to a pair
    (occupied-line count, gap count); ``total`` is the sum of all entries and
    equals the directly enumerated edge-boundary size.
    """

    per_direction: dict[Direction, tuple[int, int]]
    total: int

    @property
    def dim(self) -> int:
        return len(next(iter(self.per_direction)))


def edge_boundary_formula(ps: PointSet) -> BoundaryBreakdown:
    """Edge boundary as the directionwise sum of line counts and gap counts."""
    per: dict[Direction, tuple[int, int]] = {}
    total = 0
    for d in directions(ps.dim):
        sections = line_sections(ps, d)
        gaps = sum(sec.runs() - 1 for sec in sections)
        per[d] = (len(sections), gaps)
        total += len(sections) + gaps
    return BoundaryBreakdown(per, total)


def partial_edge_boundary(
    ps: PointSet,
    axis: int,
    rest: tuple[int, ...],
    offset: tuple[int, ...],
) -> int:
    """Boundary edges from one lattice line to one neighboring line.

    The in-set endpoint must lie on the line where only the 1-based
    coordinate ``axis`` varies and the remaining coordinates equal ``rest``;
    the outside endpoint lies on the parallel line at ``rest + offset``.
    Offsets range over all of {-1,0,1}^(n-1) including zero, and summing
    this count over all offsets and all lines meeting the set recovers the
    full edge boundary.
    """
    n = ps.dim
    if not 1 <= axis <= n:
        raise IndexError(f"axis {axis} out of range 1..{n}")
    if len(rest) != n - 1 or len(offset) != n - 1:
        raise ValueError(f"rest and offset must have length {n - 1}")
    if any(s not in (-1, 0, 1) for s in offset):
        raise ValueError(f"offset entries must be in -1..1, got {offset}")

    inside = {p[axis - 1] for p in ps.points if p[: axis - 1] + p[axis:] == rest}
    if not inside:
        return 0
    shifted = tuple(r + s for r, s in zip(rest, offset))
    other = {p[axis - 1] for p in ps.points if p[: axis - 1] + p[axis:] == shifted}

    if not any(offset):
        # Same line: the only unit steps are +-1 along the axis.
        return sum(
            (x + 1 not in inside) + (x - 1 not in inside) for x in inside
        )
    # Parallel line one step away: any of the three aligned targets works.
    return sum(
        (x - 1 not in other) + (x not in other) + (x + 1 not in other)
        for x in inside
    )


def line_indices(ps: PointSet, axis: int) -> list[tuple[int, ...]]:
    """The (n-1)-tuples indexing lines along ``axis`` that meet ps."""
    if not 1 <= axis <= ps.dim:
        raise IndexError(f"axis {axis} out of range 1..{ps.dim}")
    return sorted({p[: axis - 1] + p[axis:] for p in ps.points})


__all__ = [
    "EdgeRecord",
    "BoundaryBreakdown",
    "edge_boundary_direct",
    "exterior_vertex_boundary",
    "closed_vertex_boundary",
    "projection_count",
    "gap_set",
    "edge_boundary_formula",
    "partial_edge_boundary",
    "line_indices",
]
