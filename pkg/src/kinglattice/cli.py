"""Command-line surface: set files, report serialization, rendering.

This is the only module that touches stdin, stdout, or the filesystem.
Everything here is deterministic given identical inputs, flags, and seeds.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation (the two edge-boundary computations disagreeing, or a compression
step failing to lower the termination potential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, NoReturn, Sequence

from .core import PointSet, directions, neighbors
from .boundary import (
    BoundaryBreakdown,
    edge_boundary_direct,
    edge_boundary_formula,
    gap_set,
)
from .compression import CompressionTrace, compress_to_fixed_point
from .search import (
    EnumerationOverflowError,
    MAX_SETS_ENV,
    SearchReport,
    WitnessStats,
    min_edge_boundary,
    random_point_set,
    survey_gap_free_optima,
)

SCHEMA = "kinglattice.report/1"


class ParseError(ValueError):
    """Malformed set file or report document."""


def parse_point_set(text: str | bytes) -> PointSet:
    """Read a set file: one point per line, integers separated by commas or
    whitespace.

    ``#`` starts a comment, blank lines are skipped, and an optional first
    content line ``dim N`` declares the dimension (required when the set is
    empty, inferred from the first point otherwise).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    dim: int | None = None
    seen_point = False
    points: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.replace(",", " ").split()
        if tokens[0] == "dim":
            if seen_point or dim is not None:
                raise ParseError(f"line {lineno}: dim header must come first")
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'dim N'")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad dimension {tokens[1]!r}") from None
            if dim < 1:
                raise ParseError(f"line {lineno}: dimension must be >= 1")
            continue
        try:
            p = tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        if dim is None:
            dim = len(p)
        elif len(p) != dim:
            raise ParseError(
                f"line {lineno}: point has {len(p)} coordinates, expected {dim}"
            )
        if p in points:
            raise ParseError(f"line {lineno}: duplicate point {p}")
        points.add(p)
        seen_point = True
    if dim is None:
        raise ParseError("empty input: need at least one point or a dim header")
    return PointSet(dim, frozenset(points))


def serialize_point_set(ps: PointSet) -> str:
    """Set-file text for ps; parse_point_set inverts this exactly."""
    lines = [f"dim {ps.dim}"]
    lines.extend(" ".join(str(c) for c in p) for p in ps)
    return "\n".join(lines) + "\n"


def _points_json(ps: PointSet) -> list[list[int]]:
    return [list(p) for p in ps]


def _breakdown_dict(b: BoundaryBreakdown, direct_total: int | None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "boundary_breakdown",
        "dim": b.dim,
        "per_direction": [
            {"direction": list(d), "lines": lines, "gaps": gaps}
            for d, (lines, gaps) in sorted(b.per_direction.items())
        ],
        "total": b.total,
    }
    if direct_total is not None:
        doc["direct_total"] = direct_total
        doc["agree"] = direct_total == b.total
    return doc


def _search_dict(r: SearchReport) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "search_report",
        "dimension": r.dimension,
        "size": r.size,
        "min_edge_boundary": r.min_edge_boundary,
        "method": r.method,
        "optimal": r.optimal,
        "sets_scanned": r.sets_scanned,
        "any_witness_gap_free": r.any_witness_gap_free,
        "all_witnesses_gap_free": r.all_witnesses_gap_free,
        "witnesses": [
            {
                "points": _points_json(w),
                "exterior_vertex_boundary": s.exterior_vertex_boundary,
                "fully_gap_free": s.fully_gap_free,
            }
            for w, s in zip(r.witnesses, r.witness_stats)
        ],
    }


def serialize_report(
    r: SearchReport | BoundaryBreakdown | list[SearchReport],
    *,
    direct_total: int | None = None,
) -> str:
    """JSON text for a report, with a fixed key order and a schema tag.

    A boundary breakdown may carry the directly enumerated total alongside
    the formula total so any disagreement is visible in the output itself.
    A list of search reports becomes a survey document.
    """
    if isinstance(r, BoundaryBreakdown):
        doc = _breakdown_dict(r, direct_total)
    elif isinstance(r, SearchReport):
        doc = _search_dict(r)
    elif isinstance(r, list):
        doc = {
            "schema": SCHEMA,
            "kind": "survey",
            "rows": [_search_dict(x) for x in r],
        }
    else:
        raise TypeError(f"cannot serialize {type(r).__name__}")
    return json.dumps(doc, indent=2) + "\n"


def _parse_search_dict(doc: dict[str, Any]) -> SearchReport:
    dim = doc["dimension"]
    witnesses = tuple(
        PointSet(dim, frozenset(tuple(p) for p in w["points"]))
        for w in doc["witnesses"]
    )
    stats = tuple(
        WitnessStats(w["exterior_vertex_boundary"], w["fully_gap_free"])
        for w in doc["witnesses"]
    )
    return SearchReport(
        dimension=dim,
        size=doc["size"],
        min_edge_boundary=doc["min_edge_boundary"],
        witnesses=witnesses,
        witness_stats=stats,
        method=doc["method"],
        optimal=doc["optimal"],
        sets_scanned=doc["sets_scanned"],
    )


def parse_report(text: str) -> SearchReport | BoundaryBreakdown | list[SearchReport]:
    """Inverse of serialize_report."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad report JSON: {e}") from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ParseError(f"missing or unknown schema tag, expected {SCHEMA!r}")
    kind = doc.get("kind")
    if kind == "boundary_breakdown":
        per = {
            tuple(e["direction"]): (e["lines"], e["gaps"])
            for e in doc["per_direction"]
        }
        return BoundaryBreakdown(per, doc["total"])
    if kind == "search_report":
        return _parse_search_dict(doc)
    if kind == "survey":
        return [_parse_search_dict(row) for row in doc["rows"]]
    raise ParseError(f"unknown report kind {kind!r}")


def render_grid(ps: PointSet, mode: str = "ascii", max_extent: int = 100) -> str:
    """Draw a planar set with its exterior vertex neighbors.

    ASCII mode marks set points with a filled dot, exterior neighbors with a
    ring, and everything else with a middle dot, rows printed with y
    increasing upward.  SVG mode gives the same picture as a standalone
    document, set points blue and neighbors red.
    """
    if ps.dim != 2:
        raise ValueError(f"can only render dimension 2, got {ps.dim}")
    if not ps.points:
        raise ValueError("cannot render an empty set")
    outside: set[tuple[int, ...]] = set()
    for p in ps.points:
        outside.update(q for q in neighbors(p) if q not in ps.points)
    everything = ps.points | outside
    xs = [p[0] for p in everything]
    ys = [p[1] for p in everything]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 + 1 > max_extent or y1 - y0 + 1 > max_extent:
        raise ValueError(
            f"bounding box {x1 - x0 + 1}x{y1 - y0 + 1} exceeds limit {max_extent}"
        )
    if mode == "ascii":
        rows = []
        for y in range(y1, y0 - 1, -1):
            row = []
            for x in range(x0, x1 + 1):
                if (x, y) in ps.points:
                    row.append("●")
                elif (x, y) in outside:
                    row.append("○")
                else:
                    row.append("·")
            rows.append("".join(row))
        return "\n".join(rows) + "\n"
    if mode == "svg":
        cell, radius, margin = 24, 9, 24
        width = (x1 - x0) * cell + 2 * margin
        height = (y1 - y0) * cell + 2 * margin
        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">',
        ]
        for q in sorted(everything):
            cx = margin + (q[0] - x0) * cell
            cy = margin + (y1 - q[1]) * cell  # svg y grows downward
            color = "#1f77b4" if q in ps.points else "#d62728"
            parts.append(f'  <circle cx="{cx}" cy="{cy}" r="{radius}" fill="{color}"/>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"
    raise ValueError(f"unknown render mode {mode!r}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_set(args: argparse.Namespace) -> PointSet:
    return parse_point_set(_read_input(args.input))


def _cmd_boundary(args: argparse.Namespace) -> int:
    ps = _load_set(args)
    breakdown = edge_boundary_formula(ps)
    direct, _ = edge_boundary_direct(ps)
    if args.format == "json":
        sys.stdout.write(serialize_report(breakdown, direct_total=direct))
    else:
        print(f"dim {ps.dim}  points {len(ps)}")
        print("direction  lines  gaps")
        for d, (lines, gaps) in sorted(breakdown.per_direction.items()):
            label = "(" + ",".join(f"{s:+d}" for s in d) + ")"
            print(f"{label:<24} {lines:5d} {gaps:5d}")
        print(f"formula total {breakdown.total}")
        print(f"direct total  {direct}")
        print(f"agreement     {'ok' if direct == breakdown.total else 'MISMATCH'}")
    if direct != breakdown.total:
        print(
            f"invariant violation: direct {direct} != formula {breakdown.total}",
            file=sys.stderr,
        )
        return 2
    return 0


def _trace_dict(ps: PointSet, trace: CompressionTrace) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "compression_trace",
        "dim": ps.dim,
        "initial_points": _points_json(ps),
        "steps": [
            {
                "axis": s.axis,
                "boundary_before": s.boundary_before,
                "boundary_after": s.boundary_after,
                "potential_before": list(s.potential_before),
                "potential_after": list(s.potential_after),
            }
            for s in trace.steps
        ],
        "final_points": _points_json(trace.final),
    }


def _cmd_compress(args: argparse.Namespace) -> int:
    ps = _load_set(args)
    trace = compress_to_fixed_point(ps)
    if args.format == "json":
        sys.stdout.write(json.dumps(_trace_dict(ps, trace), indent=2) + "\n")
        return 0
    for s in trace.steps:
        print(
            f"axis {s.axis}: boundary {s.boundary_before} -> {s.boundary_after}, "
            f"potential {s.potential_before} -> {s.potential_after}"
        )
    print(f"{len(trace.steps)} changing steps")
    sys.stdout.write(serialize_point_set(trace.final))
    return 0


def _plain_search(r: SearchReport) -> str:
    lines = [
        f"dim {r.dimension}  size {r.size}  min edge boundary {r.min_edge_boundary}",
        f"method {r.method}  optimal {'yes' if r.optimal else 'no'}  "
        f"sets scanned {r.sets_scanned}",
    ]
    for w, s in zip(r.witnesses, r.witness_stats):
        pts = " ".join("(" + ",".join(map(str, p)) + ")" for p in w)
        lines.append(
            f"witness evb={s.exterior_vertex_boundary} "
            f"gap_free={'yes' if s.fully_gap_free else 'no'}: {pts}"
        )
    return "\n".join(lines) + "\n"


def _cmd_search(args: argparse.Namespace) -> int:
    report = min_edge_boundary(
        args.dim,
        args.size,
        exhaustive=args.exhaustive,
        seed=args.seed,
        max_sets=args.max_sets,
    )
    if args.format == "json":
        sys.stdout.write(serialize_report(report))
    else:
        sys.stdout.write(_plain_search(report))
    return 0


def _cmd_survey(args: argparse.Namespace) -> int:
    reports = survey_gap_free_optima(args.dim, args.size, max_sets=args.max_sets)
    if args.format == "json":
        sys.stdout.write(serialize_report(reports))
        return 0
    print("size  min  witnesses  some_gap_free  all_gap_free")
    for r in reports:
        print(
            f"{r.size:4d} {r.min_edge_boundary:4d} {len(r.witnesses):10d}"
            f"  {'yes' if r.any_witness_gap_free else 'no':13s}"
            f"  {'yes' if r.all_witnesses_gap_free else 'no'}"
        )
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    ps = _load_set(args)
    sys.stdout.write(render_grid(ps, mode=args.render, max_extent=args.max_extent))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    """Check the two boundary computations against each other on random sets.

    Also checks gap symmetry under direction reversal on every set.  Any
    mismatch is an internal invariant violation.
    """
    failures = 0
    for trial in range(args.sets):
        dim = 1 + trial % 3
        k = 1 + trial % 12
        side = 14 if dim == 1 else 10
        ps = random_point_set(dim, k, side, seed=args.seed + trial)
        direct, _ = edge_boundary_direct(ps)
        total = edge_boundary_formula(ps).total
        if direct != total:
            failures += 1
            print(
                f"MISMATCH dim={dim} k={k} trial={trial}: "
                f"direct={direct} formula={total}",
                file=sys.stderr,
            )
        for d in directions(dim):
            reverse = tuple(-s for s in d)
            if len(gap_set(ps, d)) != len(gap_set(ps, reverse)):
                failures += 1
                print(
                    f"GAP ASYMMETRY dim={dim} k={k} trial={trial} d={d}",
                    file=sys.stderr,
                )
    print(f"{args.sets} random sets checked, {failures} failures")
    return 0 if failures == 0 else 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 is reserved for
    # invariant violations, so remap usage errors to 1.
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _seed(value: str) -> int:
    n = int(value)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return n


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="kinglattice",
        description="Edge boundaries, compression, and minimal-boundary "
        "search for finite sets in the king-move lattice graph on Z^n.",
        epilog=f"The {MAX_SETS_ENV} environment variable sets the default "
        "cap on enumerated compressed sets (built-in default 1000000).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--input",
            default="-",
            metavar="PATH|-",
            help="set file to read, or - for stdin (default)",
        )

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("json", "plain"),
            default="plain",
            help="output format (default plain)",
        )

    p = sub.add_parser("boundary", help="edge-boundary breakdown and agreement check")
    add_input(p)
    add_format(p)
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("compress", help="compress a set to its fixed point")
    add_input(p)
    add_format(p)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("search", help="minimal edge boundary for a dimension and size")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--size", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=_seed, default=0, metavar="U64")
    g = p.add_mutually_exclusive_group()
    g.add_argument(
        "--exhaustive",
        dest="exhaustive",
        action="store_true",
        default=True,
        help="scan every compressed set (default)",
    )
    g.add_argument(
        "--heuristic",
        dest="exhaustive",
        action="store_false",
        help="seeded random restarts; upper bound only",
    )
    p.add_argument("--max-sets", type=int, default=None, metavar="CAP")
    add_format(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("survey", help="gap-free status of optima for sizes 1..K")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--size", type=int, required=True, metavar="K")
    p.add_argument("--max-sets", type=int, default=None, metavar="CAP")
    add_format(p)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("render", help="draw a planar set and its neighbors")
    add_input(p)
    p.add_argument(
        "--render",
        choices=("ascii", "svg"),
        default="ascii",
        help="output style (default ascii)",
    )
    p.add_argument("--max-extent", type=int, default=100, metavar="N")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("selftest", help="cross-check boundary computations on random sets")
    p.add_argument("--seed", type=_seed, default=0, metavar="U64")
    p.add_argument("--sets", type=int, default=200, metavar="N")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except (ParseError, EnumerationOverflowError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except RuntimeError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
