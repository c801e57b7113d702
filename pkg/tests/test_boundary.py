import itertools

import pytest
from hypothesis import given, settings, strategies as st

from kinglattice import (
    PointSet,
    closed_vertex_boundary,
    directions,
    edge_boundary_direct,
    edge_boundary_formula,
    exterior_vertex_boundary,
    gap_set,
    line_indices,
    line_sections,
    partial_edge_boundary,
    projection_count,
    random_point_set,
)
from conftest import box
from oracle_helpers import nb_edge_boundary, nb_vertex_boundary

small_planar_sets = st.sets(
    st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=10
).map(PointSet.of)


def test_pair_in_line_anchor():
    ps = PointSet.of([(0,), (2,)])
    count, records = edge_boundary_direct(ps)
    assert count == 4
    assert gap_set(ps, (1,)) == frozenset({(1,)})
    assert gap_set(ps, (-1,)) == frozenset({(1,)})


def test_singleton_boundary_all_dimensions():
    for n in range(1, 6):
        ps = PointSet.of([(0,) * n])
        assert edge_boundary_direct(ps)[0] == 3**n - 1
        assert edge_boundary_formula(ps).total == 3**n - 1
        assert exterior_vertex_boundary(ps) == 3**n - 1


def test_empty_set_has_no_boundary():
    ps = PointSet.of([], dim=2)
    assert edge_boundary_direct(ps) == (0, [])
    assert edge_boundary_formula(ps).total == 0
    assert exterior_vertex_boundary(ps) == 0
    assert closed_vertex_boundary(ps) == 0


def test_two_by_two_box():
    assert edge_boundary_direct(box(2, 2))[0] == 20


def test_four_by_three_box_counts():
    b = box(4, 3)
    assert edge_boundary_direct(b)[0] == 38
    assert edge_boundary_formula(b).total == 38
    assert exterior_vertex_boundary(b) == 18
    assert closed_vertex_boundary(b) == 30


def test_box_closed_form_small():
    for a in range(1, 6):
        for b in range(1, 6):
            assert edge_boundary_direct(box(a, b))[0] == 6 * a + 6 * b - 4


def test_edge_records_are_boundary_edges():
    ps = PointSet.of([(0, 0), (1, 0), (5, 5)])
    count, records = edge_boundary_direct(ps)
    assert count == len(records) == len(set(records))
    for inside, outside in records:
        assert inside in ps
        assert outside not in ps
        assert max(abs(a - b) for a, b in zip(inside, outside)) == 1
    assert records == sorted(records)


def test_direct_matches_neighbor_count_oracle_on_random_sets():
    for i in range(120):
        dim = 1 + i % 3
        side = 12 if dim == 1 else 7
        ps = random_point_set(dim, 1 + i % 10, side, seed=i)
        assert edge_boundary_direct(ps)[0] == nb_edge_boundary(ps.points)
        assert exterior_vertex_boundary(ps) == nb_vertex_boundary(ps.points)


@settings(max_examples=60)
@given(small_planar_sets)
def test_formula_agrees_with_direct(ps):
    assert edge_boundary_formula(ps).total == edge_boundary_direct(ps)[0]


@settings(max_examples=40)
@given(small_planar_sets, st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
def test_boundary_is_translation_invariant(ps, offset):
    moved = ps.translate(offset)
    assert edge_boundary_direct(moved)[0] == edge_boundary_direct(ps)[0]
    assert exterior_vertex_boundary(moved) == exterior_vertex_boundary(ps)


def test_formula_agrees_on_all_subsets_of_3x3():
    cells = list(itertools.product(range(3), range(3)))
    for bits in range(1, 2**9):
        pts = [c for i, c in enumerate(cells) if bits >> i & 1]
        ps = PointSet.of(pts)
        assert edge_boundary_formula(ps).total == edge_boundary_direct(ps)[0]


def test_breakdown_entries_sum_to_total():
    ps = random_point_set(2, 9, 6, seed=5)
    b = edge_boundary_formula(ps)
    assert b.dim == 2
    assert sum(lines + gaps for lines, gaps in b.per_direction.values()) == b.total
    assert set(b.per_direction) == set(directions(2))


def test_breakdown_is_symmetric_under_direction_reversal():
    ps = random_point_set(2, 10, 6, seed=11)
    b = edge_boundary_formula(ps)
    for d, (lines, gaps) in b.per_direction.items():
        rd = tuple(-s for s in d)
        assert b.per_direction[rd] == (lines, gaps)


def test_projection_count_singleton():
    ps = PointSet.of([(3, 4)])
    assert all(projection_count(ps, d) == 1 for d in directions(2))


def test_gap_set_definition_on_random_sets():
    for i in range(40):
        ps = random_point_set(2, 1 + i % 8, 6, seed=100 + i)
        for d in directions(2):
            for x in gap_set(ps, d):
                assert x not in ps
                assert tuple(a - s for a, s in zip(x, d)) in ps
                assert any(
                    tuple(a + b * s for a, s in zip(x, d)) in ps
                    for b in range(1, 16)
                )


def test_gap_count_is_runs_minus_one_per_line():
    ps = PointSet.of([(0,), (1,), (3,), (7,)])
    assert len(gap_set(ps, (1,))) == 2
    (sec,) = line_sections(ps, (1,))
    assert sec.runs() - 1 == 2


def test_gap_symmetry_on_random_sets():
    for i in range(60):
        dim = 1 + i % 3
        side = 12 if dim == 1 else 6
        ps = random_point_set(dim, 1 + i % 9, side, seed=200 + i)
        for d in directions(dim):
            rd = tuple(-s for s in d)
            assert len(gap_set(ps, d)) == len(gap_set(ps, rd))


def test_gap_free_formula_reduces_to_projection_counts():
    b = box(3, 4)
    assert all(not gap_set(b, d) for d in directions(2))
    total = sum(projection_count(b, d) for d in directions(2))
    assert edge_boundary_formula(b).total == total


def test_partial_edge_boundary_validates_arguments():
    ps = box(2, 2)
    with pytest.raises(IndexError):
        partial_edge_boundary(ps, 3, (0,), (0,))
    with pytest.raises(ValueError):
        partial_edge_boundary(ps, 1, (0, 0), (0,))
    with pytest.raises(ValueError):
        partial_edge_boundary(ps, 1, (0,), (2,))


def test_partial_edge_boundary_zero_offset_counts_run_ends():
    ps = PointSet.of([(0, 0), (1, 0), (3, 0)])
    # one line along axis 1 with runs {0,1} and {3}: two ends each... two runs
    assert partial_edge_boundary(ps, 1, (0,), (0,)) == 4


def test_partial_edge_boundary_empty_line():
    ps = box(2, 2)
    assert partial_edge_boundary(ps, 1, (9,), (0,)) == 0


def test_partial_edge_boundary_between_adjacent_lines():
    ps = PointSet.of([(0, 0), (0, 1)])
    # from the y=0 line upward into the occupied y=1 line: only the
    # diagonal step past the end on each side exits
    assert partial_edge_boundary(ps, 1, (0,), (1,)) == 2
    # downward from y=0 into the empty y=-1 line: all three steps exit
    assert partial_edge_boundary(ps, 1, (0,), (-1,)) == 3


def test_partial_sums_recover_direct_count():
    for i in range(30):
        dim = 2 + i % 2
        ps = random_point_set(dim, 1 + i % 10, 5 if dim == 3 else 6, seed=300 + i)
        direct = edge_boundary_direct(ps)[0]
        for axis in range(1, dim + 1):
            total = sum(
                partial_edge_boundary(ps, axis, rest, offset)
                for rest in line_indices(ps, axis)
                for offset in itertools.product((-1, 0, 1), repeat=dim - 1)
            )
            assert total == direct


def test_line_indices_lists_occupied_lines():
    ps = PointSet.of([(0, 5), (3, 5), (3, 7)])
    assert line_indices(ps, 1) == [(5,), (7,)]
    assert line_indices(ps, 2) == [(0,), (3,)]
    with pytest.raises(IndexError):
        line_indices(ps, 0)
