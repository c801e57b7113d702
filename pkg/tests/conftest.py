import itertools

import pytest

from kinglattice import PointSet, random_point_set


def box(*extents: int) -> PointSet:
    """Axis-aligned box [0, a) x [0, b) x ..."""
    return PointSet.of(itertools.product(*(range(e) for e in extents)))


@pytest.fixture(scope="session")
def suite_sets() -> list[PointSet]:
    """Seeded random sets in dims 1 to 3 shared by the property suites."""
    out = []
    for i in range(300):
        dim = 1 + i % 3
        k = 1 + i % 12
        side = 14 if dim == 1 else 8
        out.append(random_point_set(dim, k, side, seed=1000 + i))
    return out
