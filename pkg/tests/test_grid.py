from itertools import product

import pytest
from hypothesis import given, strategies as st

from doubledet.errors import SizeGuardError
from doubledet.grid import (GridPoint, comparable, count_comparable_pairs,
                            count_incomparable_pairs, grid_points, join,
                            lattice_isomorphic_to_ideals, leq, meet)


def comparable_pairs_bruteforce(m, n, r):
    """Oracle: unordered pairs (including a point with itself)."""
    points = grid_points(m, n, r)
    return sum(1 for a in range(len(points)) for b in range(a, len(points))
               if comparable(points[a], points[b]))


def test_point_validation():
    GridPoint(2, 1, 3, (2, 2, 3))
    for bad in [(0, 1, 1), (3, 1, 1), (1, 3, 1), (1, 1, 4)]:
        with pytest.raises(ValueError):
            GridPoint(*bad, bounds=(2, 2, 3))


def test_meet_join_examples():
    b = (2, 2, 3)
    p, q = GridPoint(2, 1, 3, b), GridPoint(1, 2, 3, b)
    assert meet(p, q).coords == (1, 1, 3)
    assert join(p, q).coords == (2, 2, 3)
    assert meet(p, p) == p and join(q, q) == q


def test_mismatched_bounds_rejected():
    p = GridPoint(1, 1, 1, (2, 2, 2))
    q = GridPoint(1, 1, 1, (2, 2, 3))
    for op in (meet, join, comparable, leq):
        with pytest.raises(ValueError):
            op(p, q)


def test_lattice_laws_exhaustive_222():
    points = grid_points(2, 2, 2)
    for p, q in product(points, repeat=2):
        assert meet(p, q) == meet(q, p)
        assert join(p, q) == join(q, p)
        # absorption
        assert meet(p, join(p, q)) == p
        assert join(p, meet(p, q)) == p
    for p, q, s in product(points, repeat=3):
        assert meet(p, join(q, s)) == join(meet(p, q), meet(p, s))
        assert join(p, meet(q, s)) == meet(join(p, q), join(p, s))


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3),
       st.data())
def test_lattice_laws_random_333(m, n, r, data):
    pick = st.tuples(st.integers(1, m), st.integers(1, n), st.integers(1, r))
    p, q, s = (GridPoint(*data.draw(pick), bounds=(m, n, r))
               for _ in range(3))
    assert meet(p, join(q, s)) == join(meet(p, q), meet(p, s))
    assert join(p, meet(q, s)) == meet(join(p, q), join(p, s))
    assert comparable(p, q) == (meet(p, q) in (p, q))


def test_comparable_examples():
    b = (2, 2, 3)
    assert comparable(GridPoint(1, 1, 1, b), GridPoint(2, 2, 2, b))
    assert not comparable(GridPoint(2, 1, 1, b), GridPoint(1, 2, 1, b))
    assert comparable(GridPoint(2, 1, 2, b), GridPoint(2, 1, 3, b))


def test_count_comparable_pairs_examples():
    assert count_comparable_pairs(2, 2, 2) == 27
    assert count_comparable_pairs(1, 1, 1) == 1
    assert count_comparable_pairs(3, 2, 4) == 180
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, -2)]:
        with pytest.raises(ValueError):
            count_comparable_pairs(*bad)


def test_count_comparable_pairs_bruteforce_up_to_4():
    for m in range(1, 5):
        for n in range(1, 5):
            for r in range(1, 5):
                assert (count_comparable_pairs(m, n, r)
                        == comparable_pairs_bruteforce(m, n, r))


def test_incomparable_pairs():
    assert count_incomparable_pairs(2, 2, 2) == 9
    assert count_incomparable_pairs(1, 1, 7) == 0


def test_lattice_isomorphic_to_ideals():
    assert lattice_isomorphic_to_ideals(1, 1, 1)
    assert lattice_isomorphic_to_ideals(2, 2, 2)
    assert lattice_isomorphic_to_ideals(3, 2, 4)
    assert lattice_isomorphic_to_ideals(4, 3, 2)
    with pytest.raises(SizeGuardError):
        lattice_isomorphic_to_ideals(30, 30, 30)
