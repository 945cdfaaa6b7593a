"""Exact convex-position predicates behind the stability verdicts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpgit.lp import (
    matrix_rank,
    separates_strictly,
    strict_separator,
    zero_in_convex_hull,
    zero_in_relative_interior,
)


def check_combination(lam, vectors):
    assert all(x >= 0 for x in lam)
    assert sum(lam) == 1
    rank = len(vectors[0])
    for i in range(rank):
        assert sum(l * Fraction(v[i]) for l, v in zip(lam, vectors)) == 0


def test_hull_membership_frozen_cases():
    lam = zero_in_convex_hull([(1,), (-1,)])
    check_combination(lam, [(1,), (-1,)])
    assert zero_in_convex_hull([(1,), (2,)]) is None
    assert zero_in_convex_hull([(0, 0)]) == [1]
    square = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    check_combination(zero_in_convex_hull(square), square)
    shifted = [(1, 1), (1, 2), (2, 1)]
    assert zero_in_convex_hull(shifted) is None


def test_relative_interior_frozen_cases():
    assert zero_in_relative_interior([(-1,), (1,)])
    assert zero_in_relative_interior([(-1,), (0,), (1,)])
    assert not zero_in_relative_interior([(0,), (1,)])  # 0 is a vertex
    assert not zero_in_relative_interior([(1,), (2,)])
    assert zero_in_relative_interior([(0, 0)])
    # 0 on an edge of a triangle: in the hull but not its relative interior
    assert zero_in_convex_hull([(1, 1), (-1, -1), (1, 0)]) is not None
    assert not zero_in_relative_interior([(1, 1), (-1, -1), (1, 0)])
    # 0 inside a segment: relatively interior although the hull is 1-dimensional
    assert zero_in_relative_interior([(1, 1), (-1, -1)])


def test_matrix_rank():
    assert matrix_rank([(1, 0), (0, 1)]) == 2
    assert matrix_rank([(1, 2), (2, 4)]) == 1
    assert matrix_rank([(0, 0), (0, 0)]) == 0
    assert matrix_rank([(1, 2, 3)]) == 1
    assert matrix_rank([(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1)]) == 3


def test_separator_is_machine_checkable():
    for vectors in (
        [(1,), (2,)],
        [(2, 1), (1, 2)],
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)],
        [(5, -1), (3, 1), (4, 7)],
    ):
        cert = strict_separator(vectors)
        assert all(isinstance(c, int) for c in cert)
        assert separates_strictly(cert, vectors)


def test_separator_requires_zero_outside_hull():
    with pytest.raises(ValueError):
        strict_separator([(1,), (-1,)])
    assert not separates_strictly((1,), [(1,), (-1,)])


def test_lp_fallback_beyond_the_small_box():
    # needs a functional with a coordinate ratio above the default box bound
    vectors = [(1, 0), (-13, 1)]
    cert = strict_separator(vectors)
    assert separates_strictly(cert, vectors)


@given(st.lists(st.integers(min_value=-7, max_value=7), min_size=1, max_size=7))
@settings(max_examples=120)
def test_rank_one_against_interval_oracle(points):
    vectors = [(x,) for x in points]
    in_hull = min(points) <= 0 <= max(points)
    interior = (min(points) < 0 < max(points)) or all(x == 0 for x in points)
    lam = zero_in_convex_hull(vectors)
    assert (lam is not None) == in_hull
    if lam is not None:
        check_combination(lam, vectors)
    assert zero_in_relative_interior(vectors) == interior
    if not in_hull:
        assert separates_strictly(strict_separator(vectors), vectors)


@given(
    st.lists(
        st.tuples(
            st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4)
        ),
        min_size=1,
        max_size=6,
    )
)
@settings(max_examples=120, deadline=None)
def test_rank_two_predicates_are_consistent(vectors):
    lam = zero_in_convex_hull(vectors)
    interior = zero_in_relative_interior(vectors)
    if lam is None:
        assert not interior
        assert separates_strictly(strict_separator(vectors), vectors)
    else:
        check_combination(lam, vectors)
        with pytest.raises(ValueError):
            strict_separator(vectors)
    if interior:
        assert lam is not None
