"""Surface singular-locus profiling: cubics, quadric pencils, weighted double covers."""

from fractions import Fraction

import pytest

from dpgit.errors import DegenerateInputError, MathDomainError
from dpgit.polyalg import MultiPoly
from dpgit.singular import (
    QuadricPencil,
    profile_cubic,
    profile_double_cover,
    profile_pencil,
    solve_affine_system,
)

P3 = ("x0", "x1", "x2", "x3")
P4 = ("x0", "x1", "x2", "x3", "x4")


def vs(names):
    return tuple(MultiPoly.variable(names, n) for n in names)


# -- cubic surfaces -------------------------------------------------------------------


def test_fermat_cubic_is_smooth():
    x0, x1, x2, x3 = vs(P3)
    profile = profile_cubic(x0**3 + x1**3 + x2**3 + x3**3)
    assert profile.is_smooth and profile.is_normal
    assert profile.expanded_labels() == []


def test_cayley_cubic_has_four_nodes():
    x0, x1, x2, x3 = vs(P3)
    f = x0 * x1 * x2 + x0 * x1 * x3 + x0 * x2 * x3 + x1 * x2 * x3
    profile = profile_cubic(f)
    assert profile.expanded_labels() == ["A1", "A1", "A1", "A1"]
    assert profile.all_du_val()
    assert profile.all_of_labels(["A1"])
    assert not profile.all_of_labels(["A2"])


def test_three_a2_toric_cubic():
    x0, x1, x2, x3 = vs(P3)
    profile = profile_cubic(x1 * x2 * x3 - x0**3)
    assert profile.expanded_labels() == ["A2", "A2", "A2"]


def test_cubic_with_one_a2():
    x0, x1, x2, x3 = vs(P3)
    # x0^3 + x3 q(x0,x1,x2) with a cusp at [0:0:0:1]
    f = x0**3 + x3 * (x1 * x2) + x1**3 + x2**3
    profile = profile_cubic(f)
    assert "A2" in profile.expanded_labels()


def test_non_normal_cubic_detected():
    x0, x1, x2, x3 = vs(P3)
    profile = profile_cubic(x0 * x1**2)  # a double plane component
    assert not profile.is_normal
    assert profile.singular_points == ()


def test_cubic_rejects_wrong_degree():
    x0, *_ = vs(P3)
    with pytest.raises(MathDomainError):
        profile_cubic(x0**2)


# -- quadric pencils ------------------------------------------------------------------


def test_generic_diagonal_pencil_is_smooth():
    x = vs(P4)
    q1 = sum(xi**2 for xi in x)
    q2 = sum(i * xi**2 for i, xi in enumerate(x))
    profile = profile_pencil(QuadricPencil.from_quadrics(q1, q2))
    assert profile.is_smooth


def test_segre_pencil_has_four_nodes():
    x0, x1, x2, x3, x4 = vs(P4)
    pencil = QuadricPencil.from_quadrics(x0 * x1 - x2**2, x2**2 - x3 * x4)
    profile = profile_pencil(pencil)
    assert profile.expanded_labels() == ["A1", "A1", "A1", "A1"]


def test_pencil_from_matrices_matches_quadrics():
    x0, x1, x2, x3, x4 = vs(P4)
    a = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(5)) for i in range(5)
    )
    b = tuple(
        tuple(Fraction(i) if i == j else Fraction(0) for j in range(5)) for i in range(5)
    )
    p_mat = QuadricPencil.from_matrices(a, b)
    q1 = sum(xi**2 for xi in (x0, x1, x2, x3, x4))
    q2 = x1**2 + 2 * x2**2 + 3 * x3**2 + 4 * x4**2
    p_quad = QuadricPencil.from_quadrics(q1, q2)
    assert p_mat.det_form() == p_quad.det_form()


def test_degenerate_pencil_rejected():
    x0, x1, *_ = vs(P4)
    with pytest.raises(DegenerateInputError):
        profile_pencil(QuadricPencil.from_quadrics(x0 * x1, x0 * x1))


# -- double covers of weighted planes ---------------------------------------------------


def cover_profile(weights, branch):
    return profile_double_cover(weights, branch)


def test_octic_cover_of_p114():
    # branch z^2 = x^4 y^4 on P(1,1,4): two A3 points over the binodal branch
    # and two quotient points over the base's vertex pair
    v = ("x", "y", "z")
    x, y, z = vs(v)
    profile = profile_double_cover("P(1,1,4)", z**2 - x**4 * y**4)
    assert profile.expanded_labels() == ["1/4(1,1)", "1/4(1,1)", "A3", "A3"]


def test_degree18_cover_of_p129():
    v = ("x1", "x2", "x3")
    x1, x2, x3 = vs(v)
    profile = profile_double_cover("P(1,2,9)", x3**2 - x2**9)
    assert profile.expanded_labels() == ["1/9(1,2)", "1/9(1,2)", "A8"]


def test_sextic_cover_with_conjugate_points():
    # branch z^2 s + s^3 with s = x^2 + y^2: D4 points at the conjugate pair
    # x = ±i y and a quotient point over the z-vertex (the branch meets it)
    v = ("x", "y", "z")
    x, y, z = vs(v)
    s = x**2 + y**2
    profile = profile_double_cover("P(1,1,2)", z**2 * s + s**3)
    assert profile.expanded_labels() == ["1/4(1,1)", "D4", "D4"]
    conjugates = [p for p in profile.singular_points if p.type.label() == "D4"]
    assert [p.cluster_size for p in conjugates] == [2]


def test_triple_point_cover_off_the_vertex():
    # branch z (z - s)(z + s): an ordinary triple point over each of the two
    # conjugate base points with s = 0, and a sheet-interchanged smooth point
    # over the vertex (the branch does not pass through it)
    v = ("x", "y", "z")
    x, y, z = vs(v)
    s = x**2 + y**2
    profile = profile_double_cover("P(1,1,2)", z * (z - s) * (z + s))
    assert profile.expanded_labels() == ["D4", "D4"]


def test_non_reduced_branch_gives_non_normal_cover():
    v = ("x", "y", "z")
    x, y, z = vs(v)
    s = x**2 + y**2
    branch = (z - s * Fraction(1, 3)) ** 2 * (z + s * Fraction(2, 3))
    profile = profile_double_cover("P(1,1,2)", branch)
    assert not profile.is_normal


# -- the exact affine solver ------------------------------------------------------------


def test_solve_affine_system_simple_points():
    v = ("x", "y")
    x, y = vs(v)
    solutions, non_isolated = solve_affine_system([x**2 - 1, y - x], v)
    assert not non_isolated
    points = {tuple(str(c) for c in coords) for coords, _field, _size in solutions}
    assert points == {("1", "1"), ("-1", "-1")}


def test_solve_affine_system_conjugate_cluster():
    v = ("x", "y")
    x, y = vs(v)
    solutions, non_isolated = solve_affine_system([x**2 + 1, y], v)
    assert not non_isolated
    assert len(solutions) == 1
    coords, field, size = solutions[0]
    assert size == 2 and field is not None and field.degree == 2


def test_solve_affine_system_positive_dimensional():
    v = ("x", "y")
    x, y = vs(v)
    solutions, non_isolated = solve_affine_system([x * y], v)
    assert non_isolated and solutions == []


def test_solve_affine_system_no_solutions():
    v = ("x", "y")
    x, y = vs(v)
    solutions, non_isolated = solve_affine_system([x, x - MultiPoly.constant(v, 1)], v)
    assert solutions == [] and not non_isolated
