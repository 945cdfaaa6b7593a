"""Plane-curve germ classification and the induced double-cover singularity types."""

import random
from fractions import Fraction

import pytest

from dpgit.errors import DegenerateInputError, MathDomainError
from dpgit.germ import (
    DEFAULT_TRUNCATION,
    MAX_TRUNCATION,
    CurveGerm,
    SingularityType,
    classify_curve_germ,
    classify_surface_germ,
    default_truncation,
    double_cover_type,
    quotient_singularity_test,
    set_default_truncation,
    vertex_quotient_type,
)
from dpgit.polyalg import MultiPoly

XY = ("x", "y")
X = MultiPoly.variable(XY, "x")
Y = MultiPoly.variable(XY, "y")


def normal_forms() -> dict[str, MultiPoly]:
    table = {}
    for k in range(1, 11):
        table[f"A{k}"] = X ** (k + 1) + Y**2
    for k in range(4, 7):
        table[f"D{k}"] = X ** (k - 1) + X * Y**2
    table["E6"] = X**3 + Y**4
    table["E7"] = X**3 + X * Y**3
    table["E8"] = X**3 + Y**5
    return table


def random_gl2(rng: random.Random) -> dict[str, MultiPoly]:
    while True:
        a, b, c, d = (Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4))
        if a * d - b * c:
            return {"x": X * a + Y * b, "y": X * c + Y * d}


# -- the ADE table ------------------------------------------------------------------


def test_normal_form_table_classifies_exactly():
    for label, f in normal_forms().items():
        assert classify_curve_germ(f).label() == label


def test_double_cover_preserves_letter_and_index():
    for label, f in normal_forms().items():
        assert double_cover_type(f).label() == label


def test_classification_is_coordinate_invariant():
    rng = random.Random(20260815)
    for label, f in normal_forms().items():
        for _ in range(4):
            g = f.substitute(random_gl2(rng))
            assert classify_curve_germ(g).label() == label


def test_unit_rescaling_is_harmless():
    f = (X**3 + Y**2) * Fraction(-7, 3)
    assert classify_curve_germ(f).label() == "A2"


def test_swapped_variables():
    assert classify_curve_germ(Y**3 + X**2).label() == "A2"
    assert classify_curve_germ(Y ** 4 + Y * X**2).label() == "D5"


# -- rejection of non-germ input ------------------------------------------------------


def test_zero_polynomial_is_rejected():
    with pytest.raises(DegenerateInputError):
        classify_curve_germ(MultiPoly.zero(XY))


def test_unit_germ_is_rejected():
    with pytest.raises(MathDomainError):
        classify_curve_germ(X + MultiPoly.constant(XY, 1))


def test_smooth_germ_reports_smooth():
    assert classify_curve_germ(X + Y**2).kind == "Smooth"
    assert double_cover_type(X + Y**2).kind == "Smooth"


def test_non_reduced_branch_marks_non_normal_cover():
    # a repeated branch factor means the double cover is not normal
    assert classify_curve_germ(X**2 * (X + Y) ** 2).kind == "NonNormal"


def test_wrong_variable_count():
    v3 = ("x", "y", "z")
    with pytest.raises(MathDomainError):
        classify_curve_germ(MultiPoly.variable(v3, "x") * MultiPoly.variable(v3, "y"))


# -- truncation control ---------------------------------------------------------------


def test_default_truncation_override_round_trip():
    assert default_truncation() == DEFAULT_TRUNCATION
    set_default_truncation(48)
    try:
        assert default_truncation() == 48
        assert CurveGerm(X**2 + Y**3).truncation_order == 48
    finally:
        set_default_truncation(None)
    assert default_truncation() == DEFAULT_TRUNCATION


def test_truncation_bounds_are_enforced():
    with pytest.raises(MathDomainError):
        set_default_truncation(0)
    with pytest.raises(MathDomainError):
        set_default_truncation(MAX_TRUNCATION + 1)


def test_low_starting_truncation_still_classifies():
    # the classifier escalates the working order internally when needed
    assert classify_curve_germ(X**11 + Y**2, truncation=3).label() == "A10"


# -- quotient tests and vertex points ---------------------------------------------------


def test_quotient_singularity_test_degree_bound():
    assert quotient_singularity_test(X * Y)
    assert quotient_singularity_test(X**3 + Y**4)
    assert not quotient_singularity_test(X**4 + Y**4)


def test_vertex_quotient_types():
    assert vertex_quotient_type(MultiPoly.constant(XY, 1) + X) is None  # off the branch
    assert vertex_quotient_type(X + Y**2).label() == "A1"
    assert vertex_quotient_type(X * Y).label() == "1/4(1,1)"  # A1 branch germ
    assert vertex_quotient_type(X**2 - Y**4).label() == "1/8(1,3)"  # A3 branch germ


def test_surface_germ_from_cover_equation():
    v3 = ("x", "y", "w")
    x, y, w = (MultiPoly.variable(v3, n) for n in v3)
    assert classify_surface_germ(w**2 - x**2 - y**2).label() == "A1"
    assert classify_surface_germ(w**2 - x**3 - y**5).label() == "E8"


# -- singularity type values -----------------------------------------------------------


def test_singularity_type_labels_and_predicates():
    a3 = SingularityType.A(3)
    assert a3.label() == "A3" and a3.is_du_val()
    q = SingularityType.cyclic_quotient(4, 1)
    assert q.label() == "1/4(1,1)" and not q.is_du_val()
    assert SingularityType.A(3) == a3
    assert SingularityType.cyclic_quotient(4, 3) == a3  # 1/4(1,3) is Du Val A3
    assert SingularityType.cyclic_quotient(9, 5) == SingularityType.cyclic_quotient(9, 2)
    assert SingularityType.D(5).group_order() == 12
    assert SingularityType.E(8).group_order() == 120
