"""Binary-quintic invariants, the P(1,2,3) moduli point, and the divisor tests."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpgit.errors import DegenerateInputError, MathDomainError
from dpgit.moduli import (
    ModuliPoint123,
    QuinticData,
    blowup_substitution,
    divisor_check_deg3,
    divisor_check_deg4,
    divisor_constant_deg4,
    p0_pair,
    pencil_to_quintic,
    quintic_invariants,
    quintic_invariants_raw,
    transvectant,
)
from dpgit.polyalg import MultiPoly
from dpgit.singular import QuadricPencil

XY = ("x", "y")
X = MultiPoly.variable(XY, "x")
Y = MultiPoly.variable(XY, "y")


def diag_pencil(eigs):
    a = tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(5)) for i in range(5))
    b = tuple(
        tuple(Fraction(eigs[i]) if i == j else Fraction(0) for j in range(5)) for i in range(5)
    )
    return QuadricPencil.from_matrices(a, b)


def random_sl2(rng):
    while True:
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if a:
            break
    b = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    d = (1 + b * c) / a
    return a, b, c, d


def act(f, m):
    a, b, c, d = m
    return f.substitute({"x": X * a + Y * b, "y": X * c + Y * d})


# -- transvectants ---------------------------------------------------------------------


def test_transvectant_basics():
    f = X**2 + X * Y
    g = Y**3 - X * Y**2
    assert transvectant(f, g, 0) == f * g
    assert transvectant(f, f, 1).is_zero()  # antisymmetric in odd order
    assert transvectant(X, Y, 1).constant_value() == 1
    assert transvectant(X**5, X**5, 4).is_zero()
    with pytest.raises(MathDomainError):
        transvectant(f, MultiPoly.variable(("u", "v"), "u"), 1)


# -- invariants of binary quintics -------------------------------------------------------


def test_invariants_frozen_values():
    assert quintic_invariants_raw(QuinticData(X**5 + Y**5)) == (-1658880000, 0, 0)
    dbl = X**2 * Y**2 * (X + Y)
    assert quintic_invariants_raw(QuinticData(dbl)) == (
        5308416,
        440301256704,
        -876488338465357824,
    )


def test_invariants_are_sl2_invariant():
    rng = random.Random(20260815)
    quintics = [
        X**5 + Y**5,
        X * Y * (X - Y) * (X + Y) * (X - 2 * Y),
        X**5 + X**2 * Y**3 - 7 * Y**5,
    ]
    for f in quintics:
        base = quintic_invariants_raw(QuinticData(f))
        for _ in range(6):
            g = act(f, random_sl2(rng))
            assert quintic_invariants_raw(QuinticData(g)) == base


def test_invariants_scale_with_weights():
    f = X * Y * (X - Y) * (X + Y) * (X - 2 * Y)
    i4, i8, i12 = quintic_invariants_raw(QuinticData(f))
    for t in (Fraction(2), Fraction(-1, 3)):
        s4, s8, s12 = quintic_invariants_raw(QuinticData(f * t))
        assert (s4, s8, s12) == (t**4 * i4, t**8 * i8, t**12 * i12)
        assert quintic_invariants(QuinticData(f * t)).same_point(
            quintic_invariants(QuinticData(f))
        )


def test_nullform_has_no_moduli_point():
    null = QuinticData(X**3 * Y**2)
    assert quintic_invariants_raw(null) == (0, 0, 0)
    with pytest.raises(DegenerateInputError):
        quintic_invariants(null)


def test_quintic_data_validation():
    with pytest.raises(MathDomainError):
        QuinticData(X**4 + Y**4)
    with pytest.raises(MathDomainError):
        QuinticData(X**5 + Y)
    with pytest.raises(DegenerateInputError):
        QuinticData(MultiPoly.zero(XY))


# -- the moduli plane P(1,2,3) ----------------------------------------------------------


def test_canonical_representatives():
    assert ModuliPoint123(2, 3, 5).canonical() == (1, Fraction(3, 4), Fraction(5, 8))
    assert ModuliPoint123(0, 8, 3).canonical() == (0, 2, Fraction(3, 8))
    assert ModuliPoint123(0, 72, 81).same_point(ModuliPoint123(0, 8, 3))
    assert ModuliPoint123(0, 0, -16).canonical() == (0, 0, 2)
    assert ModuliPoint123(0, -8, 3).canonical()[1] == -2


def test_moduli_point_validation():
    with pytest.raises(DegenerateInputError):
        ModuliPoint123(0, 0, 0)
    with pytest.raises(MathDomainError):
        ModuliPoint123(1, 1, 1).scaled(0)


@given(
    z=st.tuples(
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
    ),
    t=st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool),
)
@settings(max_examples=80)
def test_scaling_preserves_the_point(z, t):
    if not any(z):
        return
    p = ModuliPoint123(*z)
    q = p.scaled(t)
    assert p.same_point(q)
    assert q.canonical() == p.canonical()


# -- divisors ---------------------------------------------------------------------------


def test_divisor_constant_is_pinned():
    assert divisor_constant_deg4() == 64


def test_divisor_separates_pencils():
    on = quintic_invariants(pencil_to_quintic(diag_pencil((0, 0, 1, 2, 3))))
    off = quintic_invariants(pencil_to_quintic(diag_pencil((0, 1, 2, 3, 4))))
    assert divisor_check_deg4(on)
    assert not divisor_check_deg4(off)
    dbl = quintic_invariants(QuinticData(X**2 * Y**2 * (X + Y)))
    assert divisor_check_deg4(dbl)


def test_degree_three_divisor_equation():
    assert divisor_check_deg3((8, 1, 0, 0, 0))
    assert not divisor_check_deg3((0, 0, 0, 1, 0))
    assert not divisor_check_deg3((0, 1, 0, 0, 0))
    with pytest.raises(MathDomainError):
        divisor_check_deg3((1, 2, 3))
    with pytest.raises(DegenerateInputError):
        divisor_check_deg3((0, 0, 0, 0, 0))


# -- pencils to moduli points ------------------------------------------------------------


def test_pencil_determinant_form():
    q = pencil_to_quintic(diag_pencil((0, 1, 2, 3, 4)))
    l, m = (MultiPoly.variable(q.variables, v) for v in q.variables)
    assert q.form == l**5 + 10 * l**4 * m + 35 * l**3 * m**2 + 50 * l**2 * m**3 + 24 * l * m**4


def test_moduli_point_ignores_coordinate_changes():
    names = ("x0", "x1", "x2", "x3", "x4")
    x = [MultiPoly.variable(names, n) for n in names]
    q1 = sum(xi**2 for xi in x)
    q2 = x[1] ** 2 + 2 * x[2] ** 2 + 3 * x[3] ** 2 + 4 * x[4] ** 2
    base = quintic_invariants(pencil_to_quintic(QuadricPencil.from_quadrics(q1, q2)))
    # a unimodular shear of P4 leaves the determinant form unchanged
    shear = {"x0": x[0] + 2 * x[3], "x4": x[4] - x[1]}
    moved = QuadricPencil.from_quadrics(q1.substitute(shear), q2.substitute(shear))
    assert quintic_invariants(pencil_to_quintic(moved)).same_point(base)
    p_mat = pencil_to_quintic(moved)
    assert p_mat.form == pencil_to_quintic(QuadricPencil.from_quadrics(q1, q2)).form


def test_degenerate_pencil_has_no_quintic():
    z = MultiPoly.zero(("x0", "x1", "x2", "x3", "x4"))
    a = tuple(tuple(Fraction(0) for _ in range(5)) for _ in range(5))
    with pytest.raises(DegenerateInputError):
        pencil_to_quintic(QuadricPencil.from_matrices(a, a))


# -- the weighted blow-up family ----------------------------------------------------------


def test_p0_pair_frozen():
    f4, f6 = p0_pair()
    s = X**2 + Y**2
    assert f4 == s**2 * Fraction(-1, 3)
    assert f6 == s**3 * Fraction(2, 27)


def test_blowup_substitution_shape():
    s = X**2 + Y**2
    g4, g6 = X**4, Y**6
    f4, f6 = blowup_substitution(g4, g6, Fraction(2))
    assert f4 == s**2 * Fraction(-4, 3) + g4 * 8
    assert f6 == s**3 * Fraction(16, 27) + s * g4 * Fraction(-16, 3) + g6 * 32
    with pytest.raises(MathDomainError):
        blowup_substitution(g4, g6, 0)
    with pytest.raises(MathDomainError):
        blowup_substitution(X**3, g6, 1)
