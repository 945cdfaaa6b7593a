"""Dense univariate arithmetic and exact root finding over Q and Q(a)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fractions
from dpgit.errors import MathDomainError
from dpgit.factorize import (
    factor_rational,
    is_irreducible,
    number_field_from_factor,
    rational_root_clusters,
    roots_in_field,
)
from dpgit.fields import NumberField, gaussian_field
from dpgit import univar


def coeff_lists(max_degree: int = 5) -> st.SearchStrategy[list[Fraction]]:
    return st.lists(fractions(), min_size=1, max_size=max_degree + 1)


def poly_from_roots(roots) -> list[Fraction]:
    p = [Fraction(1)]
    for r in roots:
        p = univar.mul(p, [-Fraction(r), Fraction(1)])
    return p


# -- ring layer -------------------------------------------------------------------


@settings(max_examples=60)
@given(coeff_lists(), coeff_lists())
def test_divmod_invariant(a, b):
    if univar.is_zero(b):
        return
    q, r = univar.divmod_poly(a, b)
    assert univar.trim(univar.add(univar.mul(q, b), r)) == univar.trim(list(map(Fraction, a)))
    assert univar.is_zero(r) or univar.degree(r) < univar.degree(b)


def test_degree_and_order():
    assert univar.degree([0, 0, 3]) == 2
    assert univar.order([0, 0, 3]) == 2
    assert univar.order([5]) == 0
    assert univar.order([0]) is None


def test_monic_normalization():
    assert univar.monic([2, 4]) == [Fraction(1, 2), Fraction(1)]
    p = univar.monic([3, 0, 6])
    assert p[-1] == 1 and p[0] == Fraction(1, 2)


# -- factorization over Q ------------------------------------------------------------


def test_factor_rational_difference_of_squares():
    # x^2 - 1 = (x - 1)(x + 1)
    factors = factor_rational([Fraction(-1), Fraction(0), Fraction(1)])
    bases = sorted(tuple(f) for f, _ in factors)
    assert bases == [(Fraction(-1), Fraction(1)), (Fraction(1), Fraction(1))]
    assert all(mult == 1 for _, mult in factors)


def test_factor_rational_tracks_multiplicity():
    # (x - 1)^2 (x + 2)
    p = univar.mul(poly_from_roots([1, 1]), poly_from_roots([-2]))
    factors = {tuple(f): m for f, m in factor_rational(p)}
    assert factors[(Fraction(-1), Fraction(1))] == 2
    assert factors[(Fraction(2), Fraction(1))] == 1


def test_is_irreducible():
    assert is_irreducible([Fraction(1), Fraction(0), Fraction(1)])  # x^2 + 1
    assert not is_irreducible([Fraction(-1), Fraction(0), Fraction(1)])  # x^2 - 1
    assert is_irreducible([Fraction(-2), Fraction(0), Fraction(1)])  # x^2 - 2


def test_number_field_from_factor():
    field = number_field_from_factor([Fraction(1), Fraction(0), Fraction(1)])
    i = field.generator()
    assert i * i == field.element([Fraction(-1)])


def test_rational_root_clusters():
    # (x - 1)^2 (x + 2)^3
    p = univar.mul(poly_from_roots([1, 1]), poly_from_roots([-2, -2, -2]))
    clusters = {root: (size, mult) for root, field, size, mult in rational_root_clusters(p)}
    assert clusters == {Fraction(1): (1, 2), Fraction(-2): (1, 3)}


def test_rational_root_clusters_irrational_pair():
    # (x^2 - 2)(x - 1): the conjugate pair is one cluster of size two
    p = univar.mul([Fraction(-2), Fraction(0), Fraction(1)], poly_from_roots([1]))
    entries = rational_root_clusters(p)
    sizes = sorted((size, mult) for _, _, size, mult in entries)
    assert sizes == [(1, 1), (2, 1)]
    pair = next(e for e in entries if e[2] == 2)
    assert pair[1] is not None and pair[1].degree == 2


# -- roots over an extension ----------------------------------------------------------


def test_roots_of_x_squared_plus_one_over_gauss():
    field = gaussian_field()
    i = field.generator()
    roots, leftover = roots_in_field([Fraction(1), Fraction(0), Fraction(1)], field)
    assert leftover == 0
    assert sorted(roots, key=str) == sorted([i, -i], key=str)


def test_roots_of_x_squared_minus_two_over_sqrt2():
    field = NumberField("r", [Fraction(-2), Fraction(0), Fraction(1)])
    r = field.generator()
    roots, leftover = roots_in_field([Fraction(-2), Fraction(0), Fraction(1)], field)
    assert leftover == 0
    assert sorted(roots, key=str) == sorted([r, -r], key=str)


def test_roots_with_mixed_rational_and_extension_roots():
    # p = x (x + 2) (x - i) over Q(i): the norm of p is not squarefree, which
    # forces the shifted resolvent path; all three roots must come back.
    field = gaussian_field()
    i = field.generator()
    zero = field.element([0])
    # build (x)(x + 2)(x - i) = x^3 + (2 - i) x^2 - 2i x
    two_minus_i = field.element([Fraction(2), Fraction(-1)])
    minus_two_i = field.element([Fraction(0), Fraction(-2)])
    p = [zero, minus_two_i, two_minus_i, field.element([1])]
    roots, leftover = roots_in_field(p, field)
    assert leftover == 0
    assert len(roots) == 3
    expected = {str(field.element([0])), str(field.element([-2])), str(i)}
    assert {str(r) for r in roots} == expected


def test_roots_of_conjugate_pair_polynomial():
    # x^2 + 4 over Q(i): roots 2i and -2i, again via the shifted path
    field = gaussian_field()
    roots, leftover = roots_in_field([Fraction(4), Fraction(0), Fraction(1)], field)
    two_i = field.element([Fraction(0), Fraction(2)])
    assert leftover == 0
    assert {str(r) for r in roots} == {str(two_i), str(-two_i)}


def test_roots_in_field_none_means_rationals():
    roots, leftover = roots_in_field([Fraction(-4), Fraction(0), Fraction(1)], None)
    assert leftover == 0
    assert sorted(roots) == [Fraction(-2), Fraction(2)]
    _, leftover = roots_in_field([Fraction(1), Fraction(0), Fraction(1)], None)
    assert leftover == 2  # the conjugate pair lives outside Q


def test_no_roots_when_irreducible_over_base():
    field = NumberField("r", [Fraction(-2), Fraction(0), Fraction(1)])
    roots, leftover = roots_in_field([Fraction(1), Fraction(0), Fraction(1)], field)
    assert roots == [] and leftover == 2
