"""Torus GIT on the deformation spaces of the two special degree-one surfaces."""

from fractions import Fraction
from itertools import product

import pytest

from dpgit.deform import def_polystability, def_space, destabilizing_1ps
from dpgit.errors import MathDomainError
from dpgit.lp import separates_strictly


def test_space_shapes():
    t = def_space("X1T")
    assert t.torus_rank == 2 and t.dimension == 3
    assert t.coordinate_names == ("v1", "v2", "v3")
    assert t.weights == ((1, -1), (-3, 6), (-3, -3))
    assert t.block("Def2") == (1,)
    e = def_space("X1e")
    assert e.torus_rank == 1 and e.dimension == 9
    assert e.weights == ((-4,), (-2,), (8,), (7,), (6,), (5,), (4,), (3,), (2,))
    assert e.block("Def1") == (0, 1)
    assert e.block("Def2") == (2, 3, 4, 5, 6, 7, 8)
    with pytest.raises(MathDomainError):
        def_space("X2")
    with pytest.raises(MathDomainError):
        e.block("Def3")


def support_weights(space, v):
    return [w for c, w in zip(v, space.weights) if c]


def test_x1t_zero_patterns():
    space = def_space("X1T")
    one = Fraction(1)
    verdicts = {}
    for pattern in product((0, one), repeat=3):
        verdicts[tuple(bool(c) for c in pattern)] = def_polystability(space, pattern)
    assert verdicts[(False, False, False)].tag == "PolystableNotStable"
    assert verdicts[(True, True, True)].tag == "Stable"
    # any vanishing coordinate destabilizes
    for pattern, verdict in verdicts.items():
        if pattern not in ((False, False, False), (True, True, True)):
            assert verdict.tag == "Unstable"
            assert verdict.certificate is not None


def test_x1t_certificates_of_the_coordinate_walls():
    space = def_space("X1T")
    # v1 = 0, v2 = 0, v3 = 0 with the other two coordinates generic
    cases = {
        (0, 1, 1): (-1, 0),
        (1, 0, 1): (0, -1),
        (1, 1, 0): (3, 2),
    }
    for pattern, expected in cases.items():
        cert = destabilizing_1ps(space, pattern)
        assert cert == expected
        assert separates_strictly(cert, support_weights(space, pattern))


def test_x1t_quoted_certificates_destabilize():
    """The three published one-parameter subgroups, checked against the weights."""
    space = def_space("X1T")
    quoted = {(0, 1, 1): (-1, 0), (1, 0, 1): (0, -1), (1, 1, 0): (3, 2)}
    for pattern, lam in quoted.items():
        support = support_weights(space, pattern)
        assert separates_strictly(lam, support)
    # and each fails on the full support, as it must
    full = support_weights(space, (1, 1, 1))
    for lam in quoted.values():
        assert not separates_strictly(lam, full)


def test_x1t_single_coordinate_patterns():
    space = def_space("X1T")
    for pattern in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        verdict = def_polystability(space, pattern)
        assert verdict.tag == "Unstable"
        assert separates_strictly(verdict.certificate, support_weights(space, pattern))


def test_x1e_stable_iff_both_blocks_present():
    space = def_space("X1e")
    for bits in product((0, 1), repeat=4):
        a1, a2, b_low, b_high = bits
        v = [a1, a2] + [b_low] + [0] * 5 + [b_high]
        a_block = bool(a1 or a2)
        b_block = bool(b_low or b_high)
        verdict = def_polystability(space, v)
        if not (a_block or b_block):
            assert verdict.tag == "PolystableNotStable"  # the origin
        elif a_block and b_block:
            assert verdict.tag == "Stable"
        else:
            assert verdict.tag == "Unstable"
            cert = destabilizing_1ps(space, v)
            assert separates_strictly(cert, support_weights(space, v))


def test_certificate_none_on_semistable_points():
    space = def_space("X1T")
    assert destabilizing_1ps(space, (1, 1, 1)) is None
    assert destabilizing_1ps(space, (0, 0, 0)) is None


def test_dimension_mismatch_rejected():
    with pytest.raises(MathDomainError):
        def_polystability(def_space("X1T"), (1, 2))
    with pytest.raises(MathDomainError):
        def_polystability(def_space("X1e"), (1,) * 8)


def test_fractional_coordinates_are_fine():
    space = def_space("X1T")
    assert def_polystability(space, (Fraction(1, 3), Fraction(-2, 7), Fraction(5))).is_stable
