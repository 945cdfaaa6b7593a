"""Moduli coordinates for degenerations: binary-quintic invariants and divisors.

A quartic del Pezzo surface is a pencil of quadrics in P4; its moduli point is
the class of the binary quintic det(lambda*A + mu*B) up to GL(2).  The ring of
invariants of binary quintics is generated in degrees 4, 8, 12 (and 18, whose
square is a polynomial in the others), so the moduli space is the weighted
projective plane P(1,2,3) with coordinates (z1, z2, z3) = (I4, I8, I12).

The invariants are computed by transvectants without classical factorial
prefactors; the constant in the degree-4 discriminant divisor under this
normalization is calibrated once and pinned in data/invariant_constants.json.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path

from .errors import DegenerateInputError, MathDomainError
from .polyalg import MultiPoly
from .singular import QuadricPencil

_DATA = Path(__file__).parent / "data" / "invariant_constants.json"


@lru_cache(maxsize=1)
def invariant_constants() -> dict:
    with open(_DATA, "r", encoding="utf-8") as fh:
        return json.load(fh)


def divisor_constant_deg4() -> Fraction:
    """The pinned constant kappa with z1^2 = kappa*z2 cutting the divisor."""
    return Fraction(invariant_constants()["kappa_deg4"])


@dataclass(frozen=True)
class QuinticData:
    """A nonzero binary quintic form over the rationals."""

    form: MultiPoly

    def __post_init__(self):
        f = self.form
        if len(f.variables) != 2:
            raise MathDomainError("binary quintic needs exactly two variables")
        if f.is_zero():
            raise DegenerateInputError("degenerate pencil")
        if not f.is_homogeneous() or f.total_degree() != 5:
            raise MathDomainError("form must be homogeneous of degree 5")

    @property
    def variables(self) -> tuple[str, str]:
        return self.form.variables


def pencil_to_quintic(P: QuadricPencil) -> QuinticData:
    """det(lambda*A + mu*B) as a binary quintic; exact expansion."""
    form = P.det_form()
    if form.is_zero():
        raise DegenerateInputError("degenerate pencil")
    return QuinticData(form)


def transvectant(f: MultiPoly, g: MultiPoly, r: int) -> MultiPoly:
    """r-th transvectant of two binary forms, without factorial prefactors:

        (f, g)_r = sum_i (-1)^i C(r, i) d^r f/dx^{r-i} dy^i * d^r g/dx^i dy^{r-i}
    """
    if f.variables != g.variables or len(f.variables) != 2:
        raise MathDomainError("transvectant needs two binary forms in shared variables")
    x_var, y_var = f.variables
    acc = MultiPoly.zero(f.variables)
    for i in range(r + 1):
        df = f
        for _ in range(r - i):
            df = df.derivative(x_var)
        for _ in range(i):
            df = df.derivative(y_var)
        dg = g
        for _ in range(i):
            dg = dg.derivative(x_var)
        for _ in range(r - i):
            dg = dg.derivative(y_var)
        term = df * dg * Fraction(comb(r, i))
        acc = acc + (-term if i % 2 else term)
    return acc


def quintic_invariants_raw(q: QuinticData) -> tuple[Fraction, Fraction, Fraction]:
    """(I4, I8, I12): the generating invariants, in coefficient degrees 4, 8, 12.

    Built from the classical covariant chain: the quadratic covariant
    i = (f,f)_4, the cubic j = (f,i)_2, and tau = (j,j)_2; then
    I4 = (i,i)_2, I8 = (i,tau)_2, I12 = (tau,tau)_2.
    """
    f = q.form
    i_cov = transvectant(f, f, 4)
    j_cov = transvectant(f, i_cov, 2)
    tau = transvectant(j_cov, j_cov, 2)
    i4 = transvectant(i_cov, i_cov, 2).constant_value()
    i8 = transvectant(i_cov, tau, 2).constant_value()
    i12 = transvectant(tau, tau, 2).constant_value()
    return (Fraction(i4), Fraction(i8), Fraction(i12))


def _squarefree_core(n: int) -> int:
    """Largest squarefree divisor d of n>0 with n/d a perfect square."""
    from sympy.ntheory.factor_ import core

    return int(core(int(n), 2))


def _cubefree_core(n: int) -> int:
    from sympy.ntheory.factor_ import core

    return int(core(int(n), 3))


def _is_rational_square(r: Fraction) -> Fraction | None:
    """sqrt(r) if r is a square of a rational, else None (r > 0 assumed)."""
    from math import isqrt

    p, q = r.numerator, r.denominator
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def _rational_cuberoot(r: Fraction) -> Fraction | None:
    def icbrt(n: int) -> int:
        if n < 0:
            return -icbrt(-n)
        c = round(n ** (1 / 3)) if n < 2**40 else int(n ** (1 / 3))
        while c**3 > n:
            c -= 1
        while (c + 1) ** 3 <= n:
            c += 1
        return c

    p, q = r.numerator, r.denominator
    cp, cq = icbrt(p), icbrt(q)
    if cp**3 == p and cq**3 == q:
        return Fraction(cp, cq)
    return None


@dataclass(frozen=True)
class ModuliPoint123:
    """A point of the weighted projective plane P(1,2,3) over Q.

    Coordinates are identified under (z1, z2, z3) ~ (t*z1, t^2*z2, t^3*z3)
    for t in Q*.  ``canonical()`` picks a deterministic representative:
    first coordinate scaled to 1 when nonzero; otherwise the square part
    (resp. cube part) of the leading nonzero coordinate is cleared.
    """

    z1: Fraction
    z2: Fraction
    z3: Fraction

    def __post_init__(self):
        object.__setattr__(self, "z1", Fraction(self.z1))
        object.__setattr__(self, "z2", Fraction(self.z2))
        object.__setattr__(self, "z3", Fraction(self.z3))
        if not (self.z1 or self.z2 or self.z3):
            raise DegenerateInputError("all weighted coordinates vanish")

    def scaled(self, t: Fraction) -> "ModuliPoint123":
        t = Fraction(t)
        if not t:
            raise MathDomainError("scaling by zero")
        return ModuliPoint123(t * self.z1, t * t * self.z2, t**3 * self.z3)

    def canonical(self) -> tuple[Fraction, Fraction, Fraction]:
        z1, z2, z3 = self.z1, self.z2, self.z3
        if z1:
            t = 1 / z1
            return (Fraction(1), t * t * z2, t**3 * z3)
        if z2:
            # clear the square part of z2 with t > 0, then fix sign(z3) >= 0
            n = (z2.numerator * z2.denominator)
            core = _squarefree_core(abs(n))
            t = _is_rational_square(Fraction(core) / abs(z2))
            assert t is not None  # |z2|/core is a square by construction
            w3 = t**3 * z3
            return (Fraction(0), (1 if z2 > 0 else -1) * Fraction(core), abs(w3))
        n = z3.numerator * z3.denominator
        core = _cubefree_core(abs(n))
        return (Fraction(0), Fraction(0), Fraction(core))

    def same_point(self, other: "ModuliPoint123") -> bool:
        return self.canonical() == other.canonical()


def quintic_invariants(q: QuinticData) -> ModuliPoint123:
    """The moduli point (I4, I8, I12) in P(1,2,3).

    A quintic with a root of multiplicity >= 3 is a nullform: every invariant
    vanishes and the point is undefined (DegenerateInputError).
    """
    i4, i8, i12 = quintic_invariants_raw(q)
    if not (i4 or i8 or i12):
        raise DegenerateInputError("unstable quintic: all invariants vanish")
    return ModuliPoint123(i4, i8, i12)


def divisor_check_deg4(m: ModuliPoint123) -> bool:
    """Whether the point lies on the discriminant divisor z1^2 = kappa*z2."""
    kappa = divisor_constant_deg4()
    return m.z1 * m.z1 - kappa * m.z2 == 0


def divisor_check_deg3(z) -> bool:
    """(z1^2 - 64 z2)^2 - 2^11 (8 z4 + z1 z3) = 0 on weight-(1,2,3,4,5) vectors."""
    zs = [Fraction(c) for c in z]
    if len(zs) != 5:
        raise MathDomainError("expected a weight-(1,2,3,4,5) vector of length 5")
    if not any(zs):
        raise DegenerateInputError("all weighted coordinates vanish")
    z1, z2, z3, z4, _z5 = zs
    return (z1 * z1 - 64 * z2) ** 2 - 2**11 * (8 * z4 + z1 * z3) == 0


_XYZ = ("x", "y", "z")


def _check_binary(g: MultiPoly, degree: int, what: str) -> MultiPoly:
    if len(g.variables) != 2:
        raise MathDomainError(f"{what} must be a binary form")
    if not g.is_zero() and (not g.is_homogeneous() or g.total_degree() != degree):
        raise MathDomainError(f"{what} must be homogeneous of degree {degree} or zero")
    return g


def blowup_substitution(
    g4: MultiPoly, g6: MultiPoly, t: Fraction
) -> tuple[MultiPoly, MultiPoly]:
    """The weighted blow-up family through p0:

        f4 = -(t^2/3)(x^2+y^2)^2 + t^3 g4
        f6 = (2 t^3/27)(x^2+y^2)^3 - (t^4/3)(x^2+y^2) g4 + t^5 g6

    verified against its defining identity: substituting x' = t x, y' = t y,
    z' = z - (t/3)(x^2+y^2) into  t z'^3 + z'^2 (x'^2+y'^2) + z' g4(x',y')
    + g6(x',y')  gives exactly  t (z^3 + f4 z + f6).
    """
    t = Fraction(t)
    if not t:
        raise MathDomainError("blow-up parameter t must be nonzero")
    _check_binary(g4, 4, "g4")
    _check_binary(g6, 6, "g6")
    if g4.variables != g6.variables:
        raise MathDomainError("g4 and g6 must share variables")
    xv, yv = g4.variables
    x = MultiPoly.variable(g4.variables, xv)
    y = MultiPoly.variable(g4.variables, yv)
    s = x * x + y * y
    f4 = s * s * Fraction(-t * t, 3) + g4 * t**3
    f6 = s * s * s * Fraction(2 * t**3, 27) + s * g4 * Fraction(-(t**4), 3) + g6 * t**5

    # symbolic verification of the defining identity in (x, y, z)
    def lift(p: MultiPoly) -> MultiPoly:
        return MultiPoly(
            _XYZ, {(e[0], e[1], 0): c for e, c in p.terms.items()}
        )

    X = MultiPoly.variable(_XYZ, "x")
    Y = MultiPoly.variable(_XYZ, "y")
    Z = MultiPoly.variable(_XYZ, "z")
    S = X * X + Y * Y
    Zp = Z - S * Fraction(t, 3)
    # x' = t x, y' = t y scales a degree-d binary form by t^d
    lhs = (
        Zp * Zp * Zp * t
        + Zp * Zp * (S * (t * t))
        + Zp * lift(g4) * t**4
        + lift(g6) * t**6
    )
    rhs = (Z * Z * Z + Z * lift(f4) + lift(f6)) * t
    if not (lhs - rhs).is_zero():  # pragma: no cover - definitional identity
        raise MathDomainError("internal error: blow-up identity failed")
    return f4, f6


def p0_pair(variables: tuple[str, str] = ("x", "y")) -> tuple[MultiPoly, MultiPoly]:
    """The strictly polystable pair p0 = [-(1/3)(x^2+y^2)^2 : (2/27)(x^2+y^2)^3]."""
    zero4 = MultiPoly.zero(variables)
    return blowup_substitution(zero4, zero4, Fraction(1))
