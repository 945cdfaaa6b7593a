"""GIT stability classification for the degeneration families.

The torus engine (``torus_stability``) is the exact core: given coordinates
of a point together with the integer weight of every coordinate, the verdict
is read off the convex position of the support weights, and every Unstable
answer carries an integer one-parameter-subgroup certificate that can be
re-checked independently.

On top of it sit the geometric classifiers for the families we care about:
binary forms, cubic surfaces, quadric-pencil quartics, plane-quartic double
planes, and the two sextic families on weighted projective planes.  These
use the classical multiplicity / singularity-profile criteria, which the
singularity layer evaluates exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .errors import DegenerateInputError, MathDomainError
from .fields import Coefficient, coeff_is_zero, gaussian_field
from .germ import SingularityType
from .polyalg import MultiPoly, gcd_multi
from .singular import (
    QuadricPencil,
    SurfaceProfile,
    profile_cubic,
    profile_double_cover,
    profile_pencil,
)
from .univar import multiplicity_multiset

STABLE = "Stable"
SEMISTABLE_NOT_POLYSTABLE = "SemistableNotPolystable"
POLYSTABLE_NOT_STABLE = "PolystableNotStable"
UNSTABLE = "Unstable"

_TAGS = (STABLE, SEMISTABLE_NOT_POLYSTABLE, POLYSTABLE_NOT_STABLE, UNSTABLE)


@dataclass(frozen=True)
class StabilityClass:
    """A GIT verdict, with an optional destabilizing certificate.

    ``certificate`` is an integer weight covector; for an Unstable verdict it
    pairs strictly positively with every support weight of the input (see
    ``lp.separates_strictly``).  ``boundary`` marks verdicts that sit on a
    wall of the classification where the published criterion is only stated
    up to the at-worst-A(1) test.
    """

    tag: str
    certificate: Optional[tuple[int, ...]] = None
    boundary: bool = False
    reason: str = ""

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise MathDomainError(f"unknown stability tag {self.tag!r}")

    @property
    def is_stable(self) -> bool:
        return self.tag == STABLE

    @property
    def is_semistable(self) -> bool:
        return self.tag != UNSTABLE

    @property
    def is_polystable(self) -> bool:
        return self.tag in (STABLE, POLYSTABLE_NOT_STABLE)


@dataclass(frozen=True)
class TorusPoint:
    """A point of a linear torus representation, weight by weight.

    ``coordinates[i]`` is the coefficient on the i-th weight line and
    ``weight_vectors[i]`` the corresponding character of the torus; all
    weight vectors share one rank.  At least one coordinate must be nonzero.
    """

    coordinates: tuple[Coefficient, ...]
    weight_vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        coords = tuple(self.coordinates)
        weights = tuple(tuple(int(x) for x in w) for w in self.weight_vectors)
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "weight_vectors", weights)
        if not coords or len(coords) != len(weights):
            raise MathDomainError("coordinates and weight vectors must match up")
        rank = len(weights[0])
        if rank == 0 or any(len(w) != rank for w in weights):
            raise MathDomainError("weight vectors of mixed or zero rank")
        if all(coeff_is_zero(c) for c in coords):
            raise DegenerateInputError("empty support")

    @property
    def rank(self) -> int:
        return len(self.weight_vectors[0])

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            w for c, w in zip(self.coordinates, self.weight_vectors) if not coeff_is_zero(c)
        )


def torus_stability(point: TorusPoint) -> StabilityClass:
    """Stability of a torus-representation point from its support weights.

    The verdict is a convex-position statement about the support S:
    0 outside conv(S) is Unstable (with an integer separating certificate),
    0 in the relative interior is Stable when conv(S) is full-dimensional
    and PolystableNotStable otherwise (lower-dimensional hull means a
    positive-dimensional stabilizer), and 0 on the proper boundary is
    SemistableNotPolystable.
    """
    support = point.support()
    if not support:
        raise DegenerateInputError("empty support")
    if lp.zero_in_convex_hull(support) is None:
        cert = lp.strict_separator(support)
        return StabilityClass(
            UNSTABLE, certificate=cert, reason="separating one-parameter subgroup found"
        )
    if lp.zero_in_relative_interior(support):
        if lp.matrix_rank(support) == point.rank:
            return StabilityClass(STABLE, reason="origin interior to the weight polytope")
        return StabilityClass(
            POLYSTABLE_NOT_STABLE,
            reason="origin in the relative interior of a lower-dimensional weight polytope",
        )
    return StabilityClass(
        SEMISTABLE_NOT_POLYSTABLE, reason="origin on a proper face of the weight polytope"
    )


# -- binary forms ------------------------------------------------------------


def _check_form(f: MultiPoly, nvars: int, degree: Optional[int] = None) -> int:
    if len(f.variables) != nvars:
        raise MathDomainError(f"expected a form in {nvars} variables")
    if f.is_zero():
        raise DegenerateInputError("zero form")
    if not f.is_homogeneous():
        raise MathDomainError("form is not homogeneous")
    d = f.total_degree()
    if degree is not None and d != degree:
        raise MathDomainError(f"expected degree {degree}, found {d}")
    return d


def root_multiplicities(f: MultiPoly) -> list[int]:
    """Multiplicities of the projective roots of a binary form (sorted)."""
    d = _check_form(f, 2)
    coeffs = [f.coefficient((k, d - k)) for k in range(d + 1)]
    while coeffs and coeff_is_zero(coeffs[-1]):
        coeffs.pop()
    mults = multiplicity_multiset(coeffs)
    inf_mult = d - (len(coeffs) - 1)
    if inf_mult > 0:
        mults = sorted(mults + [inf_mult])
    return mults


def binary_form_stability(f: MultiPoly, d: Optional[int] = None) -> StabilityClass:
    """Stability of a binary form of degree d under the SL2 action.

    Stable iff every root has multiplicity < d/2; Unstable iff some root has
    multiplicity > d/2; on the wall, the closed orbits are exactly the forms
    with two distinct roots of multiplicity d/2 each.
    """
    deg = _check_form(f, 2, d)
    if deg < 1:
        raise DegenerateInputError("degree must be positive")
    mults = root_multiplicities(f)
    top = max(mults)
    if 2 * top < deg:
        return StabilityClass(STABLE, reason="all root multiplicities below d/2")
    if 2 * top > deg:
        return StabilityClass(UNSTABLE, reason="root of multiplicity above d/2")
    if mults == [deg // 2, deg // 2]:
        return StabilityClass(
            POLYSTABLE_NOT_STABLE, reason="two distinct roots of multiplicity d/2"
        )
    return StabilityClass(
        SEMISTABLE_NOT_POLYSTABLE, reason="root of multiplicity exactly d/2"
    )


# -- cubic surfaces ----------------------------------------------------------


def cubic_stability(f: MultiPoly) -> StabilityClass:
    """Stability of a cubic surface from its singularity profile.

    Stable iff at worst A(1) points, semistable iff at worst A(2); the unique
    closed strictly semistable orbit is the surface with three A(2) points.
    """
    _check_form(f, 4, 3)
    prof = profile_cubic(f)
    if not prof.is_normal:
        return StabilityClass(UNSTABLE, reason="non-isolated or non-normal singular locus")
    kinds = [(t.kind, t.index) for t in prof.expanded_types()]
    if any(k != "A" or idx > 2 for k, idx in kinds):
        return StabilityClass(UNSTABLE, reason="singular point worse than A(2)")
    if kinds == [("A", 2)] * 3:
        return StabilityClass(POLYSTABLE_NOT_STABLE, reason="three A(2) points")
    if all(idx == 1 for _, idx in kinds):
        return StabilityClass(STABLE, reason="at worst A(1) points")
    return StabilityClass(SEMISTABLE_NOT_POLYSTABLE, reason="A(2) point present")


# -- quartic del Pezzo surfaces (pencils of quadrics) ------------------------


def quartic_dp_stability(pencil: QuadricPencil) -> StabilityClass:
    """Stability of a complete intersection of two quadrics in P4.

    Stable iff smooth.  A singular intersection is polystable exactly when
    the pencil is simultaneously diagonalizable with all eigenvalue
    multiplicities at most two; a non-diagonalizable pencil whose surface
    still has only A(1) points is semistable with non-closed orbit; anything
    else is unstable.  ``boundary`` marks the diagonalizable multiplicity-3
    wall, where the singular locus is a conic and the at-worst-A(1) test is
    what forces the Unstable verdict.
    """
    prof = profile_pencil(pencil)
    if prof.is_smooth:
        return StabilityClass(STABLE, reason="smooth intersection of two quadrics")
    mults = pencil.det_root_multiplicities()
    simdiag = pencil.simultaneously_diagonalizable()
    if simdiag and mults[0] <= 2:
        return StabilityClass(
            POLYSTABLE_NOT_STABLE,
            reason="diagonalizable pencil with eigenvalue multiplicities at most two",
        )
    if prof.is_normal and all(t.kind == "A" and t.index == 1 for t in prof.expanded_types()):
        return StabilityClass(
            SEMISTABLE_NOT_POLYSTABLE,
            reason="only A(1) points but the pencil is not diagonalizable",
        )
    return StabilityClass(
        UNSTABLE,
        boundary=bool(simdiag and mults[0] == 3),
        reason="singularities worse than A(1)",
    )


# -- plane quartics (degree-two del Pezzo double planes) ----------------------


def _conic_rank(q: MultiPoly) -> int:
    """Rank of the symmetric matrix of a ternary quadratic form."""
    v = q.variables
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = q.coefficient(tuple(e))
            row.append(c if i == j else Fraction(c, 2) if isinstance(c, int) else c / 2)
        rows.append(row)
    return lp.matrix_rank(rows)


def _repeated_factor(f: MultiPoly) -> MultiPoly:
    """gcd of f and its partials: constant exactly when f is squarefree."""
    g = f
    for v in f.variables:
        g = gcd_multi(g, f.derivative(v))
    return g


def _germ_at_point(f: MultiPoly, chart: int, point: Sequence[Coefficient]) -> MultiPoly:
    """Local equation of f at a projective point, in the chart x_chart = 1."""
    variables = f.variables
    chart_var = variables[chart]
    others = tuple(v for v in variables if v != chart_var)
    mapping: dict = {chart_var: Fraction(1)}
    for v in others:
        mapping[v] = MultiPoly.variable(others, v) + point[variables.index(v)]
    return f.substitute(mapping)


def _tangent_line_divides(f: MultiPoly, chart: int, point, germ: MultiPoly) -> bool:
    """Whether the unique tangent line at a unibranch double point divides f.

    The germ must have rank-one quadratic part c*(a*u + b*v)^2; the local
    tangent line a*u + b*v lifts to the projective line through the point.
    """
    u, v = germ.variables
    q20 = germ.coefficient((2, 0))
    q11 = germ.coefficient((1, 1))
    q02 = germ.coefficient((0, 2))
    if not coeff_is_zero(q20):
        alpha, beta = Fraction(1), q11 / (2 * q20)
    elif not coeff_is_zero(q02):
        alpha, beta = Fraction(0), Fraction(1)
    else:
        raise MathDomainError("quadratic part is not of rank one")
    variables = f.variables
    chart_var = variables[chart]
    line = MultiPoly.zero(variables)
    for coeff, local in ((alpha, u), (beta, v)):
        if coeff_is_zero(coeff):
            continue
        term = MultiPoly.variable(variables, local) - MultiPoly.variable(
            variables, chart_var
        ) * point[variables.index(local)]
        line = line + term * coeff
    try:
        f.divide_exact(line)
    except MathDomainError:
        return False
    return True


def plane_quartic_stability(f: MultiPoly) -> StabilityClass:
    """Stability of a plane quartic under SL3.

    Unstable iff the quartic has a point of multiplicity three or more, a
    unibranch-pair point of type A(5) or worse whose tangent line is a
    component, or a non-reduced structure other than a double smooth conic.
    Stable iff at worst A(1) and A(2) points.  The closed strictly
    semistable orbits are the double smooth conic, the two-tacnode pair of
    bitangent conics, and the conic-plus-two-tangent-lines configuration.
    """
    _check_form(f, 3, 4)
    rep = _repeated_factor(f)
    if not rep.is_constant():
        if rep.total_degree() == 2:
            try:
                quotient = f.divide_exact(rep * rep)
            except MathDomainError:
                quotient = None
            if quotient is not None and quotient.is_constant() and _conic_rank(rep) == 3:
                return StabilityClass(POLYSTABLE_NOT_STABLE, reason="double smooth conic")
        return StabilityClass(
            UNSTABLE, reason="non-reduced quartic other than a double smooth conic"
        )
    prof = profile_double_cover("P2", f)
    types = prof.expanded_types()
    if any(t.kind != "A" for t in types):
        return StabilityClass(UNSTABLE, reason="point of multiplicity at least three")
    for sp in prof.singular_points:
        t = sp.type
        if t.kind == "A" and t.index >= 5:
            germ = _germ_at_point(f, sp.chart, sp.point)
            if _tangent_line_divides(f, sp.chart, sp.point, germ):
                return StabilityClass(
                    UNSTABLE,
                    reason="tangent line at an A(5)-or-worse point is a component",
                )
    indices = sorted(t.index for t in types)
    if all(i <= 2 for i in indices):
        return StabilityClass(STABLE, reason="at worst A(1) and A(2) points")
    if indices == [3, 3]:
        return StabilityClass(POLYSTABLE_NOT_STABLE, reason="pair of conics tangent twice")
    if indices == [1, 3, 3]:
        return StabilityClass(
            POLYSTABLE_NOT_STABLE, reason="conic with two tangent lines"
        )
    return StabilityClass(
        SEMISTABLE_NOT_POLYSTABLE, reason="tacnodal or worse A(k) point, orbit not closed"
    )


# -- degree-one del Pezzo sextics on P(1,1,2) ---------------------------------


def _order_partials(f: MultiPoly, order: int) -> list[MultiPoly]:
    frontier = [f]
    for _ in range(order):
        frontier = [g.derivative(v) for g in frontier for v in f.variables]
    return frontier


def _high_multiplicity_locus(f: MultiPoly, k: int) -> MultiPoly:
    """Binary form whose roots are the points of multiplicity >= k of f."""
    g = f
    for p in _order_partials(f, k - 1):
        g = gcd_multi(g, p)
    return g


def _inject_binary(f: MultiPoly, variables: tuple[str, ...]) -> MultiPoly:
    terms = {e + (0,) * (len(variables) - 2): c for e, c in f.terms.items()}
    return MultiPoly(variables, terms)


def sextic_dp1_stability(f4: MultiPoly, f6: MultiPoly) -> StabilityClass:
    """Stability of the degree-one del Pezzo family z^2 = z'^3 + f4 z' + f6.

    The pair (f4, f6) of binary forms is unstable iff some point has
    multiplicity >= 3 in f4 and >= 4 in f6 simultaneously.  Among semistable
    pairs, the closed non-stable orbits are the two-D(4) family
    (a x^2 y^2, b x^3 y^3) and the non-normal pair with f4 = -3 s^2,
    f6 = 2 s^3 for a rank-two binary quadratic s; everything whose branch
    sextic has only A(k) singular points is stable.
    """
    if f4.variables != f6.variables or len(f4.variables) != 2:
        raise MathDomainError("expected two binary forms in the same variables")
    if f4.is_zero() and f6.is_zero():
        raise DegenerateInputError("zero form")
    for g, d in ((f4, 4), (f6, 6)):
        if not g.is_zero():
            _check_form(g, 2, d)
    if f4.is_zero():
        bad = _high_multiplicity_locus(f6, 4)
    elif f6.is_zero():
        bad = _high_multiplicity_locus(f4, 3)
    else:
        bad = gcd_multi(_high_multiplicity_locus(f4, 3), _high_multiplicity_locus(f6, 4))
    if not bad.is_constant():
        return StabilityClass(
            UNSTABLE,
            reason="common root of multiplicity >= 3 in f4 and >= 4 in f6",
        )
    disc = f4 * f4 * f4 * (-4) - f6 * f6 * 27
    if disc.is_zero():
        s = (f6 * (-3)).divide_exact(f4 * 2)
        if not (s * s * (-3) - f4).is_zero() or not (s * s * s * 2 - f6).is_zero():
            raise MathDomainError("inconsistent non-reduced branch structure")
        s_disc = s.coefficient((1, 1)) ** 2 - 4 * s.coefficient((2, 0)) * s.coefficient((0, 2))
        if coeff_is_zero(s_disc):
            return StabilityClass(UNSTABLE, reason="branch is a line of high multiplicity")
        return StabilityClass(
            POLYSTABLE_NOT_STABLE,
            reason="non-normal limit: f4 = -3 s^2, f6 = 2 s^3 with s of rank two",
        )
    zname = next(n for n in ("z", "w", "t", "s") if n not in f4.variables)
    variables = f4.variables + (zname,)
    z = MultiPoly.variable(variables, zname)
    branch = z * z * z + _inject_binary(f4, variables) * z + _inject_binary(f6, variables)
    prof = profile_double_cover("P(1,1,2)", branch)
    labels = sorted(t.label() for t in prof.expanded_types())
    if labels == ["D4", "D4"]:
        return StabilityClass(
            POLYSTABLE_NOT_STABLE, reason="two D(4) points: closed orbit family"
        )
    if all(t.kind == "A" for t in prof.expanded_types()):
        return StabilityClass(STABLE, reason="branch sextic with at worst A(k) points")
    return StabilityClass(
        SEMISTABLE_NOT_POLYSTABLE, reason="D or E point on the branch, orbit not closed"
    )


# -- the exceptional locus on the degree-one wall -----------------------------

#: Weights of the nine coordinates (g4 on the two diagonal quartic lines,
#: then the seven coefficients of g6) for the rank-one destabilizing torus.
EXCEPTIONAL_E_WEIGHTS = (4, -4, 6, 4, 2, 0, -2, -4, -6)


def _diagonal_basis_coefficients(g: MultiPoly, degree: int) -> list[Coefficient]:
    """Coefficients of a binary form in the basis (x+iy)^(d-j) (x-iy)^j."""
    field = gaussian_field()
    i = field.generator()
    half = Fraction(1, 2)
    uv = ("u#", "v#")
    u = MultiPoly.variable(uv, "u#")
    v = MultiPoly.variable(uv, "v#")
    x_im = (u + v) * half
    y_im = (u - v) * (i * (-half))
    h = g.substitute({g.variables[0]: x_im, g.variables[1]: y_im})
    return [h.coefficient((degree - j, j)) for j in range(degree + 1)]


def exceptional_E_stability(g4: MultiPoly, g6: MultiPoly) -> StabilityClass:
    """Stability of an exceptional pair (g4, g6) via the rank-one torus.

    g4 must lie in the plane spanned by (x+iy)^4 and (x-iy)^4; together with
    the seven coefficients of g6 in the diagonal basis this gives a
    nine-coordinate point whose weights under the distinguished
    one-parameter subgroup are ``EXCEPTIONAL_E_WEIGHTS``.
    """
    if g4.variables != g6.variables or len(g4.variables) != 2:
        raise MathDomainError("expected two binary forms in the same variables")
    for g, d in ((g4, 4), (g6, 6)):
        if not g.is_zero() and (not g.is_homogeneous() or g.total_degree() != d):
            raise MathDomainError(f"expected a form of degree {d}")
    c4 = _diagonal_basis_coefficients(g4, 4)
    if any(not coeff_is_zero(c4[j]) for j in (1, 2, 3)):
        raise MathDomainError(
            "g4 must lie in the plane spanned by (x+iy)^4 and (x-iy)^4"
        )
    c6 = _diagonal_basis_coefficients(g6, 6)
    coords = tuple([c4[0], c4[4]] + c6)
    weights = tuple((w,) for w in EXCEPTIONAL_E_WEIGHTS)
    return torus_stability(TorusPoint(coords, weights))
