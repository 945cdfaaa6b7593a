"""Global singularity profiles.

Finds and classifies every singular point of: cubic surfaces in P³,
intersections of two quadrics in P⁴, and double covers of P² / P(1,1,2) /
P(1,1,4) / P(1,2,9) branched along a curve.  Points are located exactly by
stratified-chart elimination (iterated resultants, then verified
back-substitution), with Galois-conjugate points reported once per cluster.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import univar
from .errors import (
    DegenerateInputError,
    ExcludedByClassificationError,
    MathDomainError,
    TowerExtensionError,
)
from .factorize import factor_rational, rational_root_clusters, roots_in_field
from .fields import Coefficient, NumberField, coeff_inverse, coeff_key
from .germ import (
    default_truncation,
    MAX_TRUNCATION,
    SingularityType,
    classify_curve_germ,
    classify_surface_germ,
    double_cover_type,
    solve_implicit_series,
    substitute_series,
    vertex_quotient_type,
)
from .polyalg import MultiPoly, WeightSystem, gcd_multi, poly_det, resultant

BASE_P2 = "P2"
BASE_P112 = "P(1,1,2)"
BASE_P114 = "P(1,1,4)"
BASE_P129 = "P(1,2,9)"

_BASE_WEIGHTS = {
    BASE_P2: (1, 1, 1),
    BASE_P112: (1, 1, 2),
    BASE_P114: (1, 1, 4),
    BASE_P129: (1, 2, 9),
}
_BASE_BRANCH_DEGREE = {BASE_P2: 4, BASE_P112: 6, BASE_P114: 8, BASE_P129: 18}
_BASE_K2 = {BASE_P2: 2, BASE_P112: 1, BASE_P114: 2, BASE_P129: 1}


@dataclass(frozen=True)
class SingularPoint:
    """One singular point (or one Galois orbit of conjugate points).

    ``point`` holds projective coordinates of one representative; conjugates
    share the type, and ``cluster_size`` is the residue-field degree over Q.
    """

    point: tuple[Coefficient, ...]
    cluster_size: int
    type: SingularityType
    field: NumberField | None = None
    chart: int = 0

    def sort_key(self):
        return (self.chart, tuple(coeff_key(c) for c in self.point), self.type.label())


@dataclass(frozen=True)
class SurfaceProfile:
    """The singular locus of one surface, as a multiset of classified points.

    ``is_normal`` is False exactly when a positive-dimensional singular locus
    was detected; the point list is empty in that case.
    """

    ambient: str
    singular_points: tuple[SingularPoint, ...]
    is_normal: bool
    degree: int

    @property
    def is_smooth(self) -> bool:
        return self.is_normal and not self.singular_points

    def expanded_types(self) -> list[SingularityType]:
        out: list[SingularityType] = []
        for p in self.singular_points:
            out.extend([p.type] * p.cluster_size)
        return sorted(out, key=lambda t: t.label())

    def expanded_labels(self) -> list[str]:
        return [t.label() for t in self.expanded_types()]

    def all_du_val(self) -> bool:
        return self.is_normal and all(p.type.is_du_val() for p in self.singular_points)

    def all_of_labels(self, allowed: Sequence[str]) -> bool:
        allowed_set = set(allowed)
        return self.is_normal and all(lbl in allowed_set for lbl in self.expanded_labels())


# -- exact affine system solving -----------------------------------------------------


def _nonzero_polys(polys: Sequence[MultiPoly]) -> list[MultiPoly]:
    return [p for p in polys if not p.is_zero()]


def _univar_coeffs(p: MultiPoly, var: str) -> list[Coefficient]:
    return [c.constant_value() for c in p.as_univariate(var)]


def _roots_rational(coeffs: Sequence[Coefficient]):
    """Root clusters of a rational univariate polynomial: (root, field, size)."""
    return [(root, fld, size) for root, fld, size, _ in rational_root_clusters(list(coeffs))]


def _roots_over(coeffs: Sequence[Coefficient], fld: NumberField | None):
    if fld is None:
        return _roots_rational(coeffs)
    roots, leftover = roots_in_field(list(coeffs), fld)
    if leftover:
        raise TowerExtensionError()
    return [(r, fld, fld.degree) for r in roots]


def solve_affine_system(
    polys: Sequence[MultiPoly], variables: Sequence[str]
) -> tuple[list[tuple[tuple[Coefficient, ...], NumberField | None, int]], bool]:
    """Isolated common zeros of a rational polynomial system, exactly.

    Returns (solutions, non_isolated): each solution is (coordinates, field,
    cluster_size) with coordinates in the order of ``variables``; the flag is
    True when a positive-dimensional component through the search space was
    detected (solutions are then not reported).  Coordinates needing a second
    independent extension raise "tower extension required".
    """
    variables = tuple(variables)
    return _solve_system([p for p in polys], variables, len(variables))


def _solve_system(polys, variables, k):
    polys = _nonzero_polys(polys)
    if any(p.is_constant() for p in polys):
        return [], False
    if not polys:
        return [], True
    if k == 1:
        g = None
        for p in polys:
            cs = _univar_coeffs(p, variables[0])
            g = cs if g is None else univar.gcd(g, cs)
            if univar.degree(g) == 0:
                return [], False
        return [((root,), fld, size) for root, fld, size in _roots_rational(g)], False

    uk = variables[k - 1]
    with_uk = [p for p in polys if p.degree_in(uk) > 0]
    without_uk = [p for p in polys if p.degree_in(uk) == 0]
    if not with_uk:
        # u_k unconstrained: any solution of the rest sweeps out a line
        sub, flag = _solve_system(without_uk, variables, k - 1)
        return [], True if sub else flag
    elims = list(without_uk)
    for p, q in itertools.combinations(with_uk, 2):
        elims.append(resultant(p, q, uk))
    elims = _nonzero_polys(elims)
    if not elims and len(with_uk) >= 2:
        return [], True  # every pair shares a component along u_k
    partials, flag = _solve_system(elims, variables, k - 1) if elims else ([], True)
    if not elims:
        return [], flag

    solutions = []
    for coords, fld, size in partials:
        values = {variables[i]: coords[i] for i in range(k - 1)}
        values.update({v: Fraction(0) for v in variables[k - 1 :]})
        g = None
        all_zero = True
        for p in polys:
            cs = [c.evaluate(values) for c in p.as_univariate(uk)]
            if univar.is_zero(cs):
                continue
            all_zero = False
            g = cs if g is None else univar.gcd(g, cs)
            if univar.degree(g) == 0:
                break
        if all_zero:
            flag = True
            continue
        if univar.degree(g) == 0:
            continue  # extraneous resultant candidate
        for root, root_fld, root_size in _roots_over(g, fld):
            solutions.append((coords + (root,), root_fld, root_size))
    solutions.sort(key=lambda s: tuple(coeff_key(c) for c in s[0]))
    return solutions, flag


# -- cubic surfaces in P^3 -----------------------------------------------------------


def _stratified_chart_images(variables, j, suffix):
    mapping = {variables[m]: Fraction(0) for m in range(j)}
    mapping[variables[j]] = Fraction(1)
    for name in suffix:
        mapping[name] = MultiPoly.variable(suffix, name)
    return mapping


def _chart_point(variables, j, coords):
    point = [Fraction(0)] * len(variables)
    point[j] = Fraction(1)
    for name, value in coords.items():
        point[variables.index(name)] = value
    return tuple(point)


def _affine_germ_at(F: MultiPoly, j: int, point: Sequence[Coefficient]) -> MultiPoly:
    """F restricted to the chart x_j = 1 and shifted so ``point`` is the origin."""
    variables = F.variables
    others = tuple(v for i, v in enumerate(variables) if i != j)
    mapping = {variables[j]: Fraction(1)}
    for i, v in enumerate(variables):
        if i == j:
            continue
        mapping[v] = MultiPoly.variable(others, v) + point[i]
    return F.substitute(mapping)


def profile_cubic(F: MultiPoly) -> SurfaceProfile:
    """Singular points of the cubic surface F = 0 in P³, classified.

    A positive-dimensional singular locus is reported via is_normal=False
    rather than an exception.
    """
    if len(F.variables) != 4:
        raise MathDomainError("cubic surface needs exactly four variables")
    if F.is_zero() or not F.is_homogeneous() or F.total_degree() != 3:
        raise MathDomainError("input is not a homogeneous cubic")
    variables = F.variables
    grads = [F.derivative(v) for v in variables]
    points: list[SingularPoint] = []
    non_isolated = False
    for j in range(4):
        suffix = variables[j + 1 :]
        if not suffix:
            origin = {v: Fraction(0) for v in variables}
            origin[variables[j]] = Fraction(1)
            if all(g.evaluate(origin) == 0 for g in grads):
                points.append(_classified_cubic_point(F, j, variables, {}))
            continue
        system = [g.substitute(_stratified_chart_images(variables, j, suffix)) for g in grads]
        solutions, flag = solve_affine_system(system, suffix)
        non_isolated = non_isolated or flag
        for coords, fld, size in solutions:
            named = dict(zip(suffix, coords))
            points.append(_classified_cubic_point(F, j, variables, named, fld, size))
    if non_isolated or any(p.type.kind == "NonNormal" for p in points):
        return SurfaceProfile("P3", (), False, 3)
    points.sort(key=SingularPoint.sort_key)
    return SurfaceProfile("P3", tuple(points), True, 3)


def _classified_cubic_point(F, j, variables, named, fld=None, size=1):
    point = _chart_point(variables, j, named)
    germ = _affine_germ_at(F, j, point)
    t = classify_surface_germ(germ)
    return SingularPoint(point, size, t, fld, chart=j)


# -- quadric pencils in P^4 ----------------------------------------------------------


def _symmetric_matrix_of(q: MultiPoly) -> tuple[tuple[Fraction, ...], ...]:
    n = len(q.variables)
    if q.is_zero() or not q.is_homogeneous() or q.total_degree() != 2:
        raise MathDomainError("pencil members must be nonzero quadratic forms")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, d in enumerate(e) for _ in range(d)]
        i, j = idx[0], idx[1]
        if not isinstance(c, Fraction):
            raise MathDomainError("pencil matrices must be rational")
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = rows[j][i] = c / 2
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class QuadricPencil:
    """Two quadrics in P⁴ given by symmetric 5×5 rational matrices."""

    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for M in (self.A, self.B):
            if len(M) != 5 or any(len(r) != 5 for r in M):
                raise MathDomainError("pencil matrices must be 5x5")
            if any(M[i][j] != M[j][i] for i in range(5) for j in range(5)):
                raise MathDomainError("pencil matrices must be symmetric")

    @classmethod
    def from_matrices(cls, A, B) -> "QuadricPencil":
        conv = lambda M: tuple(tuple(Fraction(x) for x in row) for row in M)
        return cls(conv(A), conv(B))

    @classmethod
    def from_quadrics(cls, q1: MultiPoly, q2: MultiPoly) -> "QuadricPencil":
        if len(q1.variables) != 5 or q1.variables != q2.variables:
            raise MathDomainError("pencil quadrics need one shared 5-variable tuple")
        return cls(_symmetric_matrix_of(q1), _symmetric_matrix_of(q2))

    def member(self, s, u):
        return [[s * self.A[i][j] + u * self.B[i][j] for j in range(5)] for i in range(5)]

    def quadric(self, which: str, variables=("x0", "x1", "x2", "x3", "x4")) -> MultiPoly:
        M = self.A if which == "A" else self.B
        xs = [MultiPoly.variable(variables, v) for v in variables]
        acc = MultiPoly.zero(variables)
        for i in range(5):
            for j in range(i, 5):
                c = M[i][j] if i == j else 2 * M[i][j]
                if c:
                    acc = acc + c * xs[i] * xs[j]
        return acc

    def det_form(self, names=("l", "m")) -> MultiPoly:
        """det(l·A + m·B) as a binary quintic."""
        l = MultiPoly.variable(names, names[0])
        m = MultiPoly.variable(names, names[1])
        entries = [[self.A[i][j] * l + self.B[i][j] * m for j in range(5)] for i in range(5)]
        return poly_det(entries)

    def det_univariate(self) -> tuple[list[Fraction], int]:
        """(coefficients of det(t·A + B), multiplicity of the root at infinity)."""
        form = self.det_form()
        coeffs = [Fraction(0)] * 6
        for e, c in form.terms.items():
            coeffs[e[0]] = c
        if univar.is_zero(coeffs):
            raise DegenerateInputError("degenerate pencil")
        return univar.trim(coeffs), 5 - univar.degree(coeffs)

    def det_root_multiplicities(self) -> list[int]:
        """Root multiplicities of the binary quintic det(λA+μB), sorted descending."""
        coeffs, inf_mult = self.det_univariate()
        mults = []
        for factor, mult in factor_rational(coeffs):
            mults.extend([mult] * (len(factor) - 1))
        if inf_mult:
            mults.append(inf_mult)
        return sorted(mults, reverse=True)

    def invertible_member(self) -> tuple[int, int]:
        """Small integer (s, u) with det(sA + uB) nonzero."""
        coeffs, inf_mult = self.det_univariate()
        if inf_mult == 0:
            return (1, 0)
        for s, u in ((0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, 1), (1, 3)):
            M = self.member(Fraction(s), Fraction(u))
            if _det_rational(M):
                return (s, u)
        raise DegenerateInputError("degenerate pencil")

    def simultaneously_diagonalizable(self) -> bool:
        """Whether some basis of P⁴ diagonalizes both quadrics at once.

        Equivalent (for a nondegenerate pencil) to C⁻¹D being semisimple for an
        invertible member C; semisimplicity is checked exactly via the
        squarefree part of the characteristic polynomial annihilating C⁻¹D.
        """
        s, u = self.invertible_member()
        C = self.member(Fraction(s), Fraction(u))
        D = self.member(Fraction(1), Fraction(0)) if u != 0 else self.member(Fraction(0), Fraction(1))
        M = _solve_matrix(C, D)
        charpoly = _char_poly(M)
        sqf = univar.squarefree_part(charpoly)
        S = _matrix_poly_eval(sqf, M)
        return all(all(x == 0 for x in row) for row in S)


def _det_rational(M) -> Fraction:
    entries = [[MultiPoly.constant(("t",), x) for x in row] for row in M]
    return poly_det(entries).constant_value()


def _solve_matrix(C, D):
    """C⁻¹·D by Gaussian elimination on the augmented system."""
    n = len(C)
    aug = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(D[i][j]) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise MathDomainError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _char_poly(M) -> list[Fraction]:
    n = len(M)
    t = MultiPoly.variable(("t",), "t")
    entries = [
        [t - M[i][j] if i == j else MultiPoly.constant(("t",), -M[i][j]) for j in range(n)]
        for i in range(n)
    ]
    det = poly_det(entries)
    coeffs = [Fraction(0)] * (n + 1)
    for e, c in det.terms.items():
        coeffs[e[0]] = c
    return coeffs


def _matrix_poly_eval(coeffs, M):
    n = len(M)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(list(coeffs)):
        acc = _mat_mul(acc, M)
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def _mat_mul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _mat_vec(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _kernel_basis(M) -> list[list[Coefficient]]:
    """Basis of the right kernel, by exact Gaussian elimination."""
    n = len(M)
    rows = [list(r) for r in M]
    pivots: dict[int, int] = {}
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, n) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = coeff_inverse(rows[r][col])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [Fraction(0)] * n
        v[col] = Fraction(1)
        for pcol, prow in pivots.items():
            v[pcol] = -rows[prow][col]
        basis.append(v)
    return basis


def _quadratic_value(M, v):
    return sum(v[i] * sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(v)))


def _pencil_roots(P: QuadricPencil):
    """Roots (s:u) of det(sA+uB)=0 as members M = s·A + u·B, with fields."""
    coeffs, inf_mult = P.det_univariate()
    members = []
    for root, fld, size in _roots_rational(coeffs):
        M = [[root * P.A[i][j] + P.B[i][j] for j in range(5)] for i in range(5)]
        members.append((M, fld, size))
    if inf_mult:
        members.append(([list(r) for r in P.A], None, 1))
    return members


def _pencil_germ_type(P: QuadricPencil, point, fld) -> SingularityType:
    variables = ("x0", "x1", "x2", "x3", "x4")
    qA = P.quadric("A", variables)
    qB = P.quadric("B", variables)
    j = next(i for i, c in enumerate(point) if c)
    scale = coeff_inverse(point[j])
    normalized = [c * scale for c in point]
    others = tuple(v for i, v in enumerate(variables) if i != j)
    mapping = {variables[j]: Fraction(1)}
    for i, v in enumerate(variables):
        if i != j:
            mapping[v] = MultiPoly.variable(others, v) + normalized[i]
    gA = qA.substitute(mapping)
    gB = qB.substitute(mapping)
    lin = lambda g: [g.coefficient(tuple(1 if t == i else 0 for t in range(4))) for i in range(4)]
    if any(lin(gA)):
        solver, other = gA, gB
    elif any(lin(gB)):
        solver, other = gB, gA
    else:
        raise DegenerateInputError("degenerate pencil")
    v = others[next(i for i, c in enumerate(lin(solver)) if c)]
    rest = tuple(name for name in others if name != v)
    n = default_truncation()
    while True:
        phi = solve_implicit_series(solver, v, n)
        germ = substitute_series(other, v, phi, n).restrict_variables(rest)
        t = None
        if not germ.is_zero():
            try:
                t = classify_surface_germ(germ)
            except (MathDomainError, DegenerateInputError):
                t = None
        if t is not None and t.kind != "NonNormal" and _truncation_margin_ok(t, n):
            return t
        if n >= MAX_TRUNCATION:
            if t is None:
                raise MathDomainError("pencil germ did not stabilize")
            return t
        n = min(2 * n, MAX_TRUNCATION)


def _truncation_margin_ok(t: SingularityType, n: int) -> bool:
    if t.kind in ("A", "D"):
        return t.index + 4 <= n
    return n >= 8


def profile_pencil(P: QuadricPencil) -> SurfaceProfile:
    """Singular points of the intersection of the two quadrics, classified.

    Singular points are exactly the kernel vectors of the degenerate pencil
    members that lie on the intersection; a kernel plane meeting the surface
    in a line (or a 3-dimensional kernel) makes the singular locus
    positive-dimensional: is_normal=False.
    """
    points: list[SingularPoint] = []
    non_isolated = False
    for M, fld, size in _pencil_roots(P):
        kernel = _kernel_basis(M)
        if len(kernel) >= 3:
            non_isolated = True
            continue
        if len(kernel) == 1:
            v = kernel[0]
            if _quadratic_value(P.A, v) == 0 and _quadratic_value(P.B, v) == 0:
                points.append(_pencil_point(P, v, fld, size))
            continue
        # 2-dimensional kernel: the surface meets the kernel plane in the zero
        # locus of any independent member restricted to it
        v, w = kernel
        C = P.B if all(all(x == 0 for x in row) for row in _restrict(P.A, v, w)) else P.A
        R = _restrict(C, v, w)
        a, b, c = R[0][0], 2 * R[0][1], R[1][1]
        if not a and not b and not c:
            non_isolated = True
            continue
        quad = [c, b, a]  # R(t·v + w) as a polynomial in t
        if univar.degree(quad) < 2:
            # root at (1:0): the point v itself
            points.append(_pencil_point(P, v, fld, size))
        for root, root_fld, root_size in _roots_over(univar.trim(quad), fld):
            p = [root * vi + wi for vi, wi in zip(v, w)]
            points.append(_pencil_point(P, p, root_fld, root_size))
    if non_isolated:
        return SurfaceProfile("pencil-in-P4", (), False, 4)
    points.sort(key=SingularPoint.sort_key)
    return SurfaceProfile("pencil-in-P4", tuple(points), True, 4)


def _restrict(M, v, w):
    pair = (v, w)
    return [[_bilinear(M, pair[i], pair[j]) for j in range(2)] for i in range(2)]


def _bilinear(M, x, y):
    return sum(x[i] * sum(M[i][j] * y[j] for j in range(len(y))) for i in range(len(x)))


def _pencil_point(P: QuadricPencil, v, fld, size) -> SingularPoint:
    j = next(i for i, c in enumerate(v) if c)
    scale = coeff_inverse(v[j])
    point = tuple(c * scale for c in v)
    t = _pencil_germ_type(P, point, fld)
    return SingularPoint(point, size, t, fld, chart=j)


# -- double covers -------------------------------------------------------------------


def _branch_is_reduced(f: MultiPoly) -> bool:
    g = f
    for v in f.variables:
        g = gcd_multi(g, f.derivative(v))
        if g.is_constant():
            return True
    return g.is_constant()


def _curve_germ_in_chart(f: MultiPoly, chart_var: str, shift: dict) -> MultiPoly:
    """f with chart_var = 1, other variables shifted so the point is the origin."""
    others = tuple(v for v in f.variables if v != chart_var)
    mapping = {chart_var: Fraction(1)}
    for v in others:
        mapping[v] = MultiPoly.variable(others, v) + shift.get(v, Fraction(0))
    return f.substitute(mapping)


def _cover_point_of_branch_germ(
    germ: MultiPoly, point, fld, size, chart
) -> SingularPoint | None:
    t = classify_curve_germ(germ)
    if t.kind == "Smooth":
        return None
    return SingularPoint(tuple(point), size, double_cover_type(germ), fld, chart=chart)


def profile_double_cover(base: str, branch: MultiPoly) -> SurfaceProfile:
    """Singular points of the double cover of ``base`` branched along ``branch``.

    base ∈ {"P2", "P(1,1,2)", "P(1,1,4)", "P(1,2,9)"}; the branch must be
    weighted-homogeneous of degree 4 / 6 / 8 / 18 respectively.  Cover points
    over branch singularities get the germ's double-cover type; orbifold
    points of the base off the branch contribute their quotient types when the
    covering does not interchange the two sheets there; orbifold points on the
    branch go through the Z/2-vertex decision table.  A branch through the
    1/4(1,1) vertex of P(1,1,4) (or the 1/9(1,2) point of P(1,2,9)) is
    rejected: "excluded by classification".
    """
    if base not in _BASE_WEIGHTS:
        raise MathDomainError(f"unsupported double-cover base {base!r}")
    if len(branch.variables) != 3:
        raise MathDomainError("branch curve needs exactly three variables")
    if branch.is_zero():
        raise DegenerateInputError("zero branch curve")
    deg, homog = branch.weighted_degree(WeightSystem(_BASE_WEIGHTS[base]))
    if not homog or deg != _BASE_BRANCH_DEGREE[base]:
        raise MathDomainError(
            f"branch must be weighted-homogeneous of degree {_BASE_BRANCH_DEGREE[base]} on {base}"
        )
    ambient = f"double-cover({base})"
    k2 = _BASE_K2[base]
    if not _branch_is_reduced(branch):
        return SurfaceProfile(ambient, (), False, k2)

    x, y, z = branch.variables
    points: list[SingularPoint] = []
    non_isolated = False

    # chart x = 1: an honest affine plane for all four bases
    f0 = _curve_germ_in_chart(branch, x, {})
    system = [f0, f0.derivative(y), f0.derivative(z)]
    solutions, flag = solve_affine_system(system, (y, z))
    non_isolated = non_isolated or flag
    for coords, fld, size in solutions:
        shift = dict(zip((y, z), coords))
        germ = _curve_germ_in_chart(branch, x, shift)
        point = (Fraction(1),) + coords
        sp = _cover_point_of_branch_germ(germ, point, fld, size, chart=0)
        if sp is not None:
            points.append(sp)

    # stratum x = 0, y = 1 (excluding the orbifold point of P(1,2,9) at z = 0)
    fy = _curve_germ_in_chart(branch, y, {})  # variables (x, z)
    fx_line = [
        g.substitute({x: Fraction(0), z: MultiPoly.variable((z,), z)})
        for g in (fy, fy.derivative(x), fy.derivative(z))
    ]
    line_solutions, flag = solve_affine_system(fx_line, (z,))
    non_isolated = non_isolated or flag
    identify_sign = base == BASE_P129  # (0:1:t) = (0:1:-t) under the weight-2 action
    seen: set = set()
    for (z0,), fld, size in line_solutions:
        if base == BASE_P129 and not z0:
            continue  # the orbifold point [0:1:0] is handled below
        if identify_sign:
            if fld is None:
                key = coeff_key(z0 * z0)
                if key in seen:
                    continue
                seen.add(key)
            else:
                m = fld.min_poly
                mirrored = _negated_min_poly(m)
                if mirrored < m:
                    continue  # the sign-mirrored cluster represents the same points
                if mirrored == m:
                    size = max(1, size // 2)
        germ = _curve_germ_in_chart(branch, y, {z: z0}).restrict_variables((x, z))
        point = (Fraction(0), Fraction(1), z0)
        sp = _cover_point_of_branch_germ(germ, point, fld, size, chart=1)
        if sp is not None:
            points.append(sp)

    # the point [0:0:1] and (for P(1,2,9)) the orbifold point [0:1:0]
    points.extend(_cover_points_over_special_locus(base, branch))

    if non_isolated:
        return SurfaceProfile(ambient, (), False, k2)
    points.sort(key=SingularPoint.sort_key)
    return SurfaceProfile(ambient, tuple(points), True, k2)


def _negated_min_poly(m: tuple) -> tuple:
    """Monic minimal polynomial of -alpha given the one of alpha."""
    d = len(m) - 1
    return tuple(c if (d - i) % 2 == 0 else -c for i, c in enumerate(m))


def _cover_points_over_special_locus(base: str, branch: MultiPoly) -> list[SingularPoint]:
    x, y, z = branch.variables
    out: list[SingularPoint] = []
    if base == BASE_P2:
        # [0:0:1] is an ordinary point; only a singular branch germ matters
        g = _curve_germ_in_chart(branch, z, {}).restrict_variables((x, y))
        if not g.coefficient((0, 0)):
            sp = _cover_point_of_branch_germ(
                g, (Fraction(0), Fraction(0), Fraction(1)), None, 1, chart=2
            )
            if sp is not None:
                out.append(sp)
        return out

    vertex_point = (Fraction(0), Fraction(0), Fraction(1))
    g = _curve_germ_in_chart(branch, z, {}).restrict_variables((x, y))
    on_branch = not g.coefficient((0, 0))
    if base == BASE_P112:
        if on_branch:
            t = vertex_quotient_type(g)
            out.append(SingularPoint(vertex_point, 1, t, None, chart=2))
        # off the branch the two sheets are interchanged: one smooth point
        return out
    if base == BASE_P114:
        if on_branch:
            raise ExcludedByClassificationError()
        quarter = SingularityType.cyclic_quotient(4, 1)
        out.append(SingularPoint(vertex_point, 1, quarter, None, chart=2))
        out.append(SingularPoint(vertex_point, 1, quarter, None, chart=2))
        return out
    # P(1,2,9): the 1/9(1,2) point [0:0:1] and the 1/2(1,1) point [0:1:0]
    if on_branch:
        raise ExcludedByClassificationError()
    ninth = SingularityType.cyclic_quotient(9, 2)
    out.append(SingularPoint(vertex_point, 1, ninth, None, chart=2))
    out.append(SingularPoint(vertex_point, 1, ninth, None, chart=2))
    half_point = (Fraction(0), Fraction(1), Fraction(0))
    g_half = _curve_germ_in_chart(branch, y, {}).restrict_variables((x, z))
    if not g_half.coefficient((0, 0)):
        t = vertex_quotient_type(g_half)
        out.append(SingularPoint(half_point, 1, t, None, chart=1))
    return out
