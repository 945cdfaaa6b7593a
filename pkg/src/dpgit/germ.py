"""ADE classification of plane-curve germs and their double covers.

The classifier is an exact decision procedure on polynomial germs at the
origin: multiplicity 1 is smooth; multiplicity 2 completes the square by a
series Newton iteration (A-series); multiplicity 3 splits on the root
structure of the cubic tangent cone (D-series via one blow-up, E-series via
quasihomogeneous coefficient tests); multiplicity 4 and beyond is worse than
ADE.  Everything works over Q or a single algebraic extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import univar
from .errors import DegenerateInputError, MathDomainError, TruncationError
from .fields import Coefficient, coeff_inverse
from .polyalg import MultiPoly, gcd_multi

DEFAULT_TRUNCATION = 24
MAX_TRUNCATION = 192
_truncation_override: int | None = None


def default_truncation() -> int:
    """The starting truncation order used when a caller does not pass one."""
    return _truncation_override if _truncation_override else DEFAULT_TRUNCATION


def set_default_truncation(n: int | None) -> None:
    """Override the starting truncation order process-wide; ``None`` restores the default."""
    global _truncation_override
    if n is not None and not 1 <= n <= MAX_TRUNCATION:
        raise MathDomainError(f"truncation order must be between 1 and {MAX_TRUNCATION}")
    _truncation_override = n


@dataclass(frozen=True, order=True)
class SingularityType:
    """A point type: Smooth, A(k), D(k), E(k), a cyclic quotient, or worse.

    Cyclic quotients 1/n(1,a) are stored with a = min(a, a^{-1} mod n); the
    Du Val ones 1/n(1,n-1) normalize to A(n-1).
    """

    kind: str
    index: int = 0
    order: int = 0  # n for cyclic quotients
    weight: int = 0  # a for cyclic quotients

    _KINDS = ("Smooth", "A", "D", "E", "CyclicQuotient", "NonNormal", "WorseThanADE", "UnclassifiedQuotient")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise MathDomainError(f"unknown singularity kind {self.kind!r}")
        if self.kind == "A" and self.index < 1:
            raise MathDomainError("A(k) needs k >= 1")
        if self.kind == "D" and self.index < 4:
            raise MathDomainError("D(k) needs k >= 4")
        if self.kind == "E" and self.index not in (6, 7, 8):
            raise MathDomainError("E(k) needs k in {6,7,8}")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def smooth(cls) -> "SingularityType":
        return cls("Smooth")

    @classmethod
    def A(cls, k: int) -> "SingularityType":
        return cls("A", index=k)

    @classmethod
    def D(cls, k: int) -> "SingularityType":
        return cls("D", index=k)

    @classmethod
    def E(cls, k: int) -> "SingularityType":
        return cls("E", index=k)

    @classmethod
    def cyclic_quotient(cls, n: int, a: int) -> "SingularityType":
        import math

        if n < 2 or not (1 <= a < n) or math.gcd(a, n) != 1:
            raise MathDomainError("cyclic quotient needs n >= 2, 1 <= a < n, gcd(a,n)=1")
        a = min(a, pow(a, -1, n))
        if a == n - 1 or (n == 2 and a == 1):
            return cls.A(n - 1)
        return cls("CyclicQuotient", order=n, weight=a)

    @classmethod
    def non_normal(cls) -> "SingularityType":
        return cls("NonNormal")

    @classmethod
    def worse_than_ade(cls) -> "SingularityType":
        return cls("WorseThanADE")

    @classmethod
    def unclassified_quotient(cls) -> "SingularityType":
        return cls("UnclassifiedQuotient")

    # -- queries ---------------------------------------------------------------

    def is_du_val(self) -> bool:
        return self.kind in ("A", "D", "E")

    def group_order(self) -> int:
        """Order of the local fundamental group (ADE binary group / cyclic n)."""
        if self.kind == "A":
            return self.index + 1
        if self.kind == "D":
            return 4 * (self.index - 2)
        if self.kind == "E":
            return {6: 24, 7: 48, 8: 120}[self.index]
        if self.kind == "CyclicQuotient":
            return self.order
        raise MathDomainError(f"{self.label()} has no classified group order")

    def label(self) -> str:
        if self.kind in ("A", "D", "E"):
            return f"{self.kind}{self.index}"
        if self.kind == "CyclicQuotient":
            return f"1/{self.order}(1,{self.weight})"
        if self.kind == "UnclassifiedQuotient":
            return "unclassified-quotient"
        return self.kind

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class CurveGerm:
    """A plane-curve germ at the origin with a working truncation order."""

    f: MultiPoly
    truncation_order: int | None = None

    def __post_init__(self):
        if self.truncation_order is None:
            object.__setattr__(self, "truncation_order", default_truncation())
        if len(self.f.variables) != 2:
            raise MathDomainError("curve germ needs exactly two variables")
        if self.f.is_zero():
            raise DegenerateInputError("zero polynomial is not a germ")
        if self.f.coefficient((0, 0)):
            raise MathDomainError("germ must vanish at the origin")
        if self.truncation_order < 2:
            raise MathDomainError("truncation order must be at least 2")


def quotient_singularity_test(f: MultiPoly) -> bool:
    """Necessary condition for w²=f (or its Z/2 quotient) to be a quotient
    singularity: f contains a monomial of total degree at most three."""
    if f.coefficient(tuple(0 for _ in f.variables)):
        raise MathDomainError("germ must vanish at the origin")
    return any(sum(e) <= 3 for e in f.terms)


# -- series helpers -------------------------------------------------------------


def _coeff_list_in_x(p: MultiPoly, n: int) -> list[Coefficient]:
    """p(x, 0-var) as a univariate list; p must involve only the first variable."""
    out: list[Coefficient] = [Fraction(0)] * n
    for e, c in p.terms.items():
        if e[1] != 0:
            raise MathDomainError("not univariate in the first variable")
        if e[0] < n:
            out[e[0]] = c
    return out


def _eval_on_series(p: MultiPoly, series: list[Coefficient], n: int) -> list[Coefficient]:
    """p(x, y=series(x)) mod x^n, as a univariate coefficient list."""
    by_y = p.as_univariate(p.variables[1])
    powers: list[list[Coefficient]] = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    while len(powers) < len(by_y):
        powers.append(univar.series_mul(powers[-1], series, n))
    acc = [Fraction(0)] * n
    for d, coeff_poly in enumerate(by_y):
        if coeff_poly.is_zero():
            continue
        cs = _coeff_list_in_x(coeff_poly, n)
        term = univar.series_mul(cs, powers[d], n)
        acc = [a + b for a, b in zip(acc, term)]
    return acc


def _newton_critical_series(f: MultiPoly, n: int) -> list[Coefficient]:
    """The series y0(x) with f_y(x, y0) = 0 mod x^n (f has y²-unit tangent data)."""
    y_var = f.variables[1]
    fy = f.derivative(y_var)
    fyy = fy.derivative(y_var)
    y0: list[Coefficient] = [Fraction(0)] * n
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        num = _eval_on_series(fy, y0, prec)
        den = _eval_on_series(fyy, y0, prec)
        inv = univar.series_inverse(den, prec)
        corr = univar.series_mul(num, inv, prec)
        y0 = [a - b for a, b in zip(y0, corr + [Fraction(0)] * (n - len(corr)))]
    return y0


# -- the classifier --------------------------------------------------------------


def _has_repeated_branch_through_origin(f: MultiPoly) -> bool:
    """Exact non-reducedness test: a repeated factor vanishing at the origin.

    This can be expensive on dense inputs, so the classifiers consult it
    lazily: only where it decides NonNormal against WorseThanADE, or as the
    last resort when the truncation budget is exhausted.
    """
    x_var, y_var = f.variables
    g = gcd_multi(f, f.derivative(x_var))
    if not g.is_constant():
        g = gcd_multi(g, f.derivative(y_var))
    if g.is_constant():
        return False
    return not g.coefficient((0, 0))


def _split_double_root(quad: MultiPoly) -> tuple[Coefficient, str]:
    """For a rank-1 binary quadratic a·x² + b·xy + c·y², return (shear, main).

    main = 'y' means quad = c (y + s x)² and the germ should be sheared by
    y -> y - s x; main = 'x' is the mirrored case.
    """
    x_var, y_var = quad.variables
    a = quad.coefficient((2, 0))
    b = quad.coefficient((1, 1))
    c = quad.coefficient((0, 2))
    if c:
        return b * coeff_inverse(2 * c), "y"
    if a:
        return b * coeff_inverse(2 * a), "x"
    raise MathDomainError("quadratic part is not rank one")  # b²=4ac with a=c=0 forces b=0


def _classify_mult2(f: MultiPoly, truncation: int) -> SingularityType:
    x_var, y_var = f.variables
    quad = f.homogeneous_part(2)
    a = quad.coefficient((2, 0))
    b = quad.coefficient((1, 1))
    c = quad.coefficient((0, 2))
    disc = b * b - 4 * a * c
    if disc:
        return SingularityType.A(1)
    s, main = _split_double_root(quad)
    x_p = MultiPoly.variable(f.variables, x_var)
    y_p = MultiPoly.variable(f.variables, y_var)
    if main == "y":
        h = f.substitute({y_var: y_p - s * x_p}) if s else f
    else:
        h = f.substitute({x_var: x_p - s * y_p}) if s else f
        h = MultiPoly(
            f.variables, {(e[1], e[0]): cf for e, cf in h.terms.items()}
        )  # swap roles so the double tangent is the second variable
    # h now has tangent cone = unit * y², complete the square
    y0 = _newton_critical_series(h, truncation)
    residual = _eval_on_series(h, y0, truncation)
    ord_ = univar.order(residual)
    if ord_ is None:
        raise TruncationError()
    return SingularityType.A(ord_ - 1)


def _linear_change_sending(f: MultiPoly, ell: MultiPoly, comp: MultiPoly) -> MultiPoly:
    """Rewrite f in coordinates (x', y') with comp = x', ell = y'.

    ell and comp are independent linear forms in the germ variables.
    """
    x_var, y_var = f.variables
    a = ell.coefficient((1, 0))
    b = ell.coefficient((0, 1))
    c = comp.coefficient((1, 0))
    d = comp.coefficient((0, 1))
    det = a * d - b * c
    if not det:
        raise MathDomainError("linear forms are not independent")
    inv = coeff_inverse(det)
    # [y'; x'] = [[a,b],[c,d]] [x; y]  =>  x = (d*y' - b*x')/det, y = (-c*y' + a*x')/det
    x_p = MultiPoly.variable(f.variables, x_var)
    y_p = MultiPoly.variable(f.variables, y_var)
    x_image = (d * inv) * y_p - (b * inv) * x_p
    y_image = (a * inv) * x_p - (c * inv) * y_p
    # note: images written in (x', y') reusing the same variable names
    return f.substitute({x_var: x_image, y_var: y_image})


def _classify_mult3(f: MultiPoly, truncation: int) -> SingularityType:
    x_var, y_var = f.variables
    cone = f.homogeneous_part(3)
    rep = gcd_multi(gcd_multi(cone, cone.derivative(x_var)), cone.derivative(y_var))
    if rep.is_constant():
        return SingularityType.D(4)
    if rep.total_degree() == 1:
        # double line rep, simple line cone/(rep²)
        ell = rep
        quot = cone.divide_exact(ell * ell).monic_grlex()
        h = _linear_change_sending(f, ell, quot)
        # cone(h) = const * x * y²; blow up along the double tangent: y -> x*y, divide by x³
        x_p = MultiPoly.variable(f.variables, x_var)
        y_p = MultiPoly.variable(f.variables, y_var)
        blown = h.substitute({y_var: x_p * y_p})
        strict = MultiPoly(
            f.variables, {(e[0] - 3, e[1]): c for e, c in blown.terms.items()}
        )
        t = classify_curve_germ(CurveGerm(strict, truncation))
        if t.kind == "Smooth":
            return SingularityType.D(5)
        if t.kind == "A":
            return SingularityType.D(t.index + 5)
        if t.kind == "NonNormal":
            return SingularityType.non_normal()
        raise MathDomainError("unexpected strict-transform type in D-series recursion")
    # triple line: rep = ell², recover ell as its squarefree part
    ell = rep.divide_exact(
        gcd_multi(gcd_multi(rep, rep.derivative(x_var)), rep.derivative(y_var))
    ).monic_grlex()
    comp = (
        MultiPoly.variable(f.variables, y_var)
        if ell.coefficient((1, 0))
        else MultiPoly.variable(f.variables, x_var)
    )
    h = _linear_change_sending(f, ell, comp)
    # cone(h) = const * y³; quasihomogeneous tests (conditioned order matters)
    if h.coefficient((4, 0)):
        return SingularityType.E(6)
    if h.coefficient((3, 1)):
        return SingularityType.E(7)
    if h.coefficient((5, 0)):
        return SingularityType.E(8)
    if _has_repeated_branch_through_origin(f):
        return SingularityType.non_normal()
    return SingularityType.worse_than_ade()


def classify_curve_germ(germ: CurveGerm | MultiPoly, truncation: int | None = None) -> SingularityType:
    """ADE type of a plane-curve germ at the origin.

    Raises "raise truncation order" only when the working precision is provably
    insufficient even after doubling up to the maximum.
    """
    if isinstance(germ, MultiPoly):
        germ = CurveGerm(germ, truncation or default_truncation())
    elif truncation is not None:
        germ = CurveGerm(germ.f, truncation)
    f = germ.f
    m = f.min_total_degree()
    if m == 1:
        return SingularityType.smooth()
    if m >= 4:
        if _has_repeated_branch_through_origin(f):
            return SingularityType.non_normal()
        return SingularityType.worse_than_ade()
    n = germ.truncation_order
    while True:
        try:
            if m == 2:
                return _classify_mult2(f, n)
            return _classify_mult3(f, n)
        except TruncationError:
            if n >= MAX_TRUNCATION:
                if _has_repeated_branch_through_origin(f):
                    return SingularityType.non_normal()
                raise
            n = min(2 * n, MAX_TRUNCATION)


def double_cover_type(germ: CurveGerm | MultiPoly, truncation: int | None = None) -> SingularityType:
    """Type of the point of the double cover w² = f above the germ's origin.

    The correspondence is letter- and index-preserving: an A/D/E branch germ
    yields the same-letter Du Val point; smooth (or not-through-origin) branch
    data yields a smooth cover point.
    """
    f = germ.f if isinstance(germ, CurveGerm) else germ
    if f.is_zero():
        raise DegenerateInputError("zero polynomial is not a germ")
    if f.coefficient((0, 0)):
        return SingularityType.smooth()  # branch does not pass through the point
    t = classify_curve_germ(germ, truncation)
    return t  # identity on {Smooth, A, D, E, NonNormal, WorseThanADE}


def vertex_quotient_type(branch_germ: MultiPoly, truncation: int | None = None) -> SingularityType | None:
    """Type of the Z/2-vertex point of a double cover when the branch meets it.

    Models the cover point as {w² = g(u,v)} quotiented by
    (u,v,w) -> (-u,-v,-w).  Recognized branch germs: unit (vertex not on the
    branch) -> None (smooth, omitted); smooth germ -> A1; A1 germ -> 1/4(1,1);
    A3 germ -> 1/8(1,3).  Everything else is reported as unclassified rather
    than guessed.
    """
    if branch_germ.coefficient((0, 0)):
        return None
    t = classify_curve_germ(CurveGerm(branch_germ, truncation or default_truncation()))
    if t.kind == "Smooth":
        return SingularityType.A(1)
    if t == SingularityType.A(1):
        return SingularityType.cyclic_quotient(4, 1)
    if t == SingularityType.A(3):
        return SingularityType.cyclic_quotient(8, 3)
    return SingularityType.unclassified_quotient()


# -- surface germs ----------------------------------------------------------------


def _mp_series_inverse(p: MultiPoly, n: int) -> MultiPoly:
    """Inverse of a unit multivariate series, truncated at total degree n."""
    c0 = p.coefficient(tuple(0 for _ in p.variables))
    if not c0:
        raise ZeroDivisionError("series has no inverse (zero constant term)")
    inv = MultiPoly.constant(p.variables, coeff_inverse(c0))
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        t = p.truncate(prec).mul_truncated(inv, prec)
        inv = inv.mul_truncated(2 - t, prec)
    return inv.truncate(n)


def _surface_has_repeated_component_through_origin(f: MultiPoly) -> bool:
    """Exact non-reducedness test for a three-variable germ (see the curve
    analogue for when this is consulted)."""
    g = f
    for v in f.variables:
        g = gcd_multi(g, f.derivative(v))
        if g.is_constant():
            return False
    return not g.coefficient((0, 0, 0))


def classify_surface_germ(f: MultiPoly, truncation: int | None = None) -> SingularityType:
    """ADE type of an isolated surface germ f(u,v,w)=0 at the origin.

    Splits off one square by a Newton iteration and classifies the residual
    plane-curve germ; the surface type carries the same letter and index.
    """
    if len(f.variables) != 3:
        raise MathDomainError("surface germ needs exactly three variables")
    if f.is_zero():
        raise DegenerateInputError("zero polynomial is not a germ")
    if f.coefficient((0, 0, 0)):
        raise MathDomainError("germ must vanish at the origin")
    m = f.min_total_degree()
    if m == 1:
        return SingularityType.smooth()
    if m >= 3:
        if _surface_has_repeated_component_through_origin(f):
            return SingularityType.non_normal()
        return SingularityType.worse_than_ade()
    n = truncation or default_truncation()
    while True:
        t = _split_square_and_classify(f, n)
        if t is not None:
            return t
        if n >= MAX_TRUNCATION:
            # last resort: decide exactly whether the stall is a repeated
            # component (the only way a germ evades every finite precision)
            if _surface_has_repeated_component_through_origin(f):
                return SingularityType.non_normal()
            raise TruncationError()
        n = min(2 * n, MAX_TRUNCATION)


def _split_square_and_classify(f: MultiPoly, n: int) -> SingularityType | None:
    variables = f.variables
    quad = f.homogeneous_part(2)
    # find a coordinate with nonzero square coefficient, shearing once if needed
    sq_idx = None
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 2
        if quad.coefficient(tuple(e)):
            sq_idx = i
            break
    if sq_idx is None:
        # all squares vanish; some cross term is nonzero: shear x_i -> x_i + x_j
        for i in range(3):
            for j in range(i + 1, 3):
                e = [0, 0, 0]
                e[i] += 1
                e[j] += 1
                if quad.coefficient(tuple(e)):
                    vi = MultiPoly.variable(variables, variables[i])
                    vj = MultiPoly.variable(variables, variables[j])
                    f = f.substitute({variables[i]: vi + vj})
                    sq_idx = j  # (x_i + x_j) * x_j contributes the x_j square
                    break
            if sq_idx is not None:
                break
    u_var = variables[sq_idx]
    rest = [v for v in variables if v != u_var]
    # Newton: solve f_u(u0, v, w) = 0 as a series u0(v, w)
    fu = f.derivative(u_var)
    fuu = fu.derivative(u_var)
    u0 = MultiPoly.zero(variables)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        num = _substitute_series(fu, u_var, u0, prec)
        den = _substitute_series(fuu, u_var, u0, prec)
        corr = num.mul_truncated(_mp_series_inverse(den, prec), prec)
        u0 = (u0 - corr).truncate(prec)
    residual = _substitute_series(f, u_var, u0, n)
    if residual.is_zero():
        return None  # could be a truncation artifact; retry at higher precision
    residual2 = residual.restrict_variables(rest)
    t = classify_curve_germ(CurveGerm(residual2, min(n, MAX_TRUNCATION)))
    if t.kind == "NonNormal":
        # A non-reduced-looking residual may be an artifact of truncation
        # (e.g. a square whose partner term sits beyond the cutoff), so retry;
        # the caller settles genuine non-reducedness exactly at exhaustion.
        return None
    return t


def substitute_series(p: MultiPoly, var: str, series: MultiPoly, n: int) -> MultiPoly:
    """p with ``var`` replaced by a series (truncated at total degree n)."""
    coeffs = p.as_univariate(var)
    acc = MultiPoly.zero(p.variables)
    power = MultiPoly.constant(p.variables, 1)
    for d, c in enumerate(coeffs):
        if d:
            power = power.mul_truncated(series, n)
        if not c.is_zero():
            acc = acc + c.truncate(n).mul_truncated(power, n)
    return acc.truncate(n)


_substitute_series = substitute_series


def solve_implicit_series(f: MultiPoly, var: str, n: int) -> MultiPoly:
    """The series phi (in the other variables) with f(var=phi) = 0 mod degree n.

    Implicit function theorem data: f vanishes at the origin and df/dvar is a
    unit there; the Newton iteration doubles the precision each round.
    """
    origin = tuple(0 for _ in f.variables)
    if f.coefficient(origin):
        raise MathDomainError("implicit solve needs f(0) = 0")
    fv = f.derivative(var)
    if not fv.coefficient(origin):
        raise MathDomainError("implicit solve needs a unit partial derivative")
    phi = MultiPoly.zero(f.variables)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        num = substitute_series(f, var, phi, prec)
        den = substitute_series(fv, var, phi, prec)
        phi = (phi - num.mul_truncated(_mp_series_inverse(den, prec), prec)).truncate(prec)
    return phi
