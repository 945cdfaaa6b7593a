"""Reference surfaces with known singularity profiles and stability classes.

Each fixture is stored as a ``.dpg`` document (see :mod:`dpgit.parsing`) under
``data/fixtures/``; the registry attaches the expected profile, the expected
stability class, and, for the toric members, an explicit parametrization from
a product of projective lines whose image satisfies the defining equations.
:func:`verify_fixture` recomputes everything from the document and compares.

The module also houses the document-level dispatch used by the command line:
:func:`document_profile` and :func:`document_stability` map a parsed document
to the right classifier for its ambient space.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .deform import def_polystability, def_space
from .errors import DegenerateInputError, MathDomainError
from .gitstab import (
    StabilityClass,
    binary_form_stability,
    cubic_stability,
    exceptional_E_stability,
    plane_quartic_stability,
    quartic_dp_stability,
    sextic_dp1_stability,
)
from .parsing import Ambient, InputDocument, parse
from .polyalg import MultiPoly
from .singular import QuadricPencil, SurfaceProfile, profile_cubic, profile_double_cover, profile_pencil

_FIXTURE_DIR = Path(__file__).parent / "data" / "fixtures"

# double-cover reductions: ambient weights -> (base, weight of the cover coordinate)
_SQUARE_COVERS = {(1, 1, 1, 2): "P2", (1, 1, 2, 3): "P(1,1,2)"}
_PAIR_COVERS = {(1, 1, 4, 4): "P(1,1,4)", (1, 2, 9, 9): "P(1,2,9)"}


# -- document-level dispatch --------------------------------------------------------


def cover_reduction(ambient: Ambient, f: MultiPoly) -> tuple[str, MultiPoly]:
    """Rewrite a double-cover equation as (base space, branch curve).

    Two shapes are recognized: ``w^2 = B(x,y,z)`` with ``w`` the unique
    heaviest variable, and ``c*u*v = h(x,y)`` with ``u, v`` the two heaviest
    variables (then ``u = z+w, v = z-w`` turns the equation into
    ``w^2 = z^2 - h``).
    """
    weights = tuple(ambient.weights)
    names = ambient.variables
    if weights in _SQUARE_COVERS:
        w = names[3]
        parts = f.as_univariate(w)
        if len(parts) != 3 or not parts[2].is_constant():
            raise MathDomainError(f"equation must be quadratic in {w}")
        c = parts[2].constant_value()
        if not c:
            raise DegenerateInputError(f"no {w}^2 term")
        if not parts[1].is_zero():
            raise MathDomainError(f"equation must have no linear {w} term")
        branch = (-parts[0] / c).restrict_variables(names[:3])
        return _SQUARE_COVERS[weights], branch
    if weights in _PAIR_COVERS:
        u, v = names[2], names[3]
        c = None
        base_terms: dict[tuple[int, ...], object] = {}
        for exps, coeff in f.terms.items():
            if exps[2:] == (1, 1) and exps[:2] == (0, 0):
                c = coeff
            elif exps[2:] == (0, 0):
                base_terms[exps[:2]] = coeff
            else:
                raise MathDomainError(
                    f"equation must be of the shape c*{u}*{v} + h({names[0]},{names[1]})"
                )
        if c is None:
            raise DegenerateInputError(f"no {u}*{v} term")
        zname = next(n for n in ("z", "w", "u", "v", "t") if n not in names[:2])
        new_names = (names[0], names[1], zname)
        # c*u*v + g = 0 with u = z+w, v = z-w  <=>  w^2 = z^2 + g/c
        branch = MultiPoly(new_names, {(a, b, 0): coeff / c for (a, b), coeff in base_terms.items()})
        branch = branch + MultiPoly.monomial(new_names, (0, 0, 2), 1)
        return _PAIR_COVERS[weights], branch
    raise MathDomainError(f"ambient {ambient.label()} is not a recognized double-cover shape")


def document_pencil(doc: InputDocument) -> QuadricPencil:
    if len(doc.matrices) >= 2:
        return QuadricPencil.from_matrices(doc.matrices[0].rows, doc.matrices[1].rows)
    if len(doc.polys) != 2:
        raise MathDomainError("a quadric pencil needs two polynomial (or two matrix) blocks")
    return QuadricPencil.from_quadrics(doc.polys[0].poly, doc.polys[1].poly)


def document_profile(doc: InputDocument) -> SurfaceProfile:
    """The singularity profile of the surface a document describes."""
    ambient = doc.require_ambient()
    weights = tuple(ambient.weights)
    if weights == (1, 1, 1, 1, 1):
        return profile_pencil(document_pencil(doc))
    if weights == (1, 1, 1, 1):
        return profile_cubic(doc.poly())
    base, branch = cover_reduction(ambient, doc.poly())
    return profile_double_cover(base, branch)


def _sextic_branch_stability(branch: MultiPoly) -> tuple[StabilityClass, str]:
    """Stability of w^2 = branch over P(1,1,2), via the degree-1 GIT families."""
    x, y, z = branch.variables
    parts = branch.as_univariate(z)
    parts += [MultiPoly.zero(branch.variables)] * (4 - len(parts))
    binary = lambda p: p.restrict_variables((x, y))
    a_part = parts[3]
    if not a_part.is_zero():
        a = a_part.constant_value()
        f2 = parts[2]
        if not f2.is_zero():
            # complete the cube: z -> z - f2/(3a) removes the z^2 term
            zvar = MultiPoly.variable(branch.variables, z)
            branch = branch.substitute(
                {x: MultiPoly.variable(branch.variables, x),
                 y: MultiPoly.variable(branch.variables, y),
                 z: zvar - f2 / (a * 3)}
            )
            parts = branch.as_univariate(z)
            parts += [MultiPoly.zero(branch.variables)] * (4 - len(parts))
            if not parts[2].is_zero():
                raise MathDomainError("failed to remove the z^2 term")
        # w^2 = a(z^3 + p z + q) has the same branch curve as z^3 + p z + q
        return sextic_dp1_stability(binary(parts[1]) / a, binary(parts[0]) / a), "sextic-family"
    f2 = binary(parts[2])
    if f2.is_zero():
        raise DegenerateInputError("branch sextic degenerate in z: outside the classified families")
    s = MultiPoly.variable((x, y), x) ** 2 + MultiPoly.variable((x, y), y) ** 2
    c = f2.coefficient((2, 0))
    if c and f2 == s * c:
        return exceptional_E_stability(binary(parts[1]) / c, binary(parts[0]) / c), "exceptional-family"
    # the rank-one quadratic part: only the A7 + 1/8(1,3) surface is classified
    for xa, ya in ((x, y), (y, x)):
        ca = branch.coefficient(_exps(branch.variables, {z: 2, xa: 2}))
        if ca and branch == ca * (
            MultiPoly.variable(branch.variables, z) ** 2 * MultiPoly.variable(branch.variables, xa) ** 2
            + MultiPoly.variable(branch.variables, z) * MultiPoly.variable(branch.variables, ya) ** 4
        ):
            space = def_space("X1e")
            return def_polystability(space, (0,) * space.dimension), "torus-deformation"
    raise MathDomainError("branch sextic outside the classified families")


def _exps(names: tuple[str, ...], assignment: dict[str, int]) -> tuple[int, ...]:
    return tuple(assignment.get(n, 0) for n in names)


def document_stability(doc: InputDocument) -> tuple[StabilityClass, str]:
    """GIT stability of the surface a document describes, plus the judge used."""
    ambient = doc.require_ambient()
    weights = tuple(ambient.weights)
    if weights == (1, 1, 1, 1, 1):
        return quartic_dp_stability(document_pencil(doc)), "quadric-pencil"
    if weights == (1, 1, 1, 1):
        return cubic_stability(doc.poly()), "cubic-form"
    base, branch = cover_reduction(ambient, doc.poly())
    if base == "P2":
        return plane_quartic_stability(branch), "plane-quartic"
    if base == "P(1,1,4)":
        octic = branch - MultiPoly.monomial(branch.variables, (0, 0, 2), 1)
        return binary_form_stability(-octic.restrict_variables(branch.variables[:2])), "binary-octic"
    if base == "P(1,1,2)":
        return _sextic_branch_stability(branch)
    # P(1,2,9): only the toric surface x3 x4 = x2^9 is classified
    octadecic = branch - MultiPoly.monomial(branch.variables, (0, 0, 2), 1)
    h = -octadecic.restrict_variables(branch.variables[:2])
    if h == MultiPoly.monomial(h.variables, (0, 9), h.coefficient((0, 9))) and not h.is_zero():
        space = def_space("X1T")
        return def_polystability(space, (0,) * space.dimension), "torus-deformation"
    raise MathDomainError("the degree-1 toric family covers only x3*x4 = c*x2^9")


# -- fixture registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Parametrization:
    """A coordinate map from a source torus/product onto the surface."""

    source_variables: tuple[str, ...]
    images: tuple[MultiPoly, ...]


@dataclass(frozen=True)
class SurfaceFixture:
    name: str
    filename: str
    summary: str
    expected_labels: tuple[str, ...]
    expected_stability: str
    expected_normal: bool = True
    parametrization: Parametrization | None = None


def _param(source: tuple[str, ...], *monomials: dict[str, int]) -> Parametrization:
    images = tuple(
        MultiPoly.monomial(source, tuple(m.get(v, 0) for v in source), 1) for m in monomials
    )
    return Parametrization(source, images)


_Z3 = ("z1", "z2", "z3")
_ZW = ("z1", "z2", "w1", "w2")

FIXTURES: tuple[SurfaceFixture, ...] = (
    SurfaceFixture(
        "x4-toric",
        "x4_toric.dpg",
        "degree-4 intersection of two quadrics with four nodes",
        ("A1", "A1", "A1", "A1"),
        "PolystableNotStable",
        parametrization=_param(
            _ZW,
            {"z1": 2, "w1": 2},
            {"z2": 2, "w2": 2},
            {"z1": 1, "z2": 1, "w1": 1, "w2": 1},
            {"z1": 2, "w2": 2},
            {"z2": 2, "w1": 2},
        ),
    ),
    SurfaceFixture(
        "x3-toric",
        "x3_toric.dpg",
        "degree-3 toric cubic with three A2 points",
        ("A2", "A2", "A2"),
        "PolystableNotStable",
        parametrization=_param(
            _Z3,
            {"z1": 1, "z2": 1, "z3": 1},
            {"z1": 3},
            {"z2": 3},
            {"z3": 3},
        ),
    ),
    SurfaceFixture(
        "x3-cayley",
        "x3_cayley.dpg",
        "Cayley cubic with four nodes",
        ("A1", "A1", "A1", "A1"),
        "Stable",
    ),
    SurfaceFixture(
        "x3-fermat",
        "x3_fermat.dpg",
        "smooth Fermat cubic",
        (),
        "Stable",
    ),
    SurfaceFixture(
        "x2-toric",
        "x2_toric.dpg",
        "degree-2 toric surface in P(1,1,4,4)",
        ("1/4(1,1)", "1/4(1,1)", "A3", "A3"),
        "PolystableNotStable",
        parametrization=_param(
            _ZW,
            {"z1": 1, "w1": 1},
            {"z2": 1, "w2": 1},
            {"z1": 4, "w2": 4},
            {"z2": 4, "w1": 4},
        ),
    ),
    SurfaceFixture(
        "x2-lambda-1-m1",
        "x2_lambda_1_m1.dpg",
        "degree-2 pencil member [1:-1], branch a tangent pair of conics",
        ("A3", "A3"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "x2-lambda-1-0",
        "x2_lambda_1_0.dpg",
        "degree-2 pencil member [1:0], branch a conic with two tangent lines",
        ("A1", "A3", "A3"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "x2-lambda-2-1",
        "x2_lambda_2_1.dpg",
        "degree-2 pencil member [2:1]",
        ("A3", "A3"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "x2-infinity",
        "x2_infinity.dpg",
        "degree-2 limit member, branch two lines and a tangent conic",
        ("A1", "A3", "A3"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "x1-toric",
        "x1_toric.dpg",
        "degree-1 toric surface in P(1,2,9,9)",
        ("1/9(1,2)", "1/9(1,2)", "A8"),
        "PolystableNotStable",
        parametrization=_param(
            _Z3,
            {"z1": 1},
            {"z2": 1, "z3": 1},
            {"z2": 9},
            {"z3": 9},
        ),
    ),
    SurfaceFixture(
        "x1-exceptional",
        "x1_exceptional.dpg",
        "degree-1 surface with one A7 and one 1/8(1,3) point",
        ("1/8(1,3)", "A7"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "x1-infinity",
        "x1_infinity.dpg",
        "degree-1 limit of the exceptional family",
        ("1/4(1,1)", "D4", "D4"),
        "PolystableNotStable",
    ),
    SurfaceFixture(
        "p0",
        "p0.dpg",
        "degree-1 sextic family point with a non-normal double cover",
        (),
        "PolystableNotStable",
        expected_normal=False,
    ),
)

_BY_NAME = {f.name: f for f in FIXTURES}


def fixture_names() -> list[str]:
    return [f.name for f in FIXTURES]


def fixture(name: str) -> SurfaceFixture:
    if name not in _BY_NAME:
        raise MathDomainError(f"unknown fixture {name!r} (known: {', '.join(fixture_names())})")
    return _BY_NAME[name]


def fixture_text(name: str) -> str:
    return (_FIXTURE_DIR / fixture(name).filename).read_text()


def load_document(name: str) -> InputDocument:
    return parse(fixture_text(name))


# -- verification -------------------------------------------------------------------


def verify_parametrization(name: str) -> bool:
    """Check the stored coordinate map lands on the surface (exact substitution)."""
    fx = fixture(name)
    if fx.parametrization is None:
        raise MathDomainError(f"fixture {name!r} has no parametrization")
    doc = load_document(name)
    ambient = doc.require_ambient()
    mapping = dict(zip(ambient.variables, fx.parametrization.images))
    return all(entry.poly.substitute(mapping).is_zero() for entry in doc.polys)


@dataclass(frozen=True)
class FixtureReport:
    name: str
    labels: tuple[str, ...]
    normal: bool
    stability: str
    judge: str
    profile_ok: bool
    stability_ok: bool
    parametrization_ok: bool | None
    seconds: float

    @property
    def ok(self) -> bool:
        return self.profile_ok and self.stability_ok and self.parametrization_ok is not False

    def describe(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        labels = ", ".join(self.labels) if self.labels else ("-" if self.normal else "non-normal")
        line = f"{self.name}: {status} [{labels}] {self.stability} via {self.judge}"
        if self.parametrization_ok is not None:
            line += " param:" + ("ok" if self.parametrization_ok else "BAD")
        return line + f" ({self.seconds:.2f}s)"


def verify_fixture(name: str) -> FixtureReport:
    """Recompute one fixture's profile and stability and compare to the record."""
    fx = fixture(name)
    doc = load_document(name)
    start = time.perf_counter()
    profile = document_profile(doc)
    labels = tuple(profile.expanded_labels())
    stability, judge = document_stability(doc)
    param_ok = verify_parametrization(name) if fx.parametrization is not None else None
    seconds = time.perf_counter() - start
    return FixtureReport(
        name=name,
        labels=labels,
        normal=profile.is_normal,
        stability=stability.tag,
        judge=judge,
        profile_ok=labels == fx.expected_labels and profile.is_normal == fx.expected_normal,
        stability_ok=stability.tag == fx.expected_stability,
        parametrization_ok=param_ok,
        seconds=seconds,
    )


def verify_all(names: list[str] | None = None) -> list[FixtureReport]:
    return [verify_fixture(n) for n in (names or fixture_names())]
