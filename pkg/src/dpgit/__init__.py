"""Exact singularity profiling and GIT stability for low-degree del Pezzo surfaces.

The package decides, over exact rational (or Gaussian-rational) arithmetic:

* the singular locus and ADE/cyclic-quotient profile of cubic surfaces,
  quartic del Pezzo pencils, and double covers of weighted planes;
* GIT stability classes via the Hilbert-Mumford criterion, with
  machine-checkable destabilizing one-parameter subgroups;
* classical invariants of binary quintics and the induced moduli points;
* the combinatorial side: T-singularities, Hirzebruch-Jung strings,
  Markov-type triples, and the order-bound singularity menus.

The ``dpgit`` command-line tool exposes the same operations on small input
files; see :mod:`dpgit.cli`.
"""

from .catalog import (
    FixtureReport,
    SurfaceFixture,
    document_pencil,
    document_profile,
    document_stability,
    fixture,
    fixture_names,
    fixture_text,
    load_document,
    verify_all,
    verify_fixture,
)
from .deform import DefSpace, def_polystability, def_space, destabilizing_1ps
from .enumer import (
    BergmanExponents,
    HJString,
    TSingularity,
    bergman_exponents,
    gh_menu,
    hj_expansion,
    is_markov_solution,
    is_t_singularity,
    markov_mutations,
    markov_solutions,
    noether_check,
    order_bound_filter,
)
from .errors import (
    DegenerateInputError,
    DpgitError,
    ExcludedByClassificationError,
    MathDomainError,
    ParseError,
    TowerExtensionError,
    TruncationError,
)
from .fields import FieldElement, NumberField, gaussian_field
from .germ import (
    CurveGerm,
    SingularityType,
    classify_curve_germ,
    default_truncation,
    double_cover_type,
    set_default_truncation,
)
from .gitstab import (
    StabilityClass,
    TorusPoint,
    binary_form_stability,
    cubic_stability,
    exceptional_E_stability,
    plane_quartic_stability,
    quartic_dp_stability,
    sextic_dp1_stability,
    torus_stability,
)
from .moduli import (
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
from .parsing import Ambient, InputDocument, canonical_text, parse, render_poly
from .polyalg import MultiPoly, WeightSystem
from .singular import QuadricPencil, SurfaceProfile, profile_cubic, profile_double_cover, profile_pencil

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "BergmanExponents",
    "CurveGerm",
    "DefSpace",
    "DegenerateInputError",
    "DpgitError",
    "ExcludedByClassificationError",
    "FieldElement",
    "FixtureReport",
    "HJString",
    "InputDocument",
    "MathDomainError",
    "ModuliPoint123",
    "MultiPoly",
    "NumberField",
    "ParseError",
    "QuadricPencil",
    "QuinticData",
    "SingularityType",
    "StabilityClass",
    "SurfaceFixture",
    "SurfaceProfile",
    "TSingularity",
    "TorusPoint",
    "TowerExtensionError",
    "TruncationError",
    "WeightSystem",
    "__version__",
    "bergman_exponents",
    "binary_form_stability",
    "blowup_substitution",
    "canonical_text",
    "classify_curve_germ",
    "cubic_stability",
    "def_polystability",
    "def_space",
    "default_truncation",
    "destabilizing_1ps",
    "divisor_check_deg3",
    "divisor_check_deg4",
    "divisor_constant_deg4",
    "document_pencil",
    "document_profile",
    "document_stability",
    "double_cover_type",
    "exceptional_E_stability",
    "fixture",
    "fixture_names",
    "fixture_text",
    "gaussian_field",
    "gh_menu",
    "hj_expansion",
    "is_markov_solution",
    "is_t_singularity",
    "load_document",
    "markov_mutations",
    "markov_solutions",
    "noether_check",
    "order_bound_filter",
    "p0_pair",
    "parse",
    "pencil_to_quintic",
    "plane_quartic_stability",
    "profile_cubic",
    "profile_double_cover",
    "profile_pencil",
    "quartic_dp_stability",
    "quintic_invariants",
    "quintic_invariants_raw",
    "render_poly",
    "set_default_truncation",
    "sextic_dp1_stability",
    "torus_stability",
    "transvectant",
    "verify_all",
    "verify_fixture",
]
