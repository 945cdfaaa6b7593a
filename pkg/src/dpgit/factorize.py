"""Univariate factorization seam.

All rational univariate factorization is funneled through this module (backed
by sympy); everything downstream consumes the deterministic output format.
Factorization over a simple extension Q(a) is done by the norm method:
resultant against the minimal polynomial, factor the norm over Q, then gcd
back over Q(a).  Only single extensions are supported; a root that would
require a second extension raises :class:`TowerExtensionError`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

from . import univar
from .errors import TowerExtensionError
from .fields import Coefficient, FieldElement, NumberField, coeff_key

_X = sympy.Symbol("x")


def _to_sympy(coeffs: Sequence[Fraction]):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in coeffs])), _X, domain="QQ")


def _from_sympy(poly) -> list[Fraction]:
    return [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]


def factor_rational(coeffs: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Monic irreducible factors of a rational polynomial with multiplicities.

    Returns (factor, multiplicity) pairs, factors monic with constant term
    first, sorted by (degree, coefficient tuple) for determinism.
    """
    p = univar.trim([Fraction(c) for c in coeffs])
    if univar.degree(p) <= 0:
        return []
    _, factors = _to_sympy(p).factor_list()
    out = []
    for f, mult in factors:
        fc = univar.monic(_from_sympy(f))
        out.append((fc, int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), [(c.numerator, c.denominator) for c in fm[0]]))
    return out


def is_irreducible(coeffs: Sequence[Fraction]) -> bool:
    factors = factor_rational(coeffs)
    return len(factors) == 1 and factors[0][1] == 1


_field_cache: dict[tuple, NumberField] = {}
_FIELD_NAMES = "abcdefg"


def number_field_from_factor(coeffs: Sequence[Fraction]) -> NumberField:
    """A number field for a certified irreducible monic factor (cached)."""
    key = tuple(Fraction(c) for c in coeffs)
    if key not in _field_cache:
        name = _FIELD_NAMES[len(_field_cache) % len(_FIELD_NAMES)]
        _field_cache[key] = NumberField(name, key)
    return _field_cache[key]


def rational_root_clusters(coeffs: Sequence[Fraction]):
    """Roots of a rational polynomial, grouped by Galois conjugacy.

    Returns a list of (root, field, cluster_size, multiplicity) where ``root``
    is a Fraction for rational roots or the generator of a fresh
    :class:`NumberField` for an irreducible factor of degree >= 2 (one
    representative per conjugacy cluster). Deterministic order.
    """
    out = []
    for f, mult in factor_rational(coeffs):
        deg = univar.degree(f)
        if deg == 1:
            out.append((-f[0], None, 1, mult))
        else:
            field = number_field_from_factor(f)
            out.append((field.generator(), field, deg, mult))
    return out


def _roots_over_extension(coeffs: Sequence[Coefficient], field: NumberField):
    """In-field roots of a polynomial over Q(a) via the Trager norm method.

    Returns (roots, leftover_degree) where leftover_degree is the total degree
    of irreducible factors of degree >= 2 (they would need a tower).
    """
    n = field.degree
    m = list(field.min_poly)

    def lift(c: Coefficient) -> list[Fraction]:
        if isinstance(c, FieldElement):
            return list(c.coeffs)
        return [Fraction(c)] + [Fraction(0)] * (n - 1)

    # Work with squarefree part to keep the norm squarefree-able.
    p = univar.squarefree_part(list(coeffs))
    deg_p = univar.degree(p)
    if deg_p <= 0:
        return [], 0

    for shift in range(0, 8):
        # q(x) = p(x - shift * a), coefficients as polynomials in t (the generator)
        a = field.generator()
        if shift == 0:
            q = [lift(c) for c in p]
        else:
            s = a * shift
            # substitute x -> x - s via Horner on (x - s)
            acc: list[FieldElement] = []  # poly in x with FieldElement coeffs
            for c in reversed(p):
                # acc = acc * (x - s) + c
                new = [field.element(lift(0))] * (len(acc) + 1)
                for i, ac in enumerate(acc):
                    new[i + 1] = new[i + 1] + ac
                    new[i] = new[i] - ac * s
                ce = c if isinstance(c, FieldElement) else field.element(lift(c))
                new[0] = new[0] + ce
                acc = new
            q = [list(c.coeffs) for c in acc]
        # Norm(x) = Res_t(min_poly(t), q_t(x)) -- computed as a determinant-free
        # resultant via sympy on the bivariate representation.
        t = sympy.Symbol("t")
        qx = sum(
            sympy.Rational(cf) * t**j * _X**i
            for i, cs in enumerate(q)
            for j, cf in enumerate(cs)
            if cf
        )
        mp = sum(sympy.Rational(c) * t**k for k, c in enumerate(m))
        norm = sympy.resultant(sympy.expand(mp), sympy.expand(qx), t)
        norm_poly = sympy.Poly(norm, _X, domain="QQ")
        norm_coeffs = _from_sympy(norm_poly)
        if univar.degree(univar.squarefree_part(norm_coeffs)) == univar.degree(norm_coeffs):
            # squarefree norm: factor over Q and map factors back via gcd.
            # Each rational factor fac of Norm(p(x - s a)) pairs with the
            # factor gcd(p(x), fac(x + s a)) of the *original* p over Q(a).
            roots: list[Coefficient] = []
            leftover = 0
            qq = [c if isinstance(c, FieldElement) else field.element(lift(c)) for c in p]
            for fac, _mult in factor_rational(norm_coeffs):
                if shift == 0:
                    fac_shift = [field.element(lift(c)) for c in fac]
                else:
                    s = a * shift
                    acc2: list[FieldElement] = []
                    for c in reversed(fac):
                        new = [field.element(lift(0))] * (len(acc2) + 1)
                        for i, ac in enumerate(acc2):
                            new[i + 1] = new[i + 1] + ac
                            new[i] = new[i] + ac * s
                        new[0] = new[0] + field.element(lift(c))
                        acc2 = new
                    fac_shift = acc2
                g = univar.gcd(qq, fac_shift)
                dg = univar.degree(g)
                if dg == 1:
                    roots.append(-g[0])
                elif dg >= 2:
                    leftover += dg
            return roots, leftover
    raise TowerExtensionError("could not separate conjugates (norm never squarefree)")


def roots_in_field(coeffs: Sequence[Coefficient], field: NumberField | None):
    """All roots lying in Q (field None) or in the given extension.

    Returns (roots, leftover_degree); leftover_degree counts roots that live
    outside the field (callers decide whether that is a tower error).
    """
    p = univar.trim(list(coeffs))
    if univar.degree(p) <= 0:
        return [], 0
    if field is None:
        roots = []
        leftover = 0
        for f, _mult in factor_rational([Fraction(c) for c in p]):
            if univar.degree(f) == 1:
                roots.append(-f[0])
            else:
                leftover += univar.degree(f)
        return roots, leftover
    return _roots_over_extension(p, field)
