"""Dense univariate polynomial helpers over an exact field.

Polynomials are plain lists of coefficients, constant term first; the
coefficients are ``Fraction`` or :class:`~dpgit.fields.FieldElement` values.
These helpers back the series computations of the germ classifier and the
root bookkeeping of the singular-point solvers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .fields import Coefficient, coeff_inverse

Poly = list  # list[Coefficient], constant term first


def trim(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def is_zero(p: Sequence[Coefficient]) -> bool:
    return not any(p)


def degree(p: Sequence[Coefficient]) -> int:
    """Degree, with deg 0 = -1 by convention."""
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def order(p: Sequence[Coefficient]) -> int | None:
    """Valuation: index of the lowest nonzero coefficient (None for 0)."""
    for i, c in enumerate(p):
        if c:
            return i
    return None


def add(a: Sequence[Coefficient], b: Sequence[Coefficient]) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a: Sequence[Coefficient], b: Sequence[Coefficient]) -> Poly:
    return add(a, [-c for c in b])


def scale(a: Sequence[Coefficient], s: Coefficient) -> Poly:
    return trim([c * s for c in a])


def mul(a: Sequence[Coefficient], b: Sequence[Coefficient]) -> Poly:
    if is_zero(a) or is_zero(b):
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_poly(a: Sequence[Coefficient], b: Sequence[Coefficient]):
    a = trim(list(a))
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    inv = coeff_inverse(b[-1])
    while a and len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - c * bc
        trim(a)
    return trim(q), a


def monic(p: Sequence[Coefficient]) -> Poly:
    p = trim(list(p))
    if not p:
        return p
    inv = coeff_inverse(p[-1])
    return [c * inv for c in p]


def gcd(a: Sequence[Coefficient], b: Sequence[Coefficient]) -> Poly:
    a, b = trim(list(a)), trim(list(b))
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def derivative(p: Sequence[Coefficient]) -> Poly:
    return trim([p[i] * i for i in range(1, len(p))])


def evaluate(p: Sequence[Coefficient], x: Coefficient):
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def squarefree_part(p: Sequence[Coefficient]) -> Poly:
    p = trim(list(p))
    if degree(p) <= 0:
        return monic(p)
    return monic(divmod_poly(p, gcd(p, derivative(p)))[0])


def yun_decomposition(p: Sequence[Coefficient]) -> list[tuple[Poly, int]]:
    """Squarefree decomposition p = c * prod f_i^i (Yun's algorithm, char 0).

    Returns the list of (f_i, i) with deg f_i > 0, i ascending.
    """
    p = monic(p)
    if degree(p) <= 0:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) > 0:
        f = gcd(b, d)
        if degree(f) > 0:
            out.append((monic(f), i))
        b = divmod_poly(b, f)[0]
        c = divmod_poly(d, f)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def multiplicity_multiset(p: Sequence[Coefficient]) -> list[int]:
    """Multiplicities of all roots of p over the algebraic closure, sorted.

    Computed without factoring: Yun's decomposition gives a squarefree factor
    of each multiplicity, whose degree counts the roots of that multiplicity.
    """
    out: list[int] = []
    for f, i in yun_decomposition(p):
        out.extend([i] * degree(f))
    return sorted(out)


def max_root_multiplicity(p: Sequence[Coefficient]) -> int:
    ms = multiplicity_multiset(p)
    return ms[-1] if ms else 0


# -- truncated power series (same representation, truncated at x^n) ---------


def series_mul(a: Sequence[Coefficient], b: Sequence[Coefficient], n: int) -> Poly:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def series_inverse(a: Sequence[Coefficient], n: int) -> Poly:
    """Inverse of a unit power series mod x^n (Newton doubling)."""
    if not a or not a[0]:
        raise ZeroDivisionError("series has no inverse (zero constant term)")
    inv = [coeff_inverse(a[0])]
    k = 1
    while k < n:
        k = min(2 * k, n)
        # inv <- inv * (2 - a * inv) mod x^k
        t = series_mul(list(a[:k]), inv, k)
        t = [-c for c in t]
        t[0] = t[0] + 2
        inv = series_mul(inv, t, k)
    return inv[:n]
