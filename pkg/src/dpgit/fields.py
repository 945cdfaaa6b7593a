"""Exact coefficient fields: the rationals and single algebraic extensions Q(a).

Coefficients throughout the package are either plain ``fractions.Fraction``
values or :class:`FieldElement` values living in one extension Q[t]/(m(t)).
Mixing two distinct extensions raises :class:`TowerExtensionError`; every
computation in this package is designed to resolve inside one extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import MathDomainError, TowerExtensionError

Rational = Fraction
Coefficient = Union[Fraction, "FieldElement"]


def _to_fraction_tuple(coeffs: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coeffs)


@dataclass(frozen=True)
class NumberField:
    """A simple extension Q(a) given by the monic minimal polynomial of ``a``.

    Parameters
    ----------
    name:
        Display name of the generator, e.g. ``"a"`` or ``"i"``.
    min_poly:
        Coefficients (constant first) of a monic polynomial over Q,
        degree >= 2, assumed irreducible.  Irreducibility is the caller's
        responsibility; :func:`dpgit.factorize.number_field_from_factor`
        constructs fields from certified irreducible factors.
    """

    name: str
    min_poly: tuple[Fraction, ...]

    def __post_init__(self):
        mp = _to_fraction_tuple(self.min_poly)
        object.__setattr__(self, "min_poly", mp)
        if len(mp) < 3:
            raise MathDomainError("extension degree must be at least 2")
        if mp[-1] != 1:
            raise MathDomainError("minimal polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def generator(self) -> "FieldElement":
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, coeffs)

    def element(self, coeffs: Iterable) -> "FieldElement":
        return FieldElement(self, coeffs)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"NumberField({self.name!r}, deg={self.degree})"


class FieldElement:
    """An element of a :class:`NumberField`, stored as a residue mod min_poly."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Iterable):
        coeffs = list(_to_fraction_tuple(coeffs))
        if len(coeffs) > field.degree:
            coeffs = _reduce_mod(coeffs, field.min_poly)
        coeffs += [Fraction(0)] * (field.degree - len(coeffs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("FieldElement is immutable")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise TowerExtensionError()
        if isinstance(other, (int, Fraction)):
            coeffs = [Fraction(other)] + [Fraction(0)] * (self.field.degree - 1)
            return FieldElement(self.field, coeffs)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return FieldElement(self.field, _reduce_mod(prod, self.field.min_poly))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid in Q[t] against the minimal polynomial
        r0, r1 = list(self.field.min_poly), list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 = gcd (a nonzero constant, since min_poly is irreducible)
        lead = next(c for c in reversed(r0) if c)
        inv = [c / lead for c in s0]
        return FieldElement(self.field, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = FieldElement(self.field, [Fraction(1)])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.min_poly, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise MathDomainError("element is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        name = self.field.name
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{name}" if c != 1 else name)
            else:
                parts.append(f"{c}*{name}^{i}" if c != 1 else f"{name}^{i}")
        return " + ".join(parts) if parts else "0"


# -- plain dense polynomial helpers over Fraction (constant first) ----------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(_poly_trim(a)) >= len(b):
        a = _poly_trim(a)
        shift = len(a) - len(b)
        coeff = a[-1] * inv
        q[shift] = coeff
        for i, c in enumerate(b):
            a[shift + i] -= coeff * c
    return _poly_trim(q), _poly_trim(a)


def _reduce_mod(p: list[Fraction], m: Sequence[Fraction]) -> list[Fraction]:
    _, r = _poly_divmod(p, list(m))
    return r


# -- generic coefficient helpers --------------------------------------------


def coeff_zero_like(c: Coefficient):
    return Fraction(0)


def coeff_is_zero(c) -> bool:
    return not c


def coeff_inverse(c: Coefficient) -> Coefficient:
    if isinstance(c, FieldElement):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def coeff_field(c: Coefficient) -> NumberField | None:
    return c.field if isinstance(c, FieldElement) else None


def common_field(*cs: Coefficient) -> NumberField | None:
    """The unique extension appearing among ``cs`` (None if all rational)."""
    field = None
    for c in cs:
        f = coeff_field(c)
        if f is None:
            continue
        if field is None:
            field = f
        elif field != f:
            raise TowerExtensionError()
    return field


def coeff_key(c: Coefficient):
    """Deterministic sort key for rationals and field elements."""
    if isinstance(c, FieldElement):
        return (1,) + tuple((x.numerator, x.denominator) for x in c.coeffs)
    c = Fraction(c)
    return (0, (c.numerator, c.denominator))


def coeff_repr(c: Coefficient) -> str:
    if isinstance(c, FieldElement):
        return repr(c)
    return str(Fraction(c))


GAUSSIAN_NAME = "i"


def gaussian_field() -> NumberField:
    """The field Q(i), the only extension the input language can declare."""
    return NumberField(GAUSSIAN_NAME, (Fraction(1), Fraction(0), Fraction(1)))
