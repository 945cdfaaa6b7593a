"""Sparse exact multivariate polynomials and the algebra the profilers need.

Polynomials are dictionaries mapping exponent tuples to nonzero coefficients
(``Fraction`` or :class:`~dpgit.fields.FieldElement`).  The monomial order is
graded lexicographic.  Multivariate gcds use the primitive polynomial
remainder sequence; resultants are Sylvester determinants evaluated by
fraction-free Bareiss elimination, with the first argument's coefficients in
the top rows (so swapping arguments multiplies by (-1)^(deg p * deg q)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegenerateInputError, MathDomainError
from .fields import Coefficient, FieldElement, coeff_inverse, coeff_key, coeff_repr

Scalar = Union[int, Fraction, FieldElement]


@dataclass(frozen=True)
class WeightSystem:
    """Integer weights for a one-parameter scaling or a weighted ambient space."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise MathDomainError("weight system must be nonempty")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def degree_of(self, exponents: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exponents))


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """A sparse multivariate polynomial over Q or a single extension Q(a)."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        variables = tuple(variables)
        clean: dict[tuple[int, ...], Coefficient] = {}
        if terms:
            for exps, c in terms.items():
                if isinstance(c, int):
                    c = Fraction(c)
                if not c:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(variables):
                    raise MathDomainError("exponent tuple length mismatch")
                if any(e < 0 for e in exps):
                    raise MathDomainError("negative exponent")
                clean[exps] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> "MultiPoly":
        return cls(variables, {tuple(0 for _ in variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c: Scalar = 1) -> "MultiPoly":
        return cls(variables, {tuple(exps): c})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            raise MathDomainError("polynomial is not constant")
        zero = tuple(0 for _ in self.variables)
        return self.terms.get(zero, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_total_degree(self) -> int:
        """Multiplicity at the origin (order of vanishing)."""
        if not self.terms:
            raise DegenerateInputError("zero polynomial has no multiplicity")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.variables.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term_grlex(self) -> tuple[tuple[int, ...], Coefficient]:
        if not self.terms:
            raise DegenerateInputError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def monic_grlex(self) -> "MultiPoly":
        if not self.terms:
            return self
        _, c = self.leading_term_grlex()
        inv = coeff_inverse(c)
        return MultiPoly(self.variables, {e: v * inv for e, v in self.terms.items()})

    # -- arithmetic ----------------------------------------------------------

    def _check_same_vars(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise MathDomainError("polynomials over different variable tuples")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_vars(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            if not other:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_vars(other)
        terms: dict[tuple[int, ...], Coefficient] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = terms.get(e)
                terms[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise MathDomainError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, (Fraction, FieldElement)):
            inv = coeff_inverse(other)
            return self * inv
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def mul_truncated(self, other: "MultiPoly", max_total_degree: int) -> "MultiPoly":
        self._check_same_vars(other)
        terms: dict[tuple[int, ...], Coefficient] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > max_total_degree:
                continue
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > max_total_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = terms.get(e)
                terms[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiPoly(self.variables, terms)

    def truncate(self, max_total_degree: int) -> "MultiPoly":
        return MultiPoly(
            self.variables,
            {e: c for e, c in self.terms.items() if sum(e) <= max_total_degree},
        )

    # -- calculus / structure -------------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self.variables.index(var)
        terms: dict[tuple[int, ...], Coefficient] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
        return MultiPoly(self.variables, terms)

    def as_univariate(self, var: str) -> list["MultiPoly"]:
        """Coefficient list in ``var`` (constant first); coefficients keep all variables."""
        i = self.variables.index(var)
        deg = self.degree_in(var)
        if deg < 0:
            return []
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            d = ne[i]
            ne[i] = 0
            buckets[d][tuple(ne)] = c
        return [MultiPoly(self.variables, b) for b in buckets]

    @classmethod
    def from_univariate(cls, coeffs: Sequence["MultiPoly"], var: str) -> "MultiPoly":
        if not coeffs:
            raise DegenerateInputError("empty coefficient list")
        variables = coeffs[0].variables
        i = variables.index(var)
        terms: dict[tuple[int, ...], Coefficient] = {}
        for d, p in enumerate(coeffs):
            for e, c in p.terms.items():
                if e[i] != 0:
                    raise MathDomainError("coefficient depends on the main variable")
                ne = list(e)
                ne[i] = d
                key = tuple(ne)
                prev = terms.get(key)
                terms[key] = c if prev is None else prev + c
        return cls(variables, terms)

    def substitute(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Substitute polynomials or scalars for variables.

        The substituted values must all live over one common variable tuple
        (scalars are promoted); unmapped variables must exist in that target
        tuple and map to themselves.
        """
        target_vars: tuple[str, ...] | None = None
        for v in mapping.values():
            if isinstance(v, MultiPoly):
                if target_vars is None:
                    target_vars = v.variables
                elif target_vars != v.variables:
                    raise MathDomainError("substitution images over different variable tuples")
        if target_vars is None:
            target_vars = self.variables
        images: dict[str, MultiPoly] = {}
        for name in self.variables:
            if name in mapping:
                v = mapping[name]
                images[name] = (
                    v if isinstance(v, MultiPoly) else MultiPoly.constant(target_vars, v)
                )
            else:
                if name not in target_vars:
                    raise MathDomainError(f"variable {name!r} has no substitution image")
                images[name] = MultiPoly.variable(target_vars, name)
        power_cache: dict[str, list[MultiPoly]] = {
            name: [MultiPoly.constant(target_vars, 1)] for name in self.variables
        }

        def power(name: str, n: int) -> MultiPoly:
            cache = power_cache[name]
            while len(cache) <= n:
                cache.append(cache[-1] * images[name])
            return cache[n]

        out = MultiPoly.zero(target_vars)
        for e, c in self.terms.items():
            term = MultiPoly.constant(target_vars, c)
            for name, exp in zip(self.variables, e):
                if exp:
                    term = term * power(name, exp)
            out = out + term
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Coefficient:
        acc = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for name, exp in zip(self.variables, e):
                if exp:
                    x = point[name]
                    if isinstance(x, int):
                        x = Fraction(x)
                    for _ in range(exp):
                        val = val * x
            acc = acc + val
        return acc

    def restrict_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Project onto a subset of variables; the dropped ones must not occur."""
        variables = tuple(variables)
        keep = [self.variables.index(v) for v in variables]
        drop = [i for i in range(len(self.variables)) if self.variables[i] not in variables]
        terms: dict[tuple[int, ...], Coefficient] = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise MathDomainError("polynomial still involves a dropped variable")
            terms[tuple(e[i] for i in keep)] = c
        return MultiPoly(variables, terms)

    def rename_variables(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise MathDomainError("variable tuple length mismatch")
        return MultiPoly(variables, dict(self.terms))

    # -- weighted structure ----------------------------------------------------

    def weighted_degree(self, weights: WeightSystem) -> tuple[int, bool]:
        """(maximal w-degree, whether the polynomial is w-homogeneous)."""
        if len(weights) != len(self.variables):
            raise MathDomainError("weight system length mismatch")
        if not self.terms:
            raise DegenerateInputError("zero polynomial has no weighted degree")
        degs = {weights.degree_of(e) for e in self.terms}
        return max(degs), len(degs) == 1

    def degeneration_limit(self, weights: WeightSystem) -> tuple["MultiPoly", int]:
        """The minimal-weight part: the limit of p under t . x_i = t^{w_i} x_i as t -> 0.

        Returns (limit polynomial, its weight).  Negating the weights gives
        the t -> infinity limit.
        """
        if len(weights) != len(self.variables):
            raise MathDomainError("weight system length mismatch")
        if not self.terms:
            raise DegenerateInputError("zero polynomial has no degeneration limit")
        w_min = min(weights.degree_of(e) for e in self.terms)
        terms = {e: c for e, c in self.terms.items() if weights.degree_of(e) == w_min}
        return MultiPoly(self.variables, terms), w_min

    # -- printing ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, exp in zip(self.variables, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            cs = coeff_repr(c)
            if isinstance(c, FieldElement) and ("+" in cs or cs.startswith("-")):
                cs = f"({cs})"
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors and cs == "-1":
                parts.append("-" + "*".join(factors))
            elif factors:
                parts.append(cs + "*" + "*".join(factors))
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__

    # -- division ------------------------------------------------------------------

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division; raises if the divisor does not divide evenly."""
        self._check_same_vars(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        q: dict[tuple[int, ...], Coefficient] = {}
        d_exp, d_coeff = divisor.leading_term_grlex()
        d_inv = coeff_inverse(d_coeff)
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, d_exp))
            if any(x < 0 for x in qe):
                raise MathDomainError("polynomial division is not exact")
            qc = c * d_inv
            q[qe] = q.get(qe, Fraction(0)) + qc
            for de, dc in divisor.terms.items():
                ne = tuple(a + b for a, b in zip(qe, de))
                nv = rem.get(ne, Fraction(0)) - qc * dc
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return MultiPoly(self.variables, q)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except MathDomainError:
            return False


# -- gcd ----------------------------------------------------------------------


def _content(coeffs: list[MultiPoly]) -> MultiPoly:
    nonzero = [c for c in coeffs if not c.is_zero()]
    if not nonzero:
        raise DegenerateInputError("content of zero polynomial")
    g = nonzero[0]
    for c in nonzero[1:]:
        g = gcd_multi(g, c)
        if g.is_constant():
            break
    return g.monic_grlex()


def _pseudo_remainder(a: list[MultiPoly], b: list[MultiPoly]) -> list[MultiPoly]:
    """prem(a, b) in the main variable, coefficients multivariate."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(not c.is_zero() for c in a):
        while a and a[-1].is_zero():
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - la * b[i]
        while a and a[-1].is_zero():
            a.pop()
    return a


def gcd_multi(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Multivariate gcd by the primitive polynomial remainder sequence.

    The result is normalized so its graded-lex leading coefficient is 1.
    """
    p._check_same_vars(q)
    if p.is_zero():
        return q.monic_grlex()
    if q.is_zero():
        return p.monic_grlex()
    if p.is_constant() or q.is_constant():
        return MultiPoly.constant(p.variables, 1)
    main = next(
        v for v in p.variables if p.degree_in(v) > 0 or q.degree_in(v) > 0
    )
    if p.degree_in(main) == 0 or q.degree_in(main) == 0:
        # one of them does not involve the main variable: gcd divides it
        if p.degree_in(main) == 0:
            small, big = p, q
        else:
            small, big = q, p
        cont = _content(big.as_univariate(main))
        return gcd_multi(small, cont)
    a = p.as_univariate(main)
    b = q.as_univariate(main)
    ca, cb = _content(a), _content(b)
    a = [c.divide_exact(ca) for c in a]
    b = [c.divide_exact(cb) for c in b]
    cont_gcd = gcd_multi(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _pseudo_remainder(a, b)
        while r and r[-1].is_zero():
            r.pop()
        if not r or all(c.is_zero() for c in r):
            break
        cr = _content(r)
        r = [c.divide_exact(cr) for c in r]
        a, b = b, r
    prim = MultiPoly.from_univariate(b, main)
    return (prim * cont_gcd).monic_grlex()


# -- determinants / resultants ---------------------------------------------------


def poly_det(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant of a square matrix of polynomials (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        raise DegenerateInputError("empty matrix")
    variables = matrix[0][0].variables
    m = [[entry for entry in row] for row in matrix]
    sign = 1
    prev = MultiPoly.constant(variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return MultiPoly.zero(variables)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divide_exact(prev)
            m[i][k] = MultiPoly.zero(variables)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant eliminating ``var``.

    Convention: rows of p's coefficients come first, so
    resultant(p, q) = (-1)^(deg p * deg q) * resultant(q, p).
    The result no longer involves ``var``.
    """
    p._check_same_vars(q)
    a = p.as_univariate(var)
    b = q.as_univariate(var)
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise DegenerateInputError("resultant of the zero polynomial")
    variables = p.variables
    if m == 0 and n == 0:
        return MultiPoly.constant(variables, 1)
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    zero = MultiPoly.zero(variables)
    rows: list[list[MultiPoly]] = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return poly_det(rows)


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """Res(p, dp/dvar) up to the leading coefficient (sufficient for zero-tests)."""
    return resultant(p, p.derivative(var), var)
