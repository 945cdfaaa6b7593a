"""Combinatorial enumerators for degeneration constraints.

T-singularities and their (d, n, a) decompositions, Hirzebruch-Jung
resolution strings, the Markov-type equation a^2 + b^2 + 2c^2 = 4abc,
the orbifold order bound |Gamma| * deg < 12, the Noether consistency check
rho + deg + sum(mu) = 10, the per-degree singularity menus, and the table of
Bergman exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import MathDomainError
from .germ import SingularityType

_DEGREES = (1, 2, 3, 4)


def _check_degree(d: int) -> int:
    if d not in _DEGREES:
        raise MathDomainError("degree must be one of 1, 2, 3, 4")
    return d


def _check_quotient_params(n: int, a: int) -> None:
    if n < 2 or not (1 <= a < n) or gcd(a, n) != 1:
        raise MathDomainError(
            "cyclic quotient needs n >= 2, 1 <= a < n, gcd(a, n) = 1"
        )


@dataclass(frozen=True)
class TSingularity:
    """A cyclic quotient of type 1/(d n^2) (1, d n a - 1) with gcd(a, n) = 1.

    The degenerate case n = 1 (with a = 1) is the Du Val quotient A_{d-1}.
    """

    d: int
    n: int
    a: int

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise MathDomainError("T-singularity parameters must be positive")
        if self.n == 1:
            if self.a != 1:
                raise MathDomainError("degenerate case n = 1 requires a = 1")
        elif not (1 <= self.a < self.n) or gcd(self.a, self.n) != 1:
            raise MathDomainError("need 1 <= a < n with gcd(a, n) = 1")

    @property
    def index(self) -> int:
        return self.d * self.n * self.n

    @property
    def weight(self) -> int:
        return (self.d * self.n * self.a - 1) % self.index

    def singularity_type(self) -> SingularityType:
        return SingularityType.cyclic_quotient(self.index, self.weight)

    def milnor_fiber_is_smoothing(self) -> bool:
        """Every T-singularity admits a Q-Gorenstein smoothing."""
        return True


def is_t_singularity(n: int, a: int) -> TSingularity | None:
    """The (d, n0, a0) decomposition of 1/n(1, a) if it is a T-singularity.

    Both orientations 1/n(1, a) and 1/n(1, a^{-1} mod n) are tested, since
    they present the same singularity.  Du Val quotients (a = n - 1) always
    decompose with n0 = 1.  Returns None when no decomposition exists.
    """
    _check_quotient_params(n, a)
    targets = {a, pow(a, -1, n)}
    for n0 in range(isqrt(n), 0, -1):
        if n % (n0 * n0):
            continue
        d = n // (n0 * n0)
        if n0 == 1:
            if (d - 1) % n in targets:
                return TSingularity(d, 1, 1)
            continue
        for a0 in range(1, n0):
            if gcd(a0, n0) != 1:
                continue
            if (d * n0 * a0 - 1) % n in targets:
                return TSingularity(d, n0, a0)
    return None


@dataclass(frozen=True)
class HJString:
    """Hirzebruch-Jung data of the cyclic quotient 1/n(1, a).

    ``expansion`` is the continued fraction of n/a' for the canonical
    a' = min(a, a^{-1} mod n):  n/a' = b1 - 1/(b2 - 1/(...)), all b_i >= 2.
    The exceptional divisor of the minimal resolution is a string of curves
    of self-intersections -b1, ..., -br; both reading orders are exposed.
    """

    n: int
    a: int
    a_canonical: int
    expansion: tuple[int, ...]

    @property
    def exceptional_string(self) -> tuple[int, ...]:
        return tuple(-b for b in self.expansion)

    @property
    def reversed_expansion(self) -> tuple[int, ...]:
        return tuple(reversed(self.expansion))

    def value(self) -> Fraction:
        """Reconstruct n/a' from the expansion by exact arithmetic."""
        acc = Fraction(self.expansion[-1])
        for b in reversed(self.expansion[:-1]):
            acc = b - 1 / acc
        return acc


def hj_expansion(n: int, a: int) -> HJString:
    """Hirzebruch-Jung continued fraction of the quotient 1/n(1, a)."""
    _check_quotient_params(n, a)
    a_canon = min(a, pow(a, -1, n))
    bs = []
    p, q = n, a_canon
    while q:
        b = -(-p // q)
        bs.append(b)
        p, q = q, b * q - p
    return HJString(n, a, a_canon, tuple(bs))


def markov_mutations(t: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """The three Vieta mutations of a solution of a^2 + b^2 + 2c^2 = 4abc."""
    a, b, c = t
    return [(4 * b * c - a, b, c), (a, 4 * a * c - b, c), (a, b, 2 * a * b - c)]


def _markov_normalize(t: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = t
    return (min(a, b), max(a, b), c)


def markov_solutions(bound: int) -> list[tuple[int, int, int]]:
    """All positive solutions of a^2 + b^2 + 2c^2 = 4abc with entries <= bound.

    Solutions are generated from the fundamental one (1, 1, 1) by the Vieta
    mutation tree (every solution descends to the root by the unique
    decreasing mutation), normalized to a <= b, and sorted.
    """
    if bound < 1:
        return []
    seed = (1, 1, 1)
    if bound < max(seed):
        return []
    seen = {seed}
    frontier = [seed]
    while frontier:
        t = frontier.pop()
        for m in markov_mutations(t):
            m = _markov_normalize(m)
            if min(m) >= 1 and max(m) <= bound and m not in seen:
                seen.add(m)
                frontier.append(m)
    return sorted(seen)


def is_markov_solution(t: tuple[int, int, int]) -> bool:
    a, b, c = t
    return a >= 1 and b >= 1 and c >= 1 and a * a + b * b + 2 * c * c == 4 * a * b * c


def order_bound_filter(degree: int, candidate: SingularityType) -> bool:
    """Whether |Gamma| * degree < 12 for the candidate's orbifold group."""
    _check_degree(degree)
    return candidate.group_order() * degree < 12


def _t_quotient_types(max_order: int) -> list[SingularityType]:
    """Non-Du-Val cyclic T-singularity types 1/n(1,a) with n <= max_order."""
    found = set()
    for n in range(2, max_order + 1):
        for a in range(1, n):
            if gcd(a, n) != 1:
                continue
            t = SingularityType.cyclic_quotient(n, a)
            if t.kind != "CyclicQuotient":
                continue  # Du Val quotients normalize to A-types
            if is_t_singularity(n, t.weight) is not None:
                found.add(t)
    return sorted(found, key=lambda t: (t.order, t.weight))


def gh_menu(degree: int, apply_noether: bool = False) -> list[SingularityType]:
    """The menu of singularity types allowed on a degree-d limit surface.

    The menu is the set of T-singularities passing the order bound
    |Gamma| * d < 12: Du Val types plus non-Du-Val cyclic quotients.  With
    ``apply_noether`` the Du Val entries are further restricted by the Noether
    bound mu <= 9 - d (quotient entries are unaffected).
    """
    _check_degree(degree)
    menu: list[SingularityType] = []
    k = 1
    while order_bound_filter(degree, SingularityType.A(k)):
        menu.append(SingularityType.A(k))
        k += 1
    k = 4
    while order_bound_filter(degree, SingularityType.D(k)):
        menu.append(SingularityType.D(k))
        k += 1
    for k in (6, 7, 8):
        if order_bound_filter(degree, SingularityType.E(k)):
            menu.append(SingularityType.E(k))
    if apply_noether:
        menu = [t for t in menu if t.index <= 9 - degree]
    max_order = (11 // degree) if degree else 0
    menu.extend(
        t for t in _t_quotient_types(max_order) if order_bound_filter(degree, t)
    )
    return menu


def _milnor_number(entry) -> int:
    if isinstance(entry, SingularityType):
        if not entry.is_du_val():
            raise MathDomainError("Milnor number undefined in this checker")
        return entry.index
    mu = int(entry)
    if mu < 1:
        raise MathDomainError("Milnor numbers must be positive")
    return mu


def noether_check(degree: int, picard_rank: int, milnor: list) -> bool:
    """Noether formula for ADE del Pezzo degenerations:

        rho + K^2 + sum(mu_P) = 12 chi(O) - 2 = 10   (chi(O) = 1).

    ``milnor`` entries are Milnor numbers or Du Val SingularityType values
    (mu of A_k/D_k/E_k is k); anything else has no Milnor number here.
    """
    _check_degree(degree)
    if picard_rank < 1:
        raise MathDomainError("Picard rank must be positive")
    return picard_rank + degree + sum(_milnor_number(e) for e in milnor) == 10


@dataclass(frozen=True)
class BergmanExponents:
    """The exponents k for which the k-th Bergman kernel is uniformly positive."""

    degree: int
    modulus: int

    def __contains__(self, k: int) -> bool:
        return k >= 1 and k % self.modulus == 0

    def smallest(self) -> int:
        return self.modulus

    def describe(self) -> str:
        if self.modulus == 1:
            return "k >= 1"
        return f"k = {self.modulus}l, l >= 1"


def bergman_exponents(degree: int) -> BergmanExponents:
    """d >= 3: all k >= 1;  d = 2: even k;  d = 1: multiples of 6."""
    _check_degree(degree)
    return BergmanExponents(degree, {4: 1, 3: 1, 2: 2, 1: 6}[degree])
