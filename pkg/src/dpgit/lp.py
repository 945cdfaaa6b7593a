"""Exact rational linear programming for weight-polytope membership tests.

Everything here works over ``Fraction`` with a dense simplex tableau and
Bland's anti-cycling rule, so the answers are exact decisions, not numerical
estimates.  The three questions we need about a finite set S of integer
weight vectors are:

* is 0 a convex combination of S (``zero_in_convex_hull``),
* is 0 in the *relative interior* of conv(S) (``zero_in_relative_interior``),
* if 0 is outside, produce an integer linear functional that is strictly
  positive on all of S (``strict_separator``).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

Vector = Sequence[int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# -- simplex core ------------------------------------------------------------


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for r, line in enumerate(tab):
        if r != row and line[col]:
            factor = line[col]
            tab[r] = [a - factor * b for a, b in zip(line, tab[row])]
    basis[row] = col


def _run_simplex(tab: list[list[Fraction]], basis: list[int], ncols: int) -> None:
    """Maximize the objective stored in the last tableau row (Bland's rule).

    The objective row holds reduced costs: entry j is negative exactly when
    bringing column j into the basis improves the objective, and the final
    entry is the current objective value.
    """
    obj = len(tab) - 1
    while True:
        col = next((j for j in range(ncols) if tab[obj][j] < 0), None)
        if col is None:
            return
        row = None
        best: Optional[Fraction] = None
        for r in range(obj):
            if tab[r][col] > 0:
                ratio = tab[r][-1] / tab[r][col]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    best, row = ratio, r
        if row is None:
            raise ArithmeticError("unbounded linear program")
        _pivot(tab, basis, row, col)


def _phase_one(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> Optional[tuple[list[list[Fraction]], list[int]]]:
    """Find a basic feasible point of {Ax = b, x >= 0} with artificials.

    Returns the tableau (objective row included, artificial columns already
    dropped) and the basis, or None when the system is infeasible.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    tab: list[list[Fraction]] = []
    for k in range(m):
        body = list(rows[k])
        b = rhs[k]
        if b < 0:
            body = [-x for x in body]
            b = -b
        art = [_ONE if j == k else _ZERO for j in range(m)]
        tab.append(body + art + [b])
    # Maximize -(sum of artificials).  With the artificial basis the reduced
    # cost row is -(sum of constraint rows) on the real columns, zero on the
    # artificial columns, and the rhs entry is -(sum of rhs).
    obj = [_ZERO] * (n + m + 1)
    for k in range(m):
        obj = [a - b for a, b in zip(obj, tab[k])]
    for j in range(n, n + m):
        obj[j] = _ZERO
    tab.append(obj)
    basis = [n + k for k in range(m)]
    _run_simplex(tab, basis, n + m)
    if tab[-1][-1] != 0:
        return None
    # Drive artificials out of the basis; a row that cannot pivot onto a real
    # column is a redundant constraint and gets dropped.
    drop: list[int] = []
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j]), None)
            if col is None:
                drop.append(r)
            else:
                _pivot(tab, basis, r, col)
    keep = [r for r in range(m) if r not in drop]
    new_tab = [tab[r][:n] + [tab[r][-1]] for r in keep]
    new_tab.append([_ZERO] * (n + 1))
    new_basis = [basis[r] for r in keep]
    return new_tab, new_basis


def _set_objective(tab: list[list[Fraction]], basis: list[int], costs: list[Fraction]) -> None:
    """Install reduced costs for maximizing <costs, x> against the basis."""
    obj = [-c for c in costs] + [_ZERO]
    for r, b in enumerate(basis):
        if obj[b]:
            factor = obj[b]
            obj = [a - factor * c for a, c in zip(obj, tab[r])]
    tab[-1] = obj


class _ConvexProgram:
    """Simplex state for {lam >= 0, sum lam = 1, sum lam_i w_i = 0}."""

    def __init__(self, vectors: Sequence[Vector]):
        if not vectors:
            raise ValueError("need at least one vector")
        self.vectors = [tuple(Fraction(x) for x in w) for w in vectors]
        self.n = len(self.vectors)
        self.r = len(self.vectors[0])
        if any(len(w) != self.r for w in self.vectors):
            raise ValueError("weight vectors of mixed rank")
        rows = [[w[i] for w in self.vectors] for i in range(self.r)]
        rows.append([_ONE] * self.n)
        rhs = [_ZERO] * self.r + [_ONE]
        state = _phase_one(rows, rhs)
        self.feasible = state is not None
        if state is not None:
            self.tab, self.basis = state

    def solution(self) -> list[Fraction]:
        lam = [_ZERO] * self.n
        for row, b in zip(self.tab, self.basis):
            lam[b] = row[-1]
        return lam

    def maximize_coordinate(self, index: int) -> Fraction:
        costs = [_ZERO] * self.n
        costs[index] = _ONE
        _set_objective(self.tab, self.basis, costs)
        _run_simplex(self.tab, self.basis, self.n)
        return self.tab[-1][-1]


# -- public predicates -------------------------------------------------------


def zero_in_convex_hull(vectors: Sequence[Vector]) -> Optional[list[Fraction]]:
    """Coefficients of a convex combination of ``vectors`` equal to 0, or None."""
    prog = _ConvexProgram(vectors)
    return prog.solution() if prog.feasible else None


def zero_in_relative_interior(vectors: Sequence[Vector]) -> bool:
    """Whether 0 = sum lam_i v_i admits a solution with every lam_i > 0.

    That is exactly membership of 0 in the relative interior of the convex
    hull.  Each coordinate is checked by maximizing it over the feasible
    region; solutions found along the way settle other coordinates for free.
    """
    prog = _ConvexProgram(vectors)
    if not prog.feasible:
        return False
    positive = [x > 0 for x in prog.solution()]
    for i in range(prog.n):
        if positive[i]:
            continue
        if prog.maximize_coordinate(i) == 0:
            return False
        positive = [p or x > 0 for p, x in zip(positive, prog.solution())]
    return True


def matrix_rank(vectors: Sequence[Vector]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _dot(a: Sequence[Fraction], b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), _ZERO)


def separates_strictly(functional: Vector, vectors: Sequence[Vector]) -> bool:
    """Machine check for a destabilizing functional: positive on every vector."""
    ell = [Fraction(x) for x in functional]
    return all(_dot(ell, w) > 0 for w in vectors)


def strict_separator(vectors: Sequence[Vector], max_norm: int = 6) -> tuple[int, ...]:
    """Integer functional strictly positive on ``vectors`` (0 outside hull).

    Small certificates are preferred: the integer boxes of max-norm 1, 2, ...
    are searched first, and only if nothing of max-norm <= ``max_norm``
    separates do we fall back to solving for a rational separator and
    clearing denominators.
    """
    r = len(vectors[0])
    for bound in range(1, max_norm + 1):
        for cand in product(range(-bound, bound + 1), repeat=r):
            if max(abs(c) for c in cand) != bound:
                continue
            if separates_strictly(cand, vectors):
                return cand
    cand = _lp_separator(vectors)
    if cand is None or not separates_strictly(cand, vectors):
        raise ValueError("no strict separator: 0 lies in the convex hull")
    return cand


def _lp_separator(vectors: Sequence[Vector]) -> Optional[tuple[int, ...]]:
    """Rational separator via LP, scaled to integers.

    Feasibility of {<l, v> >= 1 for all v} with l free: substitute l = p - q
    with p, q >= 0 and slacks s >= 0, giving the standard-form system
    A(p - q) - s = 1.
    """
    vs = [tuple(Fraction(x) for x in w) for w in vectors]
    n, r = len(vs), len(vs[0])
    ncols = 2 * r + n
    rows = []
    for k, w in enumerate(vs):
        row = list(w) + [-x for x in w] + [_ZERO] * n
        row[2 * r + k] = -_ONE
        rows.append(row)
    state = _phase_one(rows, [_ONE] * n)
    if state is None:
        return None
    tab, basis = state
    sol = [_ZERO] * ncols
    for row, b in zip(tab, basis):
        sol[b] = row[-1]
    ell = [sol[i] - sol[r + i] for i in range(r)]
    denom = 1
    for x in ell:
        denom = denom * x.denominator // _gcd_int(denom, x.denominator)
    ints = [int(x * denom) for x in ell]
    g = 0
    for x in ints:
        g = _gcd_int(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a or 1
