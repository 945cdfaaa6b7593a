"""Shared hypothesis strategies for exact-arithmetic property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from dpgit.polyalg import MultiPoly


def fractions(max_num: int = 9, max_den: int = 4) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def nonzero_fractions(max_num: int = 9, max_den: int = 4) -> st.SearchStrategy[Fraction]:
    return fractions(max_num, max_den).filter(bool)


def multipolys(
    variables: tuple[str, ...] = ("x", "y"),
    max_degree: int = 4,
    max_terms: int = 5,
    allow_zero: bool = True,
) -> st.SearchStrategy[MultiPoly]:
    exponent = st.integers(min_value=0, max_value=max_degree)
    term = st.tuples(st.tuples(*[exponent] * len(variables)), nonzero_fractions())
    terms = st.lists(term, min_size=0 if allow_zero else 1, max_size=max_terms)

    def build(pairs) -> MultiPoly:
        acc = MultiPoly.zero(variables)
        for exps, c in pairs:
            acc = acc + MultiPoly.monomial(variables, exps, c)
        return acc

    polys = st.builds(build, terms)
    if not allow_zero:
        polys = polys.filter(lambda p: not p.is_zero())
    return polys


def homogeneous_polys(
    variables: tuple[str, ...],
    degree: int,
    max_terms: int = 4,
    allow_zero: bool = False,
) -> st.SearchStrategy[MultiPoly]:
    n = len(variables)

    def split(total: int, parts: int, rng_choices) -> tuple[int, ...]:
        exps = []
        remaining = total
        for k in range(parts - 1):
            e = rng_choices[k] % (remaining + 1)
            exps.append(e)
            remaining -= e
        exps.append(remaining)
        return tuple(exps)

    choice = st.integers(min_value=0, max_value=10_000)
    term = st.tuples(st.tuples(*[choice] * (n - 1)), nonzero_fractions())
    terms = st.lists(term, min_size=0 if allow_zero else 1, max_size=max_terms)

    def build(pairs) -> MultiPoly:
        acc = MultiPoly.zero(variables)
        for picks, c in pairs:
            acc = acc + MultiPoly.monomial(variables, split(degree, n, picks), c)
        return acc

    polys = st.builds(build, terms)
    if not allow_zero:
        polys = polys.filter(lambda p: not p.is_zero())
    return polys
