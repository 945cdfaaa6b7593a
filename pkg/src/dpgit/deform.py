"""Torus GIT on the deformation spaces of the two special degree-one surfaces.

Each space carries a torus action whose weights on representative coordinates
are fixed by the surface's automorphism group:

* ``X1T`` (the Z/9 quotient of the plane): rank-2 torus acting on the three
  deformation blocks through the weights (1,-1), (-3,6), (-3,-3);
* ``X1e`` (the exceptional degree-one surface): rank-1 torus acting on
  (a1, a2) with weights (-4, -2) and on (b0, ..., b6) with weights 8 down
  to 2.

Verdicts and destabilizing one-parameter subgroups delegate to the shared
torus engine, so certificates are integer vectors with every supported weight
strictly positive against them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MathDomainError
from .gitstab import (
    POLYSTABLE_NOT_STABLE,
    UNSTABLE,
    StabilityClass,
    TorusPoint,
    torus_stability,
)


@dataclass(frozen=True)
class DefSpace:
    """A deformation space with a torus action given coordinatewise."""

    name: str
    torus_rank: int
    coordinate_names: tuple[str, ...]
    weights: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        if len(self.weights) != len(self.coordinate_names):
            raise MathDomainError("one weight vector per coordinate required")
        if any(len(w) != self.torus_rank for w in self.weights):
            raise MathDomainError("weight vectors must match the torus rank")

    @property
    def dimension(self) -> int:
        return len(self.coordinate_names)

    def block(self, name: str) -> tuple[int, ...]:
        for bname, idxs in self.blocks:
            if bname == name:
                return idxs
        raise MathDomainError(f"no block named {name!r} in {self.name}")


def def_space_x1t() -> DefSpace:
    return DefSpace(
        name="X1T",
        torus_rank=2,
        coordinate_names=("v1", "v2", "v3"),
        weights=((1, -1), (-3, 6), (-3, -3)),
        blocks=(("Def1", (0,)), ("Def2", (1,)), ("Def3", (2,))),
    )


def def_space_x1e() -> DefSpace:
    return DefSpace(
        name="X1e",
        torus_rank=1,
        coordinate_names=("a1", "a2", "b0", "b1", "b2", "b3", "b4", "b5", "b6"),
        weights=((-4,), (-2,), (8,), (7,), (6,), (5,), (4,), (3,), (2,)),
        blocks=(("Def1", (0, 1)), ("Def2", (2, 3, 4, 5, 6, 7, 8))),
    )


_SPACES = {"X1T": def_space_x1t, "X1e": def_space_x1e}


def def_space(name: str) -> DefSpace:
    try:
        return _SPACES[name]()
    except KeyError:
        raise MathDomainError(f"unknown deformation space {name!r}") from None


def def_polystability(space: DefSpace, v) -> StabilityClass:
    """GIT class of a deformation vector under the space's torus action.

    The origin is the torus-fixed point: its orbit is closed, so it is
    polystable, but its stabilizer is the whole torus, so it is not stable.
    """
    coords = tuple(v)
    if len(coords) != space.dimension:
        raise MathDomainError(
            f"{space.name} expects {space.dimension} coordinates, got {len(coords)}"
        )
    if not any(coords):
        return StabilityClass(
            POLYSTABLE_NOT_STABLE, reason="torus-fixed point (closed orbit, full stabilizer)"
        )
    return torus_stability(TorusPoint(coords, space.weights))


def destabilizing_1ps(space: DefSpace, v):
    """Integer certificate 1-PS when the vector is unstable, else None."""
    verdict = def_polystability(space, v)
    if verdict.tag == UNSTABLE:
        return verdict.certificate
    return None
