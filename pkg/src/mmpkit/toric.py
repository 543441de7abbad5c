"""Toric cone singularity classification.

A full-dimensional strongly convex rational cone is described by its
primitive integer ray generators.  When a rational linear functional m
exists with m(ray) = 1 for every generator, the associated affine toric
variety is Q-Gorenstein with Gorenstein index the lcm of the denominators
of m, and the discrepancy of the valuation obtained by star-subdividing at
a primitive lattice point v of the cone equals m(v) - 1.  Classification
then reads off the nonzero lattice points P with m(P) <= 1:

* only the ray generators  -> terminal,
* extra points, all m = 1  -> canonical,
* some point with m < 1    -> klt only (Q-Gorenstein toric is always klt).

Smoothness means the generators extend to a basis of the lattice, i.e. the
cone is simplicial and the ray matrix has all Smith invariant factors 1.
Q-factoriality is simpliciality.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from math import lcm

from . import linalg
from .errors import (
    NotFullDimensionalError,
    NotInConeError,
    NotPrimitiveError,
    NotQGorensteinError,
    NotStronglyConvexError,
)
from .linalg import IntVector, RatVector


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by primitive ray generators."""

    rank: int
    rays: tuple[IntVector, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if not self.rays:
            raise ValueError("a cone needs at least one ray")
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        for ray in self.rays:
            if len(ray) != self.rank:
                raise ValueError(f"ray {list(ray)} does not have length {self.rank}")
            if all(x == 0 for x in ray):
                raise NotPrimitiveError("zero vector cannot be a ray generator")
            if linalg.vector_gcd(ray) != 1:
                raise NotPrimitiveError(f"ray {list(ray)} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("duplicate ray generators")


def cone_from_rays(rays) -> Cone:
    rays = [tuple(int(x) for x in r) for r in rays]
    if not rays:
        raise ValueError("a cone needs at least one ray")
    return Cone(rank=len(rays[0]), rays=tuple(rays))


class ConeClass(Enum):
    SMOOTH = "Smooth"
    TERMINAL = "Terminal"
    CANONICAL = "Canonical"
    KLT_ONLY = "KltOnly"
    NOT_Q_GORENSTEIN = "NotQGorenstein"


#: positions in the implication chain smooth => terminal => canonical => klt
CLASS_CHAIN_ORDER = {
    ConeClass.SMOOTH: 0,
    ConeClass.TERMINAL: 1,
    ConeClass.CANONICAL: 2,
    ConeClass.KLT_ONLY: 3,
}


@dataclass(frozen=True)
class ToricClassification:
    kind: ConeClass
    q_factorial: bool
    gorenstein_index: int | None
    support_functional: RatVector | None
    points_at_or_below_one: tuple[IntVector, ...]


def _require_full_dimensional(cone: Cone):
    if linalg.matrix_rank(cone.rays) != cone.rank:
        raise NotFullDimensionalError(
            f"rays span a space of dimension {linalg.matrix_rank(cone.rays)} < {cone.rank}"
        )


def is_strongly_convex(cone: Cone) -> bool:
    """True when the cone contains no line.

    Equivalent to 0 not lying in the convex hull of the ray generators;
    by Caratheodory it suffices to test affinely independent subsets of
    size at most rank + 1.
    """
    rays = cone.rays
    d = cone.rank
    for size in range(2, min(len(rays), d + 1) + 1):
        for subset in combinations(rays, size):
            system = [[Fraction(r[i]) for r in subset] for i in range(d)]
            system.append([Fraction(1)] * size)
            rhs = [Fraction(0)] * d + [Fraction(1)]
            sol = linalg.solve_possibly_singular(system, rhs)
            if sol is None:
                continue
            coeffs, unique = sol
            if unique and all(c >= 0 for c in coeffs):
                return False
    return True


def _require_strongly_convex(cone: Cone):
    if not is_strongly_convex(cone):
        raise NotStronglyConvexError("cone contains a line")


def facets(cone: Cone) -> tuple[IntVector, ...]:
    """Inward primitive facet normals h_j with cone = { x : h_j(x) >= 0 }."""
    _require_strongly_convex(cone)
    _require_full_dimensional(cone)
    d = cone.rank
    if d == 1:
        return ((1,),) if cone.rays[0][0] > 0 else ((-1,),)
    found = set()
    for subset in combinations(cone.rays, d - 1):
        normal = linalg.cross_normal(subset, d)
        if all(x == 0 for x in normal):
            continue
        normal = linalg.primitive(normal)
        values = [linalg.dot(normal, ray) for ray in cone.rays]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            continue
        if all(v <= 0 for v in values):
            normal = tuple(-x for x in normal)
        found.add(normal)
    return tuple(sorted(found))


def q_gorenstein_functional(cone: Cone) -> RatVector | None:
    """The rational functional with m(ray) = 1 for all rays, if consistent.

    Unique for full-dimensional cones; for lower-dimensional input the free
    coordinates are set to 0.  Returns None when no such functional exists.
    """
    system = [list(ray) for ray in cone.rays]
    rhs = [1] * len(cone.rays)
    sol = linalg.solve_possibly_singular(system, rhs)
    if sol is None:
        return None
    return sol[0]


def gorenstein_index(m: RatVector) -> int:
    return lcm(*(Fraction(x).denominator for x in m)) if m else 1


def contains(cone: Cone, point) -> bool:
    hs = facets(cone)
    return all(linalg.dot(h, point) >= 0 for h in hs)


def lattice_points_at_or_below_one(cone: Cone, m) -> list[IntVector]:
    """Nonzero lattice points P of the cone with m(P) <= 1, in lex order.

    The region is the convex hull of 0 and the ray generators, so a scan of
    its integer bounding box is exhaustive.
    """
    hs = facets(cone)
    d = cone.rank
    m = tuple(Fraction(x) for x in m)
    lows = [min(0, min(r[i] for r in cone.rays)) for i in range(d)]
    highs = [max(0, max(r[i] for r in cone.rays)) for i in range(d)]
    points = []
    for p in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if all(x == 0 for x in p):
            continue
        if any(linalg.dot(h, p) < 0 for h in hs):
            continue
        if sum(c * x for c, x in zip(m, p)) <= 1:
            points.append(p)
    return points


def classify_cone(cone: Cone) -> ToricClassification:
    """Classify the affine toric singularity attached to a cone."""
    _require_strongly_convex(cone)
    _require_full_dimensional(cone)
    q_factorial = len(cone.rays) == cone.rank
    m = q_gorenstein_functional(cone)
    if m is None:
        return ToricClassification(
            kind=ConeClass.NOT_Q_GORENSTEIN,
            q_factorial=q_factorial,
            gorenstein_index=None,
            support_functional=None,
            points_at_or_below_one=(),
        )
    points = tuple(lattice_points_at_or_below_one(cone, m))
    ray_set = set(cone.rays)
    extras = [p for p in points if p not in ray_set]
    smooth = q_factorial and linalg.smith_normal_form(cone.rays) == [1] * cone.rank
    if smooth:
        kind = ConeClass.SMOOTH
    elif not extras:
        kind = ConeClass.TERMINAL
    elif all(sum(c * x for c, x in zip(m, p)) == 1 for p in extras):
        kind = ConeClass.CANONICAL
    else:
        kind = ConeClass.KLT_ONLY
    return ToricClassification(
        kind=kind,
        q_factorial=q_factorial,
        gorenstein_index=gorenstein_index(m),
        support_functional=m,
        points_at_or_below_one=points,
    )


def toric_discrepancy(cone: Cone, v) -> Fraction:
    """Discrepancy m(v) - 1 of the valuation at a primitive point v of the cone."""
    v = tuple(int(x) for x in v)
    if len(v) != cone.rank:
        raise ValueError(f"point {list(v)} does not have length {cone.rank}")
    if all(x == 0 for x in v):
        raise NotPrimitiveError("the origin is not a valuation site")
    if linalg.vector_gcd(v) != 1:
        raise NotPrimitiveError(f"point {list(v)} is not primitive")
    if not contains(cone, v):
        raise NotInConeError(f"point {list(v)} is not in the cone")
    m = q_gorenstein_functional(cone)
    if m is None:
        raise NotQGorensteinError("cone has no support functional; discrepancies undefined")
    return sum((Fraction(c) * x for c, x in zip(m, v)), Fraction(0)) - 1
