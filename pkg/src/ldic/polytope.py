"""Exact rational 2-D polytope engine for rate regions.

Regions are intersections of half-planes with small integer coefficients.
Vertices are enumerated by intersecting every pair of constraint lines and
keeping the feasible intersections; for constraint sets of the canonical
form this candidate set is exactly the vertex set, so no floating point or
tolerance enters anywhere. With at most seven constraints the cubic cost of
the pairwise scan is irrelevant.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import BoundSet


class UnboundedRegionError(ValueError):
    """Raised when a constraint set fails to cap one of the coordinates."""


class RatePoint(collections.namedtuple("RatePoint", ["r1", "r2"])):
    """A non-negative rate pair with exact rational coordinates."""

    __slots__ = ()

    def __new__(cls, r1, r2):
        r1, r2 = Fraction(r1), Fraction(r2)
        if r1 < 0 or r2 < 0:
            raise ValueError(f"rate pair must be non-negative, got ({r1}, {r2})")
        return super().__new__(cls, r1, r2)


def _cross(o: RatePoint, a: RatePoint, b: RatePoint) -> Fraction:
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1)


def _hull_ccw(points):
    """Convex hull of distinct points, counter-clockwise, collinear interiors dropped."""
    pts = sorted(points)
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class RatePolytope:
    """A rate region with its inequality description and enumerated vertices.

    Vertices run counter-clockwise starting from the one with maximal r1
    (ties broken toward minimal r2). Degenerate regions are first-class:
    a single point has one vertex, a segment two.
    """

    bounds: BoundSet
    vertices: tuple

    @classmethod
    def from_bounds(cls, bounds: BoundSet) -> "RatePolytope":
        cs = bounds.constraints
        if not any(c.r1_coeff > 0 for c in cs) or not any(c.r2_coeff > 0 for c in cs):
            raise UnboundedRegionError("constraint set does not cap both coordinates")

        feasible = {}
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                a, b = cs[i], cs[j]
                det = a.r1_coeff * b.r2_coeff - a.r2_coeff * b.r1_coeff
                if det == 0:
                    continue
                r1 = Fraction(a.rhs * b.r2_coeff - b.rhs * a.r2_coeff, det)
                r2 = Fraction(a.r1_coeff * b.rhs - b.r1_coeff * a.rhs, det)
                if (r1, r2) not in feasible and all(c.holds(r1, r2) for c in cs):
                    feasible[(r1, r2)] = RatePoint(r1, r2)

        ordered = _hull_ccw(feasible.values())
        anchor = max(range(len(ordered)), key=lambda k: (ordered[k].r1, -ordered[k].r2))
        return cls(bounds, tuple(ordered[anchor:] + ordered[:anchor]))

    def contains(self, point: RatePoint) -> bool:
        """Exact membership test, boundary inclusive."""
        return all(c.holds(point.r1, point.r2) for c in self.bounds.constraints)

    def subset_of(self, other: "RatePolytope") -> bool:
        """True iff this region lies inside the other (vertex check; both convex)."""
        return all(other.contains(v) for v in self.vertices)

    def equals_region(self, other: "RatePolytope") -> bool:
        """True iff the two regions contain the same points (mutual inclusion)."""
        return self.subset_of(other) and other.subset_of(self)

    def max_linear(self, c1: int, c2: int) -> Fraction:
        """Exact maximum of c1*r1 + c2*r2 over the region (attained at a vertex)."""
        if (c1, c2) == (0, 0):
            raise ValueError("objective must be a nonzero functional")
        return max(c1 * v.r1 + c2 * v.r2 for v in self.vertices)

    def slice_max(self, axis: int, value) -> Optional[Fraction]:
        """Maximal free coordinate on the slice with coordinate `axis` fixed.

        axis=2 fixes r2 = value and returns the largest feasible r1; axis=1
        the reverse. Returns None when the slice misses the region. Computed
        as the tightest cap each constraint induces on the free coordinate.
        """
        value = Fraction(value)
        if axis not in (1, 2):
            raise ValueError(f"axis must be 1 or 2, got {axis!r}")
        if value < 0:
            raise ValueError(f"fixed coordinate must be non-negative, got {value}")

        best = None
        for c in self.bounds.constraints:
            if axis == 2:
                free_coeff, residual = c.r1_coeff, c.rhs - c.r2_coeff * value
            else:
                free_coeff, residual = c.r2_coeff, c.rhs - c.r1_coeff * value
            if free_coeff > 0:
                cap = Fraction(residual, free_coeff)
                if best is None or cap < best:
                    best = cap
            elif free_coeff == 0 and residual < 0:
                return None
            # free_coeff < 0 is the non-negativity floor, folded into best < 0 below
        if best is None or best < 0:
            return None
        return best
