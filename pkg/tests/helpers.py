"""Shared brute-force oracles for the test suite.

Everything here recomputes results through a different route than the
library: slice caps straight from raw coefficient triples, membership by
vectorized integer-grid evaluation, and polygon membership from the vertex
list alone. Grids use step 1/6 (or 1/12), so scaling coordinates by 6 (or
12) turns every test into exact int64 arithmetic.
"""

from fractions import Fraction

import numpy as np

from ldic import ChannelParams

GRID_SCALE = 6  # step 1/6


def raw_constraints(bound_set):
    return tuple((c.r1_coeff, c.r2_coeff, c.rhs) for c in bound_set.constraints)


def caps_of(bound_set):
    return tuple(bound_set.cap(a, b) for a, b in ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2)))


def slice_cap(raw, axis, value):
    """Largest free coordinate on the slice, straight from the inequalities."""
    value = Fraction(value)
    best = None
    for a, b, rhs in raw:
        coeff, residual = (a, rhs - b * value) if axis == 2 else (b, rhs - a * value)
        if coeff > 0:
            cap = Fraction(residual, coeff)
            best = cap if best is None or cap < best else best
        elif coeff == 0 and residual < 0:
            return None
    if best is None or best < 0:
        return None
    return best


def scaled_grid(r1_cap, r2_cap):
    s1 = np.arange(0, GRID_SCALE * r1_cap + 1, dtype=np.int64)
    s2 = np.arange(0, GRID_SCALE * r2_cap + 1, dtype=np.int64)
    return s1[:, None], s2[None, :]


def constraint_mask(raw, s1, s2):
    """Feasibility of every grid point by direct inequality evaluation."""
    mask = np.ones((s1.shape[0], s2.shape[1]), dtype=bool)
    for a, b, rhs in raw:
        mask &= a * s1 + b * s2 <= GRID_SCALE * rhs
    return mask


def _scaled_vertices(vertices):
    pts = []
    for v in vertices:
        x, y = GRID_SCALE * v.r1, GRID_SCALE * v.r2
        assert x.denominator == 1 and y.denominator == 1, "vertex off the 1/6 grid"
        pts.append((int(x), int(y)))
    return pts


def polygon_mask(vertices, s1, s2):
    """Membership of every grid point using only the vertex list.

    The vertices arrive in counter-clockwise order, so a point is inside
    iff it sits on the left of (or on) every directed edge. Degenerate
    regions reduce to point equality or an on-segment test.
    """
    pts = _scaled_vertices(vertices)
    if len(pts) == 1:
        (x, y), = pts
        return (s1 == x) & (s2 == y)
    if len(pts) == 2:
        (px, py), (qx, qy) = pts
        cross = (qx - px) * (s2 - py) - (qy - py) * (s1 - px)
        dot = (s1 - px) * (qx - px) + (s2 - py) * (qy - py)
        length_sq = (qx - px) ** 2 + (qy - py) ** 2
        return (cross == 0) & (dot >= 0) & (dot <= length_sq)
    mask = np.ones((s1.shape[0], s2.shape[1]), dtype=bool)
    for (px, py), (qx, qy) in zip(pts, pts[1:] + pts[:1]):
        mask &= (qx - px) * (s2 - py) - (qy - py) * (s1 - px) >= 0
    return mask


def delta_grid_oracle(region, base, user, step=Fraction(1, 12)):
    """Brute-force slice-difference maximum over a dense grid plus breakpoints."""
    axis = 3 - user
    pick = (lambda v: v.r2) if axis == 2 else (lambda v: v.r1)
    functional = (1, 0) if axis == 1 else (0, 1)
    cap = min(region.max_linear(*functional), base.max_linear(*functional))
    samples = {Fraction(0), cap}
    ticks = int(cap / step)
    samples.update(k * step for k in range(ticks + 1))
    for v in region.vertices + base.vertices:
        if 0 <= pick(v) <= cap:
            samples.add(pick(v))
    raw_region = raw_constraints(region.bounds)
    raw_base = raw_constraints(base.bounds)
    best = Fraction(0)
    for value in samples:
        gain = slice_cap(raw_region, axis, value) - slice_cap(raw_base, axis, value)
        if gain > best:
            best = gain
    return best


def random_params(rng, limit, feedback=True):
    return ChannelParams(
        fwd11=rng.randint(0, limit),
        fwd22=rng.randint(0, limit),
        inr12=rng.randint(0, limit),
        inr21=rng.randint(0, limit),
        fb11=rng.randint(0, limit) if feedback else 0,
        fb22=rng.randint(0, limit) if feedback else 0,
    )
