"""Rate constraints of the capacity region and their assembly into a bound set.

The capacity region of the two-user channel with noisy output feedback is cut
out by five linear inequalities on the rate pair (R1, R2): one cap per
individual rate, one on the sum, and one per weighted combination 2*Ri + Rj.
Each cap is the minimum over one or two elementary bound evaluations; those
eight evaluations are enumerated by :class:`Bound` so a constraint can always
be traced back to the evaluation that produced it.

All arithmetic is exact signed-integer. Intermediate expressions may go
negative before their clip; ``_pos`` applies the clip exactly where each
formula places it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .params import ChannelParams


def _pos(x: int) -> int:
    return x if x > 0 else 0


class Bound(enum.Enum):
    """The eight elementary bound evaluations.

    ``*_INTERFERENCE`` bounds depend on the forward links only.
    ``Ri_PARTNER_FEEDBACK`` caps user i through the other pair's feedback
    path (its signal can reach its receiver via the partner's loop).
    ``SUM_FEEDBACK`` adds one clipped feedback credit per link to a
    decode-own-signal baseline, and each ``WEIGHTED_*`` bound adds the
    lighter user's credit to its own baseline.
    """

    R1_INTERFERENCE = "r1_interference"
    R2_INTERFERENCE = "r2_interference"
    R1_PARTNER_FEEDBACK = "r1_partner_feedback"
    R2_PARTNER_FEEDBACK = "r2_partner_feedback"
    SUM_INTERFERENCE = "sum_interference"
    SUM_FEEDBACK = "sum_feedback"
    WEIGHTED_2R1_R2 = "weighted_2r1_r2"
    WEIGHTED_2R2_R1 = "weighted_2r2_r1"


def _user_view(p: ChannelParams, user: int):
    """(fwd, inr_in, inr_out, fb) for one user.

    ``inr_in`` is the cross level arriving at this user's receiver;
    ``inr_out`` is the level at which this user lands on the other receiver.
    """
    if user == 1:
        return p.fwd11, p.inr12, p.inr21, p.fb11
    if user == 2:
        return p.fwd22, p.inr21, p.inr12, p.fb22
    raise ValueError(f"user must be 1 or 2, got {user!r}")


def _individual_interference(p: ChannelParams, user: int) -> int:
    """Cap on one rate from what either receiver can resolve of the signal."""
    fwd, inr_in, inr_out, _ = _user_view(p, user)
    return min(max(fwd, inr_out), max(fwd, inr_in))


def _individual_partner_feedback(p: ChannelParams, user: int) -> int:
    """Cap on one rate through the partner pair's feedback loop.

    The partner's feedback link relays this user's signal back around; its
    value is discounted by the levels the partner's own signal occupies on
    top of the cross signal. The discounted term may be negative; the outer
    max with the direct link absorbs it.
    """
    fwd_i, _, inr_out_i, _ = _user_view(p, user)
    fwd_j, _, _, fb_j = _user_view(p, 3 - user)
    relayed = fb_j - _pos(fwd_j - inr_out_i)
    return min(max(fwd_i, inr_out_i), max(fwd_i, relayed))


def _sum_interference(p: ChannelParams) -> int:
    """Sum cap from letting one receiver decode both signals."""
    via_rx1 = max(p.fwd11, p.inr12) + _pos(p.fwd22 - p.inr12)
    via_rx2 = max(p.fwd22, p.inr21) + _pos(p.fwd11 - p.inr21)
    return min(via_rx1, via_rx2)


def _feedback_credit(fwd: int, inr_in: int, inr_out: int, fb: int) -> int:
    """Clipped sum-rate credit contributed by one feedback link.

    The link returns at most min(fb, max(fwd, inr_in)) output levels; only
    the part below the transmitter's own private levels carries anything it
    did not already know, and levels the other receiver observes anyway are
    deducted. Negative credit is clipped to zero.
    """
    returned = _pos(min(fb, max(fwd, inr_in)) - _pos(fwd - inr_in))
    overheard = min(fwd, inr_out) - min(_pos(fwd - inr_in), inr_out)
    return _pos(returned - _pos(inr_in - fwd) - overheard)


def _sum_feedback(p: ChannelParams) -> int:
    """Sum cap from private-level decoding plus both feedback credits."""
    base = max(_pos(p.fwd11 - p.inr12), p.inr21) + max(_pos(p.fwd22 - p.inr21), p.inr12)
    return base + _feedback_credit(*_user_view(p, 1)) + _feedback_credit(*_user_view(p, 2))


def _weighted(p: ChannelParams, heavy: int) -> int:
    """Cap on 2*R_heavy + R_other, including the lighter user's credit."""
    fwd_i, inr_in_i, _, _ = _user_view(p, heavy)
    fwd_j, inr_in_j, inr_out_j, fb_j = _user_view(p, 3 - heavy)
    base = (
        max(fwd_j, inr_in_j)
        + max(fwd_i, inr_in_i)
        + _pos(fwd_i - inr_in_j)
        - min(_pos(fwd_j - inr_in_j), inr_in_i)
    )
    return base + _feedback_credit(fwd_j, inr_in_j, inr_out_j, fb_j)


def evaluate_bound(params: ChannelParams, bound: Bound) -> int:
    """Exact right-hand side of one elementary bound evaluation."""
    if bound is Bound.R1_INTERFERENCE:
        return _individual_interference(params, 1)
    if bound is Bound.R2_INTERFERENCE:
        return _individual_interference(params, 2)
    if bound is Bound.R1_PARTNER_FEEDBACK:
        return _individual_partner_feedback(params, 1)
    if bound is Bound.R2_PARTNER_FEEDBACK:
        return _individual_partner_feedback(params, 2)
    if bound is Bound.SUM_INTERFERENCE:
        return _sum_interference(params)
    if bound is Bound.SUM_FEEDBACK:
        return _sum_feedback(params)
    if bound is Bound.WEIGHTED_2R1_R2:
        return _weighted(params, 1)
    if bound is Bound.WEIGHTED_2R2_R1:
        return _weighted(params, 2)
    raise ValueError(f"unknown bound {bound!r}")


@dataclass(frozen=True)
class Constraint:
    """One half-plane r1_coeff*R1 + r2_coeff*R2 <= rhs.

    ``source`` names the elementary evaluation whose value became the
    right-hand side; it is None for the two non-negativity constraints
    (recognizable by their -1 coefficient).
    """

    r1_coeff: int
    r2_coeff: int
    rhs: int
    source: Optional[Bound] = None

    def __post_init__(self):
        if self.rhs < 0:
            raise ValueError(f"constraint right-hand side must be non-negative, got {self.rhs}")

    def holds(self, r1, r2) -> bool:
        return self.r1_coeff * r1 + self.r2_coeff * r2 <= self.rhs


# Coefficient pairs of the five canonical upper bounds, in fixed order.
CANONICAL_FORMS = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2))

NONNEGATIVITY = (Constraint(-1, 0, 0), Constraint(0, -1, 0))


@dataclass(frozen=True)
class BoundSet:
    """The five canonical constraints plus the two non-negativity constraints."""

    constraints: tuple

    def __post_init__(self):
        forms = tuple((c.r1_coeff, c.r2_coeff) for c in self.constraints)
        if forms != CANONICAL_FORMS + ((-1, 0), (0, -1)):
            raise ValueError(f"bound set has unexpected constraint forms {forms}")

    @classmethod
    def from_caps(cls, r1_max, r2_max, sum_max, double_r1_max, double_r2_max) -> "BoundSet":
        """Assemble a bound set from explicit canonical right-hand sides."""
        caps = (r1_max, r2_max, sum_max, double_r1_max, double_r2_max)
        upper = tuple(Constraint(a, b, rhs) for (a, b), rhs in zip(CANONICAL_FORMS, caps))
        return cls(upper + NONNEGATIVITY)

    def cap(self, r1_coeff: int, r2_coeff: int) -> int:
        """Right-hand side of the canonical constraint with these coefficients."""
        for c in self.constraints:
            if (c.r1_coeff, c.r2_coeff) == (r1_coeff, r2_coeff):
                return c.rhs
        raise KeyError(f"no constraint with coefficients ({r1_coeff}, {r2_coeff})")


def _min_with_source(params: ChannelParams, *candidates: Bound):
    best_value, best_source = None, None
    for bound in candidates:
        value = evaluate_bound(params, bound)
        if best_value is None or value < best_value:
            best_value, best_source = value, bound
    return best_value, best_source


def build_bounds(params: ChannelParams) -> BoundSet:
    """Evaluate all eight bounds and assemble the region's inequality description.

    Each canonical right-hand side is the minimum over its contributing
    evaluations; redundant constraints are kept (pruning is the polytope
    engine's concern, not this one's).
    """
    r1_cap, r1_src = _min_with_source(params, Bound.R1_INTERFERENCE, Bound.R1_PARTNER_FEEDBACK)
    r2_cap, r2_src = _min_with_source(params, Bound.R2_INTERFERENCE, Bound.R2_PARTNER_FEEDBACK)
    sum_cap, sum_src = _min_with_source(params, Bound.SUM_INTERFERENCE, Bound.SUM_FEEDBACK)
    return BoundSet(
        (
            Constraint(1, 0, r1_cap, r1_src),
            Constraint(0, 1, r2_cap, r2_src),
            Constraint(1, 1, sum_cap, sum_src),
            Constraint(2, 1, evaluate_bound(params, Bound.WEIGHTED_2R1_R2), Bound.WEIGHTED_2R1_R2),
            Constraint(1, 2, evaluate_bound(params, Bound.WEIGHTED_2R2_R1), Bound.WEIGHTED_2R2_R1),
        )
        + NONNEGATIVITY
    )


def capacity_region(params: ChannelParams):
    """The capacity region as an exact vertex-enumerated polytope."""
    from .polytope import RatePolytope

    return RatePolytope.from_bounds(build_bounds(params))
