"""Feedback-benefit metrics over capacity regions.

Everything here compares the region at some feedback setting against the
region of the same forward channel with feedback removed. The individual
improvements are maxima of a difference of two concave piecewise-linear
slice functions, so they are computed exactly by evaluating at the
breakpoints (the vertex coordinates of either region); the sum improvement
is a difference of two linear maximizations.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .bounds import capacity_region
from .params import ChannelParams, derive_variant
from .polytope import RatePolytope


@dataclass(frozen=True)
class MetricsResult:
    delta1: Fraction
    delta2: Fraction
    sigma: Fraction

    def __post_init__(self):
        for name in ("delta1", "delta2", "sigma"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)}")


@dataclass(frozen=True)
class ThresholdReport:
    """Largest feedback level on one link that leaves the region unchanged.

    threshold None means the region never changes on this link (the other
    link held at zero), all the way to saturation.
    """

    link: int
    threshold: Optional[int]
    saturation: int

    def __post_init__(self):
        if self.link not in (1, 2):
            raise ValueError(f"link must be 1 or 2, got {self.link!r}")
        if self.saturation < 0:
            raise ValueError(f"saturation must be non-negative, got {self.saturation}")
        if self.threshold is not None and not 0 <= self.threshold < self.saturation:
            raise ValueError(
                f"threshold {self.threshold} outside [0, {self.saturation})"
            )


@dataclass(frozen=True)
class MetricSurface:
    """Metrics for every integer feedback pair up to the saturation grid."""

    base: ChannelParams
    cells: dict


def _delta_between(region: RatePolytope, base: RatePolytope, user: int) -> Fraction:
    """Largest slice gain for one user over the shared other-rate domain.

    Both slice functions are concave piecewise-linear in the fixed
    coordinate, so their difference peaks at a vertex coordinate of one of
    the polytopes; the domain is capped by the smaller region's reach.
    """
    axis = 3 - user  # coordinate held fixed
    pick = (lambda v: v.r2) if axis == 2 else (lambda v: v.r1)
    cap = min(region.max_linear(*((1, 0) if axis == 1 else (0, 1))),
              base.max_linear(*((1, 0) if axis == 1 else (0, 1))))
    breakpoints = {Fraction(0), cap}
    for v in region.vertices + base.vertices:
        if 0 <= pick(v) <= cap:
            breakpoints.add(pick(v))
    best = Fraction(0)
    for value in breakpoints:
        gain = region.slice_max(axis, value) - base.slice_max(axis, value)
        if gain > best:
            best = gain
    return best


def _region_pair(params: ChannelParams):
    return capacity_region(params), capacity_region(derive_variant(params, "no_feedback"))


def delta(params: ChannelParams, user: int) -> Fraction:
    """Maximum individual-rate improvement feedback buys user 1 or 2."""
    if user not in (1, 2):
        raise ValueError(f"user must be 1 or 2, got {user!r}")
    region, base = _region_pair(params)
    return _delta_between(region, base, user)


def sigma(params: ChannelParams) -> Fraction:
    """Maximum sum-rate improvement feedback buys."""
    region, base = _region_pair(params)
    return region.max_linear(1, 1) - base.max_linear(1, 1)


def compute_metrics(params: ChannelParams) -> MetricsResult:
    region, base = _region_pair(params)
    return MetricsResult(
        delta1=_delta_between(region, base, 1),
        delta2=_delta_between(region, base, 2),
        sigma=region.max_linear(1, 1) - base.max_linear(1, 1),
    )


def feedback_threshold(params: ChannelParams, link: int) -> ThresholdReport:
    """Scan one feedback link upward (other link at zero) until the region moves.

    Regions are nested non-decreasing in the feedback level, so the first
    level that enlarges the region ends the scan; if none does by
    saturation, feedback on this link alone is worthless.
    """
    saturation = params.feedback_saturation(link)
    base_params = derive_variant(params, "no_feedback")
    base = capacity_region(base_params)
    field = "fb11" if link == 1 else "fb22"
    for level in range(1, saturation + 1):
        grown = capacity_region(replace(base_params, **{field: level}))
        if not grown.equals_region(base):
            return ThresholdReport(link=link, threshold=level - 1, saturation=saturation)
    return ThresholdReport(link=link, threshold=None, saturation=saturation)


def feedback_useless(params: ChannelParams) -> bool:
    """True when even perfect feedback on both links leaves the region unchanged."""
    base = capacity_region(derive_variant(params, "no_feedback"))
    full = capacity_region(derive_variant(params, "perfect_feedback"))
    return full.equals_region(base)


def sweep(params: ChannelParams) -> MetricSurface:
    """Metrics at every integer feedback pair on the saturation grid.

    Values beyond saturation repeat the edge of the grid, so the grid stops
    there.
    """
    base_params = derive_variant(params, "no_feedback")
    base = capacity_region(base_params)
    base_sum = base.max_linear(1, 1)
    cells = {}
    for fb11 in range(params.feedback_saturation(1) + 1):
        for fb22 in range(params.feedback_saturation(2) + 1):
            region = capacity_region(replace(base_params, fb11=fb11, fb22=fb22))
            cells[(fb11, fb22)] = MetricsResult(
                delta1=_delta_between(region, base, 1),
                delta2=_delta_between(region, base, 2),
                sigma=region.max_linear(1, 1) - base_sum,
            )
    return MetricSurface(base=base_params, cells=cells)
