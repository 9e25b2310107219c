import dataclasses
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ldic import (
    ChannelParams,
    MetricsResult,
    ThresholdReport,
    capacity_region,
    compute_metrics,
    delta,
    derive_variant,
    feedback_threshold,
    feedback_useless,
    sigma,
    sweep,
)

from helpers import delta_grid_oracle, random_params

FIXTURES = {
    "strong_forward": ChannelParams(20, 15, 12, 13, 15, 14),
    "mild_cross": ChannelParams(10, 10, 3, 8, 9, 4),
    "lopsided": ChannelParams(10, 20, 6, 12, 10, 11),
    "cross_dominant": ChannelParams(7, 8, 15, 13, 11, 9),
}


@pytest.mark.parametrize(
    "params,user,expected",
    [
        (FIXTURES["strong_forward"], 1, Fraction(2)),
        (FIXTURES["mild_cross"], 2, Fraction(1)),
        (FIXTURES["cross_dominant"], 2, Fraction(3)),
        (FIXTURES["lopsided"], 1, Fraction(3, 2)),
    ],
)
def test_individual_improvements(params, user, expected):
    assert delta(params, user) == expected


def test_identical_regions_mean_zero_improvement():
    p = ChannelParams(6, 6, 2, 2, 0, 0)
    assert delta(p, 1) == 0 and delta(p, 2) == 0 and sigma(p) == 0


@pytest.mark.parametrize(
    "params,expected",
    [
        (FIXTURES["mild_cross"], Fraction(1)),
        (FIXTURES["strong_forward"], Fraction(0)),
        (FIXTURES["cross_dominant"], Fraction(0)),
    ],
)
def test_sum_improvements(params, expected):
    assert sigma(params) == expected


def test_compute_metrics_bundles_all_three():
    result = compute_metrics(FIXTURES["mild_cross"])
    assert result == MetricsResult(Fraction(1), Fraction(1), Fraction(1))


def test_metrics_result_rejects_negatives():
    with pytest.raises(ValueError):
        MetricsResult(Fraction(-1), Fraction(0), Fraction(0))


def test_delta_rejects_bad_user():
    with pytest.raises(ValueError):
        delta(FIXTURES["mild_cross"], 0)


def test_lopsided_fixture_against_the_grid_oracle():
    # the one individual improvement whose expected value is settled by
    # the brute-force oracle rather than a frozen constant
    params = FIXTURES["lopsided"]
    region = capacity_region(params)
    base = capacity_region(derive_variant(params, "no_feedback"))
    assert delta(params, 2) == delta_grid_oracle(region, base, 2)
    assert delta(params, 2) == 3


@pytest.mark.parametrize(
    "params,link,expected_threshold",
    [
        (ChannelParams(20, 15, 12, 13), 1, 13),
        (ChannelParams(20, 15, 12, 13), 2, 12),
        (ChannelParams(10, 10, 3, 8), 1, 8),
        (ChannelParams(10, 10, 3, 8), 2, 3),
        (ChannelParams(10, 20, 6, 12), 1, None),
        (ChannelParams(10, 20, 6, 12), 2, 8),
        (ChannelParams(7, 8, 15, 13), 1, 8),
        (ChannelParams(7, 8, 15, 13), 2, 7),
    ],
)
def test_threshold_fixtures(params, link, expected_threshold):
    report = feedback_threshold(params, link)
    assert report.link == link
    assert report.threshold == expected_threshold
    assert report.saturation == params.feedback_saturation(link)
    if report.threshold is not None:
        assert report.threshold < report.saturation


def test_threshold_ignores_the_incoming_feedback_values():
    with_fb = feedback_threshold(ChannelParams(10, 10, 3, 8, 9, 4), 2)
    without = feedback_threshold(ChannelParams(10, 10, 3, 8), 2)
    assert with_fb == without


def test_threshold_on_a_degenerate_link():
    report = feedback_threshold(ChannelParams(0, 0, 0, 0), 1)
    assert report.threshold is None and report.saturation == 0


def test_threshold_report_validation():
    with pytest.raises(ValueError):
        ThresholdReport(link=3, threshold=None, saturation=1)
    with pytest.raises(ValueError):
        ThresholdReport(link=1, threshold=5, saturation=5)


@pytest.mark.parametrize(
    "params,expected",
    [
        (ChannelParams(10, 9, 2, 15), True),
        (ChannelParams(10, 10, 3, 8), False),
        (ChannelParams(0, 0, 0, 0), True),
    ],
)
def test_feedback_useless(params, expected):
    assert feedback_useless(params) is expected


def test_sweep_grid_shape_and_edges():
    params = ChannelParams(6, 5, 3, 4)
    surface = sweep(params)
    sat1, sat2 = params.feedback_saturation(1), params.feedback_saturation(2)
    assert set(surface.cells) == {
        (i, j) for i in range(sat1 + 1) for j in range(sat2 + 1)
    }
    assert surface.base == derive_variant(params, "no_feedback")
    zero = surface.cells[(0, 0)]
    assert (zero.delta1, zero.delta2, zero.sigma) == (0, 0, 0)


def test_sweep_reproduces_the_pointwise_metrics():
    params = ChannelParams(6, 5, 3, 4)
    surface = sweep(params)
    probe = dataclasses.replace(params, fb11=4, fb22=3)
    assert surface.cells[(4, 3)] == compute_metrics(probe)


def test_sweep_is_monotone_along_both_axes():
    surface = sweep(ChannelParams(6, 5, 3, 4))
    for (i, j), cell in surface.cells.items():
        for neighbor in ((i + 1, j), (i, j + 1)):
            if neighbor in surface.cells:
                bigger = surface.cells[neighbor]
                assert bigger.delta1 >= cell.delta1
                assert bigger.delta2 >= cell.delta2
                assert bigger.sigma >= cell.sigma


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12),
       st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_metrics_are_never_negative(f1, f2, i12, i21, b1, b2):
    result = compute_metrics(ChannelParams(f1, f2, i12, i21, b1, b2))
    assert result.delta1 >= 0 and result.delta2 >= 0 and result.sigma >= 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12),
       st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_perfect_feedback_region_dominates(f1, f2, i12, i21, b1, b2):
    params = ChannelParams(f1, f2, i12, i21, b1, b2)
    noisy = capacity_region(params)
    perfect = capacity_region(derive_variant(params, "perfect_feedback"))
    assert noisy.subset_of(perfect)


def test_sum_maximum_is_capped_by_the_sum_bound():
    rng = random.Random(7312)
    for _ in range(80):
        params = random_params(rng, 15)
        region = capacity_region(params)
        base = capacity_region(derive_variant(params, "no_feedback"))
        assert region.max_linear(1, 1) <= region.bounds.cap(1, 1)
        assert base.max_linear(1, 1) <= base.bounds.cap(1, 1)
        assert sigma(params) == region.max_linear(1, 1) - base.max_linear(1, 1)


def test_sum_improvement_can_exceed_the_sum_bound_gap():
    # the sum caps can stay put while feedback relaxes an individual cap:
    # here the partner loop lifts user 1 from 1 to 3 with r2 pinned at 0
    params = ChannelParams(1, 0, 3, 15, 0, 9)
    region = capacity_region(params)
    base = capacity_region(derive_variant(params, "no_feedback"))
    assert region.bounds.cap(1, 1) == base.bounds.cap(1, 1) == 3
    assert sigma(params) == 2
