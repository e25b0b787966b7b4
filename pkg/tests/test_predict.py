import math

import pytest

from dagenum.asym.predict import (
    RatioPoint,
    _log_int,
    log_factorial,
    predictor_log,
    ratio_diagnostic,
)


def test_log_factorial_small():
    for n in (0, 1, 2, 5, 20, 170, 2000):
        assert log_factorial(n) == pytest.approx(math.lgamma(n + 1), rel=1e-13)
    with pytest.raises(ValueError, match="out-of-range"):
        log_factorial(-1)


def test_log_factorial_stirling_branch():
    # above the exact-summation cutoff the Stirling form takes over
    n = 250_000
    assert log_factorial(n) == pytest.approx(math.lgamma(n + 1), rel=1e-14)


def test_log_int_bignum():
    assert _log_int(7) == pytest.approx(math.log(7.0))
    big = 10**500 + 12345
    assert _log_int(big) == pytest.approx(500 * math.log(10.0), rel=1e-15)


def test_predictor_guards():
    with pytest.raises(ValueError, match="arity-k"):
        predictor_log(1, 5)
    with pytest.raises(ValueError, match="out-of-range"):
        predictor_log(2, 0)


def test_predictor_dominant_term():
    # the superexponential part dominates: predictor ~ (k-1) ln n!
    n = 2000
    for k in (2, 3):
        lead = (k - 1) * log_factorial(n)
        assert predictor_log(k, n) == pytest.approx(lead, rel=0.25)


def test_ratio_point_property():
    pt = RatioPoint(4, 10.0, 7.5)
    assert pt.log_ratio == 2.5
    assert pt.route == "exact"


def test_ratio_route_selection():
    pts = ratio_diagnostic("relaxed", 2, [500, 700])
    assert [pt.route for pt in pts] == ["exact", "scaled"]
    assert [pt.n for pt in pts] == [500, 700]


def test_ratio_routes_agree_on_overlap():
    for k in (2, 3):
        exact = ratio_diagnostic("relaxed", k, [40, 80], route="exact")
        scaled = ratio_diagnostic("relaxed", k, [40, 80], route="scaled")
        for e, s in zip(exact, scaled):
            assert s.route == "scaled"
            assert abs(e.log_ratio - s.log_ratio) < 1e-9


def test_ratio_guards():
    with pytest.raises(ValueError, match="route"):
        ratio_diagnostic("relaxed", 2, [10], route="guess")
    with pytest.raises(ValueError, match="route"):
        ratio_diagnostic("compacted", 2, [10], route="scaled")
    with pytest.raises(ValueError, match="out-of-range"):
        ratio_diagnostic("relaxed", 2, [0])
    assert ratio_diagnostic("relaxed", 2, []) == []


def test_ratio_other_kinds_exact_route():
    pts = ratio_diagnostic("compacted", 2, [16, 32])
    assert all(pt.route == "exact" for pt in pts)
    assert pts[0].log_ratio != pts[1].log_ratio
