import math

import mpmath
import numpy as np
import pytest

from dagenum.asym.airy import (
    AIRY_DOMAIN_MIN,
    _airy_ai_vec,
    airy_ai,
    airy_ai_prime,
    airy_root_a1,
)

mpmath.mp.dps = 40


def _grid():
    xs = list(np.arange(-6.0, 8.0, 0.37))
    xs += [7.9, 8.0, 8.1, 9.0, 12.0, 20.0, 35.0, 60.0, 90.0]
    return xs


@pytest.mark.parametrize("x", _grid())
def test_ai_against_mpmath(x):
    want = float(mpmath.airyai(x))
    got = airy_ai(x)
    assert got == pytest.approx(want, rel=5e-13, abs=1e-300)


@pytest.mark.parametrize("x", _grid())
def test_ai_prime_against_mpmath(x):
    want = float(mpmath.airyai(x, 1))
    got = airy_ai_prime(x)
    assert got == pytest.approx(want, rel=5e-13, abs=1e-300)


def test_vectorized_matches_scalar():
    # term counts are chosen array-wide, so allow a last-bit wobble
    xs = np.array([-5.5, -1.0, 0.0, 4.0, 8.0, 9.5, 30.0])
    vec = _airy_ai_vec(xs)
    for x, v in zip(xs, vec):
        assert v == pytest.approx(airy_ai(float(x)), rel=1e-14, abs=0.0)


def test_domain_guard():
    with pytest.raises(ValueError, match="airy-domain"):
        airy_ai(-6.0001)
    with pytest.raises(ValueError, match="airy-domain"):
        airy_ai_prime(-7.0)
    with pytest.raises(ValueError, match="airy-domain"):
        _airy_ai_vec(np.array([0.0, -6.5]))
    assert airy_ai(AIRY_DOMAIN_MIN) == pytest.approx(
        float(mpmath.airyai(-6.0)), rel=1e-12
    )


def test_deep_tail_underflows_to_zero():
    assert airy_ai(120.0) == 0.0
    # but well before that the value is a genuine denormal-free double
    assert airy_ai(100.0) > 0.0


def test_first_root():
    a1 = airy_root_a1()
    want = float(mpmath.airyaizero(1))
    assert abs(a1 - want) < 1e-12
    assert abs(airy_ai(a1)) < 1e-12
    assert airy_ai_prime(a1) != 0.0


def test_wronskian_identity():
    # Ai(x) Bi'(x) - Ai'(x) Bi(x) = 1/pi; check our Ai against mpmath's Bi
    for x in (-4.0, -1.0, 0.5, 3.0, 7.0):
        lhs = airy_ai(x) * float(mpmath.airybi(x, 1)) - airy_ai_prime(x) * float(
            mpmath.airybi(x)
        )
        assert lhs == pytest.approx(1.0 / math.pi, rel=1e-11)
