import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fasttrig.reduction import (
    HALF_PI,
    ReducedAngle,
    reduce_cos,
    reduce_cos_batch,
    reduce_sin,
    reduce_sin_batch,
    reduce_tan,
    reduce_tan_batch,
)

angles = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
mpmath.mp.dps = 50


def test_reduce_sin_examples():
    assert reduce_sin(math.pi / 4) == ReducedAngle(math.pi / 4, 1.0)
    assert reduce_sin(-math.pi / 6) == ReducedAngle(math.pi / 6, -1.0)
    red, sign = reduce_sin(3 * math.pi / 4)
    assert sign == 1.0
    assert math.isclose(math.sin(red), math.sin(3 * math.pi / 4), abs_tol=1e-15)
    assert red == pytest.approx(math.pi / 4, abs=1e-15)


def test_reduce_cos_examples():
    assert reduce_cos(-math.pi / 3) == ReducedAngle(math.pi / 3, 1.0)
    assert reduce_cos(math.pi) == ReducedAngle(0.0, -1.0)
    red, sign = reduce_cos(2 * math.pi / 3)
    assert sign == -1.0
    assert red == pytest.approx(math.pi / 3, abs=1e-15)
    assert sign * math.cos(red) == pytest.approx(math.cos(2 * math.pi / 3), abs=1e-15)


def test_reduce_tan_examples():
    assert reduce_tan(-math.pi / 4) == ReducedAngle(math.pi / 4, -1.0)
    red, sign = reduce_tan(math.pi + math.pi / 6)
    assert sign == 1.0
    assert red == pytest.approx(math.pi / 6, abs=1e-15)
    red, sign = reduce_tan(3 * math.pi / 4)
    assert sign == -1.0
    assert sign * math.tan(red) == pytest.approx(-1.0, abs=1e-15)


@pytest.mark.parametrize("reduce", [reduce_sin, reduce_cos, reduce_tan])
@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_input(reduce, bad):
    red, sign = reduce(bad)
    assert math.isnan(red)
    assert sign == 1.0


def test_signed_zero():
    assert math.copysign(1.0, reduce_sin(-0.0).sign) == -1.0
    assert reduce_cos(-0.0).sign == 1.0


@settings(max_examples=500)
@given(angles)
def test_against_high_precision_oracle(x):
    xm = mpmath.mpf(x)
    for reduce, fn, period_tol in ((reduce_sin, mpmath.sin, 1e-9), (reduce_cos, mpmath.cos, 1e-9)):
        red, sign = reduce(x)
        assert 0.0 <= red <= HALF_PI
        assert sign in (-1.0, 1.0)
        assert abs(sign * fn(red) - fn(xm)) <= period_tol
    red, sign = reduce_tan(x)
    assert 0.0 <= red <= HALF_PI
    t = mpmath.tan(xm)
    if abs(t) < 1e3:
        assert abs(sign * mpmath.tan(red) - t) <= 1e-6 * max(abs(t), 1e-300) + 1e-12


@settings(max_examples=300)
@given(angles)
def test_odd_even_symmetry(x):
    assert reduce_sin(-x) == ReducedAngle(reduce_sin(x).red, -reduce_sin(x).sign)
    assert reduce_cos(-x) == reduce_cos(x)
    assert reduce_tan(-x) == ReducedAngle(reduce_tan(x).red, -reduce_tan(x).sign)


def test_batch_matches_scalar_bitwise():
    rng = np.random.default_rng(7)
    xs = np.concatenate(
        [
            rng.uniform(-1e6, 1e6, 5000),
            rng.uniform(-7, 7, 5000),
            np.arange(-24, 25) * (math.pi / 4),
            [0.0, -0.0, 1e300, -1e300, math.nan, math.inf, -math.inf],
        ]
    )
    for scalar, batch in ((reduce_sin, reduce_sin_batch), (reduce_cos, reduce_cos_batch), (reduce_tan, reduce_tan_batch)):
        red_b, sign_b = batch(xs)
        red_s = np.array([scalar(x).red for x in xs])
        sign_s = np.array([scalar(x).sign for x in xs])
        assert np.array_equal(red_s.view(np.int64), red_b.view(np.int64))
        assert np.array_equal(sign_s.view(np.int64), sign_b.view(np.int64))


def test_huge_inputs_still_in_domain():
    xs = np.array([1e10, -3.3e15, 1e300])
    for batch in (reduce_sin_batch, reduce_cos_batch, reduce_tan_batch):
        red, _ = batch(xs)
        assert np.all((red >= 0) & (red <= HALF_PI))
