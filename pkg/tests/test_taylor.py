import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from fasttrig.taylor import (
    ORDERS,
    bernoulli_numbers,
    coefficients,
    tan_series,
    taylor_cos,
    taylor_cos_batch,
    taylor_sin,
    taylor_sin_batch,
    taylor_tan,
    taylor_tan_batch,
)

mpmath.mp.dps = 40

TAN_COEFFS = [
    Fraction(1),
    Fraction(1, 3),
    Fraction(2, 15),
    Fraction(17, 315),
    Fraction(62, 2835),
    Fraction(1382, 155925),
    Fraction(21844, 6081075),
    Fraction(929569, 638512875),
    Fraction(6404582, 10854718875),
]


def partial_sum(kind, x, n):
    """High-precision partial sum computed term by term, independent of Horner."""
    x = mpmath.mpf(x)
    if kind == "sin":
        return sum((-1) ** k * x ** (2 * k + 1) / mpmath.factorial(2 * k + 1) for k in range(n))
    if kind == "cos":
        return sum((-1) ** k * x ** (2 * k) / mpmath.factorial(2 * k) for k in range(n))
    return sum(mpmath.mpf(c.numerator) / c.denominator * x ** (2 * k + 1) for k, c in enumerate(TAN_COEFFS[:n]))


def test_bernoulli():
    b = bernoulli_numbers(8)
    assert b[:5] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]


def test_tan_coefficients_match_known_series():
    assert tan_series(9) == TAN_COEFFS


def test_coefficients_validation():
    with pytest.raises(ValueError):
        coefficients("sin", 0)
    with pytest.raises(ValueError):
        coefficients("sec", 3)
    assert not coefficients("sin", 5).flags.writeable


@pytest.mark.parametrize("n", ORDERS)
def test_zero(n):
    assert taylor_sin(0.0, n) == 0.0
    assert taylor_cos(0.0, n) == 1.0
    assert taylor_tan(0.0, n) == 0.0


def test_sin_examples():
    assert taylor_sin(math.pi / 2, 5) == pytest.approx(1 + 3.6e-6, abs=1e-7)
    assert taylor_sin(math.pi / 2, 7) == pytest.approx(1.0, abs=1e-8)


def test_cos_examples():
    assert taylor_cos(math.pi / 2, 5) == pytest.approx(0.0, abs=2.5e-5)
    assert taylor_cos(math.pi, 5) == pytest.approx(-1.0, abs=2.5e-5)
    first_omitted = (math.pi / 2) ** 10 / math.factorial(10)
    assert abs(taylor_cos(math.pi / 2, 5)) == pytest.approx(first_omitted, rel=0.05)


def test_tan_examples():
    assert taylor_tan(math.pi / 4, 5) == pytest.approx(float(partial_sum("tan", math.pi / 4, 5)), rel=1e-14)
    assert taylor_tan(math.pi / 4, 5) == pytest.approx(0.999171, abs=1e-6)
    near_pole = 1.5645
    assert taylor_tan(near_pole, 5) == pytest.approx(6.6, abs=0.1)
    assert math.tan(near_pole) - taylor_tan(near_pole, 5) == pytest.approx(152.3, abs=1.0)


@pytest.mark.parametrize("kind,f", [("sin", taylor_sin), ("cos", taylor_cos), ("tan", taylor_tan)])
@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_horner_matches_partial_sum(kind, f, n):
    for x in np.linspace(0, math.pi / 2 - 0.01, 9):
        assert f(x, n) == pytest.approx(float(partial_sum(kind, x, n)), rel=1e-14, abs=1e-15)


def test_error_bounds_order5():
    x = np.linspace(0, math.pi / 2, 100_001)
    assert np.abs(taylor_sin_batch(x, 5) - np.sin(x)).max() <= 3.7e-6
    assert np.abs(taylor_cos_batch(x, 5) - np.cos(x)).max() <= 2.5e-5


def test_errors_decrease_with_order():
    x = np.linspace(0, math.pi / 2, 2001)
    for batch, ref in ((taylor_sin_batch, np.sin), (taylor_cos_batch, np.cos)):
        errs = [np.abs(batch(x, n) - ref(x)) for n in range(3, 8)]
        for lo, hi in zip(errs[1:], errs):
            # floating point noise floor once the truncation error vanishes
            assert np.all(lo <= hi + 2e-16)


def test_shares_range_reduction():
    assert taylor_sin(math.pi + 0.3, 9) == pytest.approx(-math.sin(0.3), abs=1e-12)
    assert taylor_cos(-2 * math.pi / 3, 9) == pytest.approx(-0.5, abs=1e-12)
    assert taylor_tan(math.pi - 0.2, 9) == pytest.approx(-math.tan(0.2), abs=1e-12)


@pytest.mark.parametrize("n", ORDERS)
def test_batch_equals_scalar_bitwise(n):
    rng = np.random.default_rng(5)
    xs = np.concatenate([rng.uniform(-1e6, 1e6, 1000), rng.uniform(-7, 7, 1000), [0.0, -0.0, math.nan, math.inf]])
    for scalar, batch in ((taylor_sin, taylor_sin_batch), (taylor_cos, taylor_cos_batch), (taylor_tan, taylor_tan_batch)):
        expected = np.array([scalar(x, n) for x in xs])
        assert np.array_equal(expected.view(np.int64), batch(xs, n).view(np.int64))
