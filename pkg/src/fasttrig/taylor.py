"""Truncated Maclaurin series comparators for sin, cos and tan.

``n_terms`` counts nonzero series terms, so order 5 sine is the degree 9
polynomial. Arguments go through the same range reduction as the piecewise
kernels and the polynomial is evaluated by Horner's rule on ``red**2``.

The tangent is the direct series (no pole guard), which diverges badly as the
reduced angle approaches pi/2.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numba import njit

from .reduction import (
    _reduce_cos,
    _reduce_sin,
    _reduce_tan,
    reduce_cos_batch,
    reduce_sin_batch,
    reduce_tan_batch,
)

ORDERS = (5, 7, 9)


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n with the B_1 = -1/2 convention."""
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        b[m] = -sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return b


def sin_series(n_terms: int) -> list[Fraction]:
    return [Fraction((-1) ** k, math.factorial(2 * k + 1)) for k in range(n_terms)]


def cos_series(n_terms: int) -> list[Fraction]:
    return [Fraction((-1) ** k, math.factorial(2 * k)) for k in range(n_terms)]


def tan_series(n_terms: int) -> list[Fraction]:
    """Coefficients of x, x^3, x^5, ... in the tangent series."""
    bern = bernoulli_numbers(2 * n_terms)
    out = []
    for n in range(1, n_terms + 1):
        two_n = 2 * n
        coef = Fraction((-1) ** (n - 1) * 2**two_n * (2**two_n - 1), math.factorial(two_n)) * bern[two_n]
        out.append(coef)
    return out


_SERIES = {"sin": sin_series, "cos": cos_series, "tan": tan_series}


@lru_cache(maxsize=None)
def coefficients(function: str, n_terms: int) -> np.ndarray:
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    try:
        series = _SERIES[function]
    except KeyError:
        raise ValueError(f"unknown function {function!r}") from None
    arr = np.array([float(c) for c in series(n_terms)], dtype=np.float64)
    arr.setflags(write=False)
    return arr


@njit(cache=True)
def _horner(coeffs, r2):
    n = coeffs.shape[0]
    p = coeffs[n - 1]
    for j in range(n - 2, -1, -1):
        p = p * r2 + coeffs[j]
    return p


@njit(cache=True)
def _taylor_sin_core(x, coeffs):
    red, sign = _reduce_sin(x)
    if math.isnan(red):
        return math.nan
    return red * _horner(coeffs, red * red) * sign


@njit(cache=True)
def _taylor_cos_core(x, coeffs):
    red, sign = _reduce_cos(x)
    if math.isnan(red):
        return math.nan
    return _horner(coeffs, red * red) * sign


@njit(cache=True)
def _taylor_tan_core(x, coeffs):
    red, sign = _reduce_tan(x)
    if math.isnan(red):
        return math.nan
    return red * _horner(coeffs, red * red) * sign


def taylor_sin(x: float, n_terms: int = 5) -> float:
    return float(_taylor_sin_core(float(x), coefficients("sin", n_terms)))


def taylor_cos(x: float, n_terms: int = 5) -> float:
    return float(_taylor_cos_core(float(x), coefficients("cos", n_terms)))


def taylor_tan(x: float, n_terms: int = 5) -> float:
    return float(_taylor_tan_core(float(x), coefficients("tan", n_terms)))


def _horner_batch(coeffs: np.ndarray, r2: np.ndarray) -> np.ndarray:
    p = np.full_like(r2, coeffs[-1])
    for c in coeffs[-2::-1]:
        p = p * r2 + c
    return p


def taylor_sin_batch(xs, n_terms: int = 5) -> np.ndarray:
    red, sign = reduce_sin_batch(xs)
    return red * _horner_batch(coefficients("sin", n_terms), red * red) * sign


def taylor_cos_batch(xs, n_terms: int = 5) -> np.ndarray:
    red, sign = reduce_cos_batch(xs)
    return _horner_batch(coefficients("cos", n_terms), red * red) * sign


def taylor_tan_batch(xs, n_terms: int = 5) -> np.ndarray:
    red, sign = reduce_tan_batch(xs)
    return red * _horner_batch(coefficients("tan", n_terms), red * red) * sign
