"""Piecewise rational sin/cos/tan on six pi/12 segments of [0, pi/2].

Every segment starts from a degree-space tangent approximation
``tan(x deg) ~ (a x + b) / (c x + d)`` with small integer coefficients. Sine
and cosine follow from it by normalising the vector (numerator, denominator)::

    sin ~ (a x + b) / sqrt(X x^2 + Y x + Z)
    cos ~ (c x + d) / sqrt(X x^2 + Y x + Z)

with ``X = a^2 + c^2``, ``Y = 2(ab + cd)``, ``Z = b^2 + d^2``. The radian-space
tables multiply the slopes by 180/pi at full double precision.

The inverse square root is either exact or the bit-level FISR seed followed by
Newton-Raphson steps. The tangent's reciprocal in FISR mode is the squared
inverse square root, so the fast path has no division and no sqrt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .reduction import (
    HALF_PI,
    PI,
    _reduce_cos,
    _reduce_sin,
    _reduce_tan,
    reduce_cos_batch,
    reduce_sin_batch,
    reduce_tan_batch,
)

RAD_TO_DEG = 180.0 / math.pi
SEGMENT_WIDTH = PI / 12.0
N_SEGMENTS = 6
TAN_GUARD = 1e-3
FISR_MAGIC = 0x5FE6EB50C7B537A9

# (a, b, c, d) of tan(x deg) ~ (a x + b) / (c x + d), one row per 15 degrees.
DEGREE_SEGMENTS: tuple[tuple[int, int, int, int], ...] = (
    (11, 0, -1, 632),
    (10, 10, -4, 657),
    (6, 46, -5, 541),
    (10, 217, -13, 1252),
    (4, 297, -10, 910),
    (1, 542, -11, 990),
)


@dataclass(frozen=True)
class SqrtMode:
    """Inverse square root evaluation path.

    ``SqrtMode(exact=True)`` uses ``1 / sqrt(v)``; otherwise the FISR seed is
    refined with ``newton_steps`` Newton-Raphson iterations.
    """

    exact: bool = False
    newton_steps: int = 1

    def __post_init__(self):
        if self.newton_steps < 1:
            raise ValueError(f"newton_steps must be >= 1, got {self.newton_steps}")

    @property
    def steps(self) -> int:
        """Kernel encoding: 0 for exact, otherwise the Newton step count."""
        return 0 if self.exact else self.newton_steps

    @classmethod
    def parse(cls, name: str) -> SqrtMode:
        if name == "exact":
            return EXACT
        if name == "fisr":
            return FISR
        raise ValueError(f"unknown sqrt mode {name!r} (expected 'exact' or 'fisr')")


EXACT = SqrtMode(exact=True)
FISR = SqrtMode()


@dataclass(frozen=True)
class SegmentCoeffs:
    a: float
    b: float
    c: float
    d: float
    X: float
    Y: float
    Z: float

    @classmethod
    def from_tan(cls, a: float, b: float, c: float, d: float) -> SegmentCoeffs:
        return cls(a, b, c, d, a * a + c * c, 2.0 * (a * b + c * d), b * b + d * d)

    @classmethod
    def from_degree(cls, a: float, b: float, c: float, d: float) -> SegmentCoeffs:
        """Radian-space coefficients for a degree-space tangent rational."""
        return cls.from_tan(a * RAD_TO_DEG, float(b), c * RAD_TO_DEG, float(d))

    def radicand(self, x: float) -> float:
        return (self.X * x + self.Y) * x + self.Z


@dataclass(frozen=True)
class SegmentTable:
    segments: tuple[SegmentCoeffs, ...]

    def __post_init__(self):
        if len(self.segments) != N_SEGMENTS:
            raise ValueError(f"expected {N_SEGMENTS} segments, got {len(self.segments)}")

    @property
    def boundaries(self) -> tuple[float, ...]:
        return tuple(k * SEGMENT_WIDTH for k in range(N_SEGMENTS)) + (HALF_PI,)

    def __getitem__(self, k: int) -> SegmentCoeffs:
        return self.segments[k]

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def column(self, name: str) -> np.ndarray:
        col = np.array([getattr(s, name) for s in self.segments], dtype=np.float64)
        col.setflags(write=False)
        return col


# sin, cos and tan share (a, b, c, d) segment for segment, so one table serves all three.
TABLE = SegmentTable(tuple(SegmentCoeffs.from_degree(*row) for row in DEGREE_SEGMENTS))
SIN_COS_TABLE = TABLE
TAN_TABLE = TABLE

_A, _B, _C, _D = (TABLE.column(n) for n in "abcd")
_X, _Y, _Z = (TABLE.column(n) for n in "XYZ")


# -- scalar kernels ---------------------------------------------------------


@njit(cache=True)
def _fisr(v, steps):
    if not (v > 0.0) or v == math.inf:
        return math.nan
    i = np.float64(v).view(np.int64)
    i = np.int64(FISR_MAGIC) - (i >> 1)
    y = np.int64(i).view(np.float64)
    x2 = v * 0.5
    for _ in range(steps):
        y = y * (1.5 - x2 * y * y)
    return y


@njit(cache=True)
def _inv_sqrt(v, steps):
    if steps == 0:
        if not (v > 0.0) or v == math.inf:
            return math.nan
        return 1.0 / math.sqrt(v)
    return _fisr(v, steps)


@njit(cache=True)
def _segment_index(red):
    k = int(math.floor(red / SEGMENT_WIDTH))
    return min(k, N_SEGMENTS - 1)


@njit(cache=True)
def _sin_helper(a, b, x, y, z, ang, steps):
    poly = a * ang + b
    inner = (x * ang + y) * ang + z
    return poly * _inv_sqrt(inner, steps)


@njit(cache=True)
def _tan_helper(a, b, c, d, ang, steps):
    poly = a * ang + b
    den = c * ang + d
    if steps == 0:
        if not (den > 0.0):
            return math.nan
        return poly / den
    temp = _fisr(den, steps)
    return poly * (temp * temp)


@njit(cache=True)
def _sin_core(x, steps):
    red, sign = _reduce_sin(x)
    if math.isnan(red):
        return math.nan
    k = _segment_index(red)
    return _sin_helper(_A[k], _B[k], _X[k], _Y[k], _Z[k], red, steps) * sign


@njit(cache=True)
def _cos_core(x, steps):
    red, sign = _reduce_cos(x)
    if math.isnan(red):
        return math.nan
    k = _segment_index(red)
    return _sin_helper(_C[k], _D[k], _X[k], _Y[k], _Z[k], red, steps) * sign


@njit(cache=True)
def _tan_core(x, steps):
    red, sign = _reduce_tan(x)
    if math.isnan(red):
        return math.nan
    if abs(red - HALF_PI) < TAN_GUARD:
        return sign * math.inf
    k = _segment_index(red)
    return _tan_helper(_A[k], _B[k], _C[k], _D[k], red, steps) * sign


# -- public scalar API ------------------------------------------------------


def segment_index(red: float) -> int:
    """Table row for a reduced angle in [0, pi/2]; pi/2 itself maps to the last row."""
    return int(_segment_index(float(red)))


def fast_inverse_sqrt(v: float, mode: SqrtMode = FISR) -> float:
    """Approximate ``v ** -0.5``. Non-positive, NaN or infinite ``v`` gives NaN."""
    return float(_inv_sqrt(float(v), mode.steps))


def eval_sin_segment(coeffs: SegmentCoeffs, red: float, mode: SqrtMode = FISR) -> float:
    c = coeffs
    return float(_sin_helper(c.a, c.b, c.X, c.Y, c.Z, float(red), mode.steps))


def eval_cos_segment(coeffs: SegmentCoeffs, red: float, mode: SqrtMode = FISR) -> float:
    c = coeffs
    return float(_sin_helper(c.c, c.d, c.X, c.Y, c.Z, float(red), mode.steps))


def eval_tan_segment(coeffs: SegmentCoeffs, red: float, mode: SqrtMode = FISR) -> float:
    c = coeffs
    return float(_tan_helper(c.a, c.b, c.c, c.d, float(red), mode.steps))


def proposed_sin(x: float, mode: SqrtMode = FISR) -> float:
    return float(_sin_core(float(x), mode.steps))


def proposed_cos(x: float, mode: SqrtMode = FISR) -> float:
    return float(_cos_core(float(x), mode.steps))


def proposed_tan(x: float, mode: SqrtMode = FISR) -> float:
    """Piecewise rational tangent.

    Within 1e-3 of the pole (after reduction) this returns ``sign * inf``
    rather than evaluating a near-zero denominator.
    """
    return float(_tan_core(float(x), mode.steps))


# -- batch API --------------------------------------------------------------


def _fisr_array(v: np.ndarray, steps: int) -> np.ndarray:
    bad = ~(v > 0.0) | (v == np.inf)
    safe = np.where(bad, 1.0, v)
    i = np.int64(FISR_MAGIC) - (safe.view(np.int64) >> 1)
    y = i.view(np.float64)
    x2 = safe * 0.5
    for _ in range(steps):
        y = y * (1.5 - x2 * y * y)
    return np.where(bad, np.nan, y)


def _inv_sqrt_array(v: np.ndarray, steps: int) -> np.ndarray:
    if steps == 0:
        bad = ~(v > 0.0) | (v == np.inf)
        out = 1.0 / np.sqrt(np.where(bad, 1.0, v))
        return np.where(bad, np.nan, out)
    return _fisr_array(v, steps)


def fast_inverse_sqrt_batch(vs, mode: SqrtMode = FISR) -> np.ndarray:
    v = np.ascontiguousarray(vs, dtype=np.float64)
    with np.errstate(invalid="ignore"):
        return _inv_sqrt_array(v, mode.steps)


def segment_index_batch(red) -> np.ndarray:
    r = np.asarray(red, dtype=np.float64)
    r = np.where(np.isfinite(r), r, 0.0)
    return np.minimum(np.floor(r / SEGMENT_WIDTH).astype(np.int64), N_SEGMENTS - 1)


def _sincos_batch(red, sign, num_slope, num_icpt, steps):
    k = segment_index_batch(red)
    ang = np.where(np.isnan(red), 0.0, red)
    poly = num_slope[k] * ang + num_icpt[k]
    inner = (_X[k] * ang + _Y[k]) * ang + _Z[k]
    out = poly * _inv_sqrt_array(inner, steps) * sign
    return np.where(np.isnan(red), np.nan, out)


def proposed_sin_batch(xs, mode: SqrtMode = FISR) -> np.ndarray:
    red, sign = reduce_sin_batch(xs)
    return _sincos_batch(red, sign, _A, _B, mode.steps)


def proposed_cos_batch(xs, mode: SqrtMode = FISR) -> np.ndarray:
    red, sign = reduce_cos_batch(xs)
    return _sincos_batch(red, sign, _C, _D, mode.steps)


def proposed_tan_batch(xs, mode: SqrtMode = FISR) -> np.ndarray:
    red, sign = reduce_tan_batch(xs)
    nan = np.isnan(red)
    ang = np.where(nan, 0.0, red)
    k = segment_index_batch(ang)
    poly = _A[k] * ang + _B[k]
    den = _C[k] * ang + _D[k]
    with np.errstate(divide="ignore", invalid="ignore"):
        if mode.steps == 0:
            val = np.where(den > 0.0, poly / np.where(den > 0.0, den, 1.0), np.nan)
        else:
            temp = _fisr_array(den, mode.steps)
            val = poly * (temp * temp)
        out = val * sign
        out = np.where(np.abs(ang - HALF_PI) < TAN_GUARD, sign * np.inf, out)
    return np.where(nan, np.nan, out)
