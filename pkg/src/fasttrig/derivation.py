"""Reconstruction of the segment tables from linear interpolation of sine.

Pipeline, all in degrees:

1. Interpolate ``sin`` linearly between 15 degree knots on [15, 75].
2. On each middle segment, ``tan x = sin x / sin(90 - x)`` with both factors
   replaced by their interpolants; the result is a ratio of linear functions.
3. The outer segments [0, 15] and [75, 90) come from the integer [30, 45]
   rational through ``tan(45 -+ x') = (1 -+ t) / (1 +- t)``.
4. Slopes are scaled by 180/pi to get the radian tables, and sine/cosine
   radicands follow from ``(ax + b)^2 + (cx + d)^2``.

The integer rationals of the middle segments are rounded versions of step 2
whose rounding rule is not recoverable, so they are checked by value rather
than re-derived coefficient by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .kernels import DEGREE_SEGMENTS, SegmentCoeffs

KNOT_DEG = 15
REL_EPS = 1e-12

# Constants exactly as printed in the published tables (two-decimal truncations).
# sin rows: (a, b, X, Y, Z); cos rows: (c, d, X, Y, Z); tan rows: (a, b, c, d).
PUBLISHED_SIN = (
    (630.25, 0.0, 400502.37, -72421.86, 399424.0),
    (572.95, 10.0, 380805.53, -289687.46, 431749.0),
    (343.77, 46.0, 200251.18, -278342.89, 294797.0),
    (572.95, 217.0, 883074.90, -1616428.53, 1614593.0),
    (229.18, 297.0, 380805.53, -906648.41, 916309.0),
    (57.29, 542.0, 400502.37, -1185793.45, 1273864.0),
)
PUBLISHED_COS = (
    (-57.29, 632.0, 400502.37, -72421.86, 399424.0),
    (-229.18, 657.0, 380805.53, -289687.46, 431749.0),
    (-286.47, 541.0, 200251.18, -278342.89, 294797.0),
    (-744.84, 1252.0, 883074.90, -1616428.53, 1614593.0),
    (-572.95, 910.0, 380805.53, -906648.41, 916309.0),
    (-630.25, 990.0, 400502.37, -1185793.45, 1273864.0),
)
PUBLISHED_TAN = (
    (630.25, 0.0, -57.29, 632.0),
    (572.95, 10.0, -229.18, 657.0),
    (343.77, 46.0, -286.47, 541.0),
    (572.95, 217.0, -744.84, 1252.0),
    (229.18, 297.0, -572.95, 910.0),
    (57.29, 542.0, -630.25, 990.0),
)
_FIELDS = {"sin": "a b X Y Z", "cos": "c d X Y Z", "tan": "a b c d"}
_PUBLISHED = {"sin": PUBLISHED_SIN, "cos": PUBLISHED_COS, "tan": PUBLISHED_TAN}


def _fmt_num(v) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        v = v.numerator
    if isinstance(v, int) or (isinstance(v, float) and v.is_integer()):
        return str(int(v))
    return f"{float(v):.6g}"


@dataclass(frozen=True)
class DegLinear:
    """``slope * x + intercept`` with ``x`` in degrees."""

    slope: float | Fraction
    intercept: float | Fraction

    def __call__(self, x):
        return float(self.slope) * x + float(self.intercept)

    def substitute(self, scale, shift) -> DegLinear:
        """Compose with ``x -> scale * x + shift``."""
        return DegLinear(self.slope * scale, self.slope * shift + self.intercept)

    def __str__(self) -> str:
        m, q = self.slope, self.intercept
        if m == 0:
            return _fmt_num(q)
        mono = "x" if abs(m) == 1 else f"{_fmt_num(abs(m))}x"
        if q == 0:
            return mono if m > 0 else f"-{mono}"
        if m > 0:
            return f"{mono} {'+' if q > 0 else '-'} {_fmt_num(abs(q))}"
        return f"{_fmt_num(q)} - {mono}"


@dataclass(frozen=True)
class DegRational:
    num: DegLinear
    den: DegLinear
    domain: tuple[float, float]

    def __call__(self, x):
        return self.num(x) / self.den(x)

    @property
    def coeffs(self) -> tuple:
        return (self.num.slope, self.num.intercept, self.den.slope, self.den.intercept)

    @classmethod
    def from_coeffs(cls, a, b, c, d, domain) -> DegRational:
        return cls(DegLinear(a, b), DegLinear(c, d), domain)

    def __str__(self) -> str:
        def wrap(lin):
            s = str(lin)
            return f"({s})" if (" " in s) else s

        return f"{wrap(self.num)}/{wrap(self.den)}"


def _sin_deg(theta: float) -> float:
    return math.sin(math.radians(theta))


def interp_sin_segment(k: int) -> DegLinear:
    """Chord of ``sin`` through the knots ``15k`` and ``15(k+1)`` degrees (k = 1..4)."""
    if not 1 <= k <= 4:
        raise ValueError(f"knot index must be in 1..4, got {k}")
    t1, t2 = KNOT_DEG * k, KNOT_DEG * (k + 1)
    s1, s2 = _sin_deg(t1), _sin_deg(t2)
    return DegLinear((s2 - s1) / KNOT_DEG, (t2 * s1 - t1 * s2) / KNOT_DEG)


def derive_tan_mid(k: int) -> DegRational:
    """``sin x / sin(90 - x)`` on [15k, 15(k+1)] degrees from the chords.

    Both chords carry a factor 1/15 which cancels; it is dropped from the
    returned coefficients.
    """
    num = interp_sin_segment(k)
    comp = interp_sin_segment(5 - k).substitute(-1.0, 90.0)
    lo, hi = KNOT_DEG * k, KNOT_DEG * (k + 1)
    return DegRational(
        DegLinear(num.slope * KNOT_DEG, num.intercept * KNOT_DEG),
        DegLinear(comp.slope * KNOT_DEG, comp.intercept * KNOT_DEG),
        (lo, hi),
    )


def integer_tan_mid(k: int) -> DegRational:
    a, b, c, d = DEGREE_SEGMENTS[k]
    return DegRational.from_coeffs(a, b, c, d, (KNOT_DEG * k, KNOT_DEG * (k + 1)))


def derive_tan_outer(side: str, base: DegRational | None = None) -> DegRational:
    """Outer segment from the [30, 45] rational via the 45 degree angle-sum identity.

    ``side="low"`` gives [0, 15] through ``tan(45 - x')``; ``side="high"``
    gives [75, 90) through ``tan(45 + x')``. With the default integer base the
    arithmetic is exact.
    """
    if base is None:
        a, b, c, d = (Fraction(v) for v in DEGREE_SEGMENTS[2])
    else:
        a, b, c, d = base.coeffs
    # t = (a x' + b)/(c x' + d):  1 - t ~ (c - a) x' + (d - b),  1 + t ~ (c + a) x' + (d + b)
    minus = DegLinear(c - a, d - b)
    plus = DegLinear(c + a, d + b)
    if side == "low":
        # x = 45 - x'
        num, den, domain = minus.substitute(-1, 45), plus.substitute(-1, 45), (0.0, 15.0)
    elif side == "high":
        # x = 45 + x'
        num, den, domain = plus.substitute(1, -45), minus.substitute(1, -45), (75.0, 90.0)
    else:
        raise ValueError(f"side must be 'low' or 'high', got {side!r}")
    return DegRational(num, den, domain)


def sincos_from_tan(a, b, c, d) -> tuple:
    """Radicand coefficients (X, Y, Z) shared by the sine and cosine forms."""
    return a * a + c * c, 2 * (a * b + c * d), b * b + d * d


def to_radian_coeffs(r: DegRational) -> SegmentCoeffs:
    a, b, c, d = (float(v) for v in r.coeffs)
    return SegmentCoeffs.from_degree(a, b, c, d)


def truncate2(v: float) -> float:
    """Truncate toward zero at two decimals, as the published tables do."""
    return math.trunc(round(v * 100.0, 6)) / 100.0


def derived_degree_segments() -> list[DegRational]:
    """All six integer degree-space tangent rationals, outer ones re-derived."""
    return [
        derive_tan_outer("low"),
        *(integer_tan_mid(k) for k in range(1, 5)),
        derive_tan_outer("high"),
    ]


def exact_degree_segments() -> list[DegRational]:
    """Real-valued counterparts built from the chords without any rounding."""
    mid2 = derive_tan_mid(2)
    return [
        derive_tan_outer("low", mid2),
        *(derive_tan_mid(k) for k in range(1, 5)),
        derive_tan_outer("high", mid2),
    ]


def relative_errors(approx: np.ndarray, exact: np.ndarray) -> np.ndarray:
    """|approx - exact| / |exact|, zero where |exact| <= 1e-12."""
    diff = np.abs(approx - exact)
    scale = np.abs(exact)
    big = scale > REL_EPS
    return np.where(big, diff / np.where(big, scale, 1.0), 0.0)


@dataclass
class Check:
    segment: int
    function: str
    coefficient: str
    published: float | None
    derived: float
    passed: bool


@dataclass
class VerificationReport:
    tolerance_rel: float
    checks: list[Check] = field(default_factory=list)
    segments: list[DegRational] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = [f"tolerance_rel = {self.tolerance_rel:g}"]
        for k, seg in enumerate(self.segments):
            lo, hi = seg.domain
            lines.append(f"segment {k} [{lo:g}, {hi:g}] deg: tan ~ {seg}")
        for c in self.checks:
            pub = "" if c.published is None else f" published={c.published:.2f}"
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{status} segment={c.segment} function={c.function} "
                f"coefficient={c.coefficient}{pub} derived={c.derived:.17g}"
            )
        lines.append("ALL PASS" if self.passed else f"{len(self.failures)} FAILED")
        return "\n".join(lines)


def verify_published_tables(tolerance_rel: float = 0.01, n_grid: int = 1000) -> VerificationReport:
    """Compare derived tables with the published constants.

    Two families of checks: every published constant must equal the
    two-decimal truncation of its full-precision derived value, and every
    integer tangent rational must track its unrounded counterpart within
    ``tolerance_rel`` over an ``n_grid`` point grid of its segment (the pole
    end of the last segment is excluded).
    """
    report = VerificationReport(tolerance_rel)
    integer = derived_degree_segments()
    exact = exact_degree_segments()
    report.segments = integer

    for k, (seg, ref) in enumerate(zip(integer, exact)):
        coeffs = to_radian_coeffs(seg)
        for fn, names in _FIELDS.items():
            for name, pub in zip(names.split(), _PUBLISHED[fn][k]):
                value = getattr(coeffs, name)
                report.checks.append(Check(k, fn, name, pub, value, truncate2(value) == pub))

        lo, hi = seg.domain
        x = np.linspace(lo, hi, n_grid, endpoint=(k != len(integer) - 1))
        err = float(np.max(relative_errors(seg(x), ref(x))))
        report.checks.append(Check(k, "tan", "value_rel_err", None, err, err <= tolerance_rel))

    # the radicand constant must be the sum of squared intercepts
    for k, seg in enumerate(integer):
        _, b, _, d = seg.coeffs
        z = float(b * b + d * d)
        report.checks.append(Check(k, "sin", "Z=b^2+d^2", PUBLISHED_SIN[k][4], z, z == PUBLISHED_SIN[k][4]))
    return report
