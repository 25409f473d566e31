"""Accuracy and timing benchmark of an approximation against a reference.

Protocol: draw angles uniformly in [-1e6, 1e6) from a seeded SplitMix64
stream, evaluate both functions once per angle for the error columns, then
time each function over ``iterations`` calls at that angle. Timings are taken
sequentially on one thread.

Functions compiled with numba are timed inside a compiled loop; anything else
falls back to a plain Python loop. Either way every result is folded into a
checksum that is returned after the clock stops, so the calls cannot be
dropped as dead code.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

import numpy as np
from numba import njit
from numba.core.registry import CPUDispatcher

DEFAULT_SEED = 2024873
DEFAULT_ANGLES = 1000
DEFAULT_ITERATIONS = 100_000
ANGLE_LIMIT = 1e6
REL_EPS = 1e-12

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


# -- RNG --------------------------------------------------------------------


def rng_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(new_state, output)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return state, z ^ (z >> 31)


def splitmix64(seed: int, n: int) -> np.ndarray:
    """First ``n`` SplitMix64 outputs for ``seed``, computed lane-parallel.

    The state after ``i + 1`` steps is ``seed + (i + 1) * gamma`` mod 2**64,
    so every output can be mixed independently.
    """
    steps = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + steps * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def gen_angles(seed: int = DEFAULT_SEED, n: int = DEFAULT_ANGLES) -> np.ndarray:
    u = (splitmix64(seed, n) >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return -ANGLE_LIMIT + 2.0 * ANGLE_LIMIT * u


# -- timing -----------------------------------------------------------------


@njit
def _compiled_loop(f, buf, slot, iterations):
    # buf[slot] is written every iteration with a runtime slot index, so the
    # compiler cannot prove buf[0] invariant and must re-evaluate f each time
    acc = 0.0
    for _ in range(iterations):
        r = f(buf[0])
        buf[slot] = r
        acc += r
    return acc


def timed_loop(f: Callable[[float], float], angle: float, iterations: int) -> tuple[int, float]:
    """Time ``iterations`` calls of ``f(angle)``; returns ``(nanoseconds, checksum)``."""
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    angle = float(angle)
    if isinstance(f, CPUDispatcher):
        buf = np.array([angle, 0.0])
        _compiled_loop(f, buf, 1, 1)  # compile outside the timed region
        buf[0] = angle
        t0 = time.perf_counter_ns()
        acc = _compiled_loop(f, buf, 1, iterations)
        t1 = time.perf_counter_ns()
        return t1 - t0, float(acc)
    acc = 0.0
    t0 = time.perf_counter_ns()
    for _ in range(iterations):
        acc += f(angle)
    t1 = time.perf_counter_ns()
    return t1 - t0, acc


def measure(f: Callable[[float], float], angle: float, iterations: int) -> int:
    return timed_loop(f, angle, iterations)[0]


# -- records and statistics -------------------------------------------------


@dataclass(frozen=True)
class BenchmarkRecord:
    angle: float
    ref_val: float
    approx_val: float
    abs_err: float
    rel_err: float
    ref_ns: int
    approx_ns: int

    @classmethod
    def build(cls, angle, ref_val, approx_val, ref_ns=0, approx_ns=0) -> BenchmarkRecord:
        abs_err = abs(approx_val - ref_val)
        rel_err = abs_err / abs(ref_val) if abs(ref_val) > REL_EPS else 0.0
        return cls(float(angle), float(ref_val), float(approx_val), abs_err, rel_err, int(ref_ns), int(approx_ns))


@dataclass(frozen=True)
class BenchmarkSummary:
    n_angles: int
    mean_speedup: float
    wins: int
    abs_max_err: float
    avg_abs_err: float
    abs_err_std: float
    rel_max_err: float
    avg_rel_err: float
    rel_err_std: float
    total_ref_ns: int
    total_approx_ns: int
    omitted_zero_time: int

    def to_dict(self) -> dict:
        return asdict(self)


def speedup_ratios(records: Sequence[BenchmarkRecord]) -> list[float]:
    """Per-angle ``ref_ns / approx_ns``, skipping angles timed at zero."""
    return [r.ref_ns / r.approx_ns for r in records if r.approx_ns > 0]


def summarize(records: Sequence[BenchmarkRecord]) -> BenchmarkSummary:
    if not records:
        raise ValueError("cannot summarize an empty benchmark")
    abs_err = np.array([r.abs_err for r in records])
    rel_err = np.array([r.rel_err for r in records])
    ratios = speedup_ratios(records)
    with np.errstate(invalid="ignore"):
        return BenchmarkSummary(
            n_angles=len(records),
            mean_speedup=float(np.mean(ratios)) if ratios else math.nan,
            wins=sum(r.approx_ns < r.ref_ns for r in records),
            abs_max_err=float(abs_err.max()),
            avg_abs_err=float(abs_err.mean()),
            abs_err_std=float(abs_err.std()),
            rel_max_err=float(rel_err.max()),
            avg_rel_err=float(rel_err.mean()),
            rel_err_std=float(rel_err.std()),
            total_ref_ns=sum(r.ref_ns for r in records),
            total_approx_ns=sum(r.approx_ns for r in records),
            omitted_zero_time=sum(r.approx_ns == 0 for r in records),
        )


def run_benchmark(
    ref_f: Callable[[float], float],
    approx_f: Callable[[float], float],
    n_angles: int = DEFAULT_ANGLES,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = DEFAULT_SEED,
) -> tuple[list[BenchmarkRecord], BenchmarkSummary]:
    if n_angles < 1:
        raise ValueError("benchmark needs at least one angle")
    records = []
    for angle in gen_angles(seed, n_angles):
        angle = float(angle)
        ref_val = float(ref_f(angle))
        approx_val = float(approx_f(angle))
        ref_ns = measure(ref_f, angle, iterations)
        approx_ns = measure(approx_f, angle, iterations)
        records.append(BenchmarkRecord.build(angle, ref_val, approx_val, ref_ns, approx_ns))
    return records, summarize(records)


def histogram(values: Sequence[float], n_bins: int) -> list[tuple[float, float, int]]:
    """Uniform bins over [min, max] of the finite values; the last bin is closed.

    Non-finite values (e.g. an infinite relative error) are not binned.
    """
    v = np.asarray(values, dtype=np.float64)
    v = v[np.isfinite(v)]
    if v.size == 0:
        return []
    if n_bins < 1:
        raise ValueError(f"n_bins must be >= 1, got {n_bins}")
    lo, hi = float(v.min()), float(v.max())
    if lo == hi:
        return [(lo, hi, int(v.size))]
    counts, edges = np.histogram(v, bins=n_bins, range=(lo, hi))
    return [(float(edges[i]), float(edges[i + 1]), int(c)) for i, c in enumerate(counts)]
