"""Compiled one-argument kernels for every (function, method, sqrt mode) combination."""

from __future__ import annotations

import math
from functools import lru_cache

from numba import njit

from . import kernels, taylor
from .kernels import SqrtMode

FUNCTIONS = ("sin", "cos", "tan")
METHODS = ("proposed", "taylor5", "taylor7", "taylor9", "reference")


@njit(cache=True)
def reference_sin(x):
    return math.sin(x)


@njit(cache=True)
def reference_cos(x):
    return math.cos(x)


@njit(cache=True)
def reference_tan(x):
    return math.tan(x)


_REFERENCE = {"sin": reference_sin, "cos": reference_cos, "tan": reference_tan}
_PROPOSED = {"sin": kernels._sin_core, "cos": kernels._cos_core, "tan": kernels._tan_core}
_TAYLOR = {"sin": taylor._taylor_sin_core, "cos": taylor._taylor_cos_core, "tan": taylor._taylor_tan_core}


def _bind_steps(core, steps):
    @njit
    def f(x):
        return core(x, steps)

    return f


def _bind_coeffs(core, coeffs):
    @njit
    def f(x):
        return core(x, coeffs)

    return f


@lru_cache(maxsize=None)
def _kernel(function: str, method: str, steps: int):
    if function not in FUNCTIONS:
        raise ValueError(f"unknown function {function!r}")
    if method == "reference":
        return _REFERENCE[function]
    if method == "proposed":
        return _bind_steps(_PROPOSED[function], steps)
    if method.startswith("taylor") and method in METHODS:
        n_terms = int(method[len("taylor"):])
        return _bind_coeffs(_TAYLOR[function], taylor.coefficients(function, n_terms))
    raise ValueError(f"unknown method {method!r}")


def kernel(function: str, method: str, mode: SqrtMode = kernels.FISR):
    """Compiled scalar ``f(x)``; ``mode`` only matters for the proposed method."""
    steps = mode.steps if method == "proposed" else 0
    return _kernel(function, method, steps)
