"""Fast piecewise rational sin/cos/tan with a reproducible benchmark harness."""

from .kernels import (
    EXACT,
    FISR,
    SegmentCoeffs,
    SegmentTable,
    SqrtMode,
    TABLE,
    fast_inverse_sqrt,
    proposed_cos,
    proposed_cos_batch,
    proposed_sin,
    proposed_sin_batch,
    proposed_tan,
    proposed_tan_batch,
)
from .reduction import ReducedAngle, reduce_cos, reduce_sin, reduce_tan
from .taylor import taylor_cos, taylor_sin, taylor_tan

__all__ = [
    "EXACT",
    "FISR",
    "ReducedAngle",
    "SegmentCoeffs",
    "SegmentTable",
    "SqrtMode",
    "TABLE",
    "fast_inverse_sqrt",
    "proposed_cos",
    "proposed_cos_batch",
    "proposed_sin",
    "proposed_sin_batch",
    "proposed_tan",
    "proposed_tan_batch",
    "reduce_cos",
    "reduce_sin",
    "reduce_tan",
    "taylor_cos",
    "taylor_sin",
    "taylor_tan",
]

__version__ = "0.1.0"
