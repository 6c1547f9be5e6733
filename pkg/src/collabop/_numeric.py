"""Mean helpers shared by the scorer and the aggregator."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def weighted_mean(values: Sequence[float], weights: Sequence[float] | None = None,
                  float32: bool = False) -> float:
    """Weighted arithmetic mean.

    In double mode the sums are exact rationals and the quotient is rounded
    once, so the result is order-independent and never leaves
    ``[min(values), max(values)]``. In ``float32`` mode every addition,
    multiplication and the final division round to single precision, in
    input order.
    """
    if not values:
        raise ValueError("mean of empty sequence")
    if weights is not None and len(weights) != len(values):
        raise ValueError("values and weights differ in length")
    if float32:
        f32 = np.float32
        ws = weights if weights is not None else [1.0] * len(values)
        num = den = f32(0.0)
        for v, w in zip(values, ws):
            num = f32(num + f32(w) * f32(v))
            den = f32(den + f32(w))
        return float(f32(num / den))
    if weights is None:
        total = sum(map(Fraction, values), Fraction(0))
        return float(total / len(values))
    num = sum((Fraction(w) * Fraction(v) for v, w in zip(values, weights)), Fraction(0))
    den = sum(map(Fraction, weights), Fraction(0))
    return float(num / den)


def to_float32(x: float) -> float:
    return float(np.float32(x))
