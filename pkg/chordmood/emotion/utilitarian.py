"""
The generic emotion formula behind the chord model: the power of an emotion is the gain k
times the logarithm of how far a goal function moved, L = R1 / R0. The need factor that
scales power into experienced intensity has no computable form and is fixed to 1.

The chord formula is the special case where L is the geometric mean of the main
proportion's terms (or of their reciprocals for minor chords).
"""
import math
from typing import Sequence
from pydantic import BaseModel, field_validator


class GoalSample(BaseModel):
    """
    Two measurements of an integral resource and the gain applied to their ratio.

    Attributes:
        r0 (float): Prior value R0.
        r1 (float): Current value R1.
        k (float): Positive gain.
    """

    r0: float
    r1: float
    k: float = 1.0

    @field_validator("r0", "r1", "k")
    def validate_positive(cls, v):
        if not (math.isfinite(v) and v > 0):
            raise ValueError(f"Goal values and gain must be positive, got {v}.")
        return v


def power_from_ratio(ratio: float, k: float = 1.0) -> float:
    """
    k * log2(L): positive when the goal function grew (L > 1), negative when it fell.

    Raises:
        ValueError: If the ratio or the gain is not positive.
    """
    if ratio <= 0:
        raise ValueError(f"Goal ratio must be positive, got {ratio}.")
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}.")
    return k * math.log2(ratio)


def utilitarian_power(s: GoalSample) -> float:
    """Signed power k * log2(R1 / R0) of a goal change."""
    return power_from_ratio(s.r1 / s.r0, s.k)


def geometric_mean(terms: Sequence[float]) -> float:
    if not terms:
        raise ValueError("Geometric mean of an empty sequence is undefined.")
    return math.prod(terms) ** (1.0 / len(terms))
