import math
from fractions import Fraction
from typing import List, Tuple
import numpy as np
from pydantic import BaseModel, field_validator, model_validator
from chordmood.proportion import Proportion
from chordmood.utils.logs import logger


class RenderSpec(BaseModel):
    """
    An audio synthesis request.

    Attributes:
        freqs (List[float]): Voice frequencies in Hz.
        duration (float): Length in seconds.
        sample_rate (int): Samples per second.
        peak (float): Peak level as a fraction of full scale, in (0, 1].
        harmonics (int): Partials per voice; 1 is a pure tone, partial h has amplitude 1/h.
        fade_ms (float): Linear fade-in and fade-out length in milliseconds.
    """

    freqs: List[float]
    duration: float = 2.0
    sample_rate: int = 44100
    peak: float = 0.5
    harmonics: int = 1
    fade_ms: float = 10.0

    @field_validator("freqs")
    def validate_freqs(cls, v):
        if not v:
            raise ValueError("A chord needs at least one voice.")
        if any(not (math.isfinite(f) and f > 0) for f in v):
            raise ValueError(f"Frequencies must be finite and positive, got {v}.")
        return v

    @field_validator("duration", "sample_rate")
    def validate_positive(cls, v):
        if v <= 0:
            raise ValueError(f"Value must be positive, got {v}.")
        return v

    @field_validator("peak")
    def validate_peak(cls, v):
        if not 0 < v <= 1:
            raise ValueError(f"Peak must lie in (0, 1], got {v}.")
        return v

    @field_validator("harmonics")
    def validate_harmonics(cls, v):
        if v < 1:
            raise ValueError(f"Harmonics must be at least 1, got {v}.")
        return v

    @field_validator("fade_ms")
    def validate_fade(cls, v):
        if v < 0:
            raise ValueError(f"Fade length cannot be negative, got {v}.")
        return v

    @model_validator(mode="after")
    def validate_nyquist(self):
        """
        Validates that the highest partial of every voice stays below Nyquist.
        """
        top = self.harmonics * max(self.freqs)
        if top >= self.sample_rate / 2:
            raise ValueError(
                f"Partial at {top:g} Hz is not below Nyquist ({self.sample_rate / 2:g} Hz)."
            )
        return self

    @property
    def sample_count(self) -> int:
        return int(round(self.duration * self.sample_rate))


def _fade_envelope(n: int, fade: int) -> np.ndarray:
    envelope = np.ones(n)
    if fade > 0:
        ramp = np.arange(fade) / fade
        envelope[:fade] = ramp
        envelope[n - fade :] = ramp[::-1]
    return envelope


def render_chord(spec: RenderSpec) -> np.ndarray:
    """
    Renders a chord as float samples in [-peak, peak].

    Every voice gets the same amplitude, partials start at zero phase and the sum is
    normalized so the largest absolute sample equals ``spec.peak``. Output is deterministic.

    Args:
        spec (RenderSpec): What to render.

    Returns:
        np.ndarray: Mono float64 buffer of ``spec.sample_count`` samples.
    """
    n = spec.sample_count
    t = np.arange(n) / spec.sample_rate
    signal = np.zeros(n)
    for freq in spec.freqs:
        for h in range(1, spec.harmonics + 1):
            signal += np.sin(2 * np.pi * h * freq * t) / h

    fade = int(round(spec.fade_ms * spec.sample_rate / 1000))
    if fade > n // 2:
        logger.warning(f"Fade of {fade} samples clamped to {n // 2} for a {n}-sample render.")
        fade = n // 2
    signal *= _fade_envelope(n, fade)

    top = np.max(np.abs(signal)) if n else 0.0
    if top == 0:
        return signal
    return signal * (spec.peak / top)


def matched_pair(
    a: Proportion, b: Proportion, mean: float
) -> Tuple[List[float], List[float]]:
    """
    Scales two proportions to frequencies whose arithmetic means both equal ``mean``.

    3:4:5 and 4:5:6 at 400 Hz give (300, 400, 500) and (320, 400, 480).
    """
    if mean <= 0:
        raise ValueError(f"Mean frequency must be positive, got {mean}.")
    target = Fraction(mean)

    def scale(p: Proportion) -> List[float]:
        factor = target * len(p.terms) / sum(p.terms)
        return [float(t * factor) for t in p.terms]

    return scale(a), scale(b)
