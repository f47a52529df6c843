import numpy as np


def probe_magnitude(buffer: np.ndarray, freq: float, sample_rate: int) -> float:
    """
    Single-bin DFT magnitude of ``buffer`` at ``freq``, scaled so a full-length sinusoid
    of amplitude A reads A.
    """
    n = len(buffer)
    if n == 0:
        return 0.0
    t = np.arange(n) / sample_rate
    basis = np.exp(-2j * np.pi * freq * t)
    return float(2.0 * np.abs(np.dot(buffer, basis)) / n)


def to_decibels(ratio: float) -> float:
    return float(20.0 * np.log10(ratio))
