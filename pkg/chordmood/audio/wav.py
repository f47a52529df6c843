import os
import numpy as np
from scipy.io import wavfile

FULL_SCALE = 32767


def quantize(buffer: np.ndarray) -> np.ndarray:
    """
    Float samples in [-1, 1] to int16, rounding half away from zero.

    No quantized sample exceeds the buffer's own peak times FULL_SCALE, so a render
    normalized to ``peak`` stays within ``peak * FULL_SCALE`` after rounding.
    """
    scaled = np.asarray(buffer, dtype=np.float64) * FULL_SCALE
    if scaled.size == 0:
        return scaled.astype("<i2")
    limit = np.floor(min(np.max(np.abs(scaled)), FULL_SCALE))
    rounded = np.sign(scaled) * np.floor(np.abs(scaled) + 0.5)
    return np.clip(rounded, -limit, limit).astype("<i2")


def write_wav(buffer: np.ndarray, path: str, sample_rate: int = 44100) -> str:
    """
    Writes a mono float buffer as 16-bit PCM RIFF/WAVE.

    Args:
        buffer (np.ndarray): Samples in [-1, 1].
        path (str): Output file.
        sample_rate (int): Declared sample rate.

    Returns:
        str: The path written.

    Raises:
        OSError: If the file cannot be written; the message names the path.
    """
    samples = quantize(buffer)
    try:
        wavfile.write(path, sample_rate, samples)
    except OSError as e:
        raise OSError(f"Could not write WAV file {os.fspath(path)}: {e}") from e
    return path
