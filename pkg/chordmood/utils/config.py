import os
from typing import Any, Dict, Optional
from dotenv import dotenv_values, load_dotenv
from pydantic import BaseModel, field_validator
from chordmood.utils.logs import logger

ENV_PREFIX = "CHORDMOOD_"


class Settings(BaseModel):
    """
    Defaults shared by the library entry points and the command line.

    Attributes:
        tolerance (float): Relative tolerance for rationalizing pitch input.
        grid_tolerance (float): Relative tolerance used by the triad grid sweep.
        grid_prime_limit (Optional[int]): Largest prime allowed in grid proportions.
        near_sym_threshold (float): Amplitude gap below which a chord counts as near-symmetric.
        sample_rate (int): Audio sample rate in Hz.
        mean_frequency (float): Arithmetic-mean frequency for chords rendered from proportions.
        root (float): Root frequency in Hz for semitone input and the grid.
        harmonics (int): Partials per voice for rendering.
        duration (float): Render length in seconds.
        peak (float): Peak level as a fraction of full scale.
    """

    tolerance: float = 0.01
    grid_tolerance: float = 0.02
    grid_prime_limit: Optional[int] = 7
    near_sym_threshold: float = 0.50
    sample_rate: int = 44100
    mean_frequency: float = 400.0
    root: float = 261.63
    harmonics: int = 1
    duration: float = 2.0
    peak: float = 0.5

    @field_validator("tolerance", "grid_tolerance")
    def validate_tolerance(cls, v):
        if not 0 < v < 0.06:
            raise ValueError(f"Tolerance must lie in (0, 0.06), got {v}.")
        return v

    @field_validator("sample_rate", "harmonics")
    def validate_positive_int(cls, v):
        if v < 1:
            raise ValueError(f"Value must be a positive integer, got {v}.")
        return v

    @field_validator("mean_frequency", "root", "duration")
    def validate_positive(cls, v):
        if v <= 0:
            raise ValueError(f"Value must be positive, got {v}.")
        return v


def _read_file(path: str) -> Dict[str, Any]:
    if not os.path.isfile(path):
        raise ValueError(f"Config file not found: {path}")
    values = dotenv_values(path)
    return {key.lower(): value for key, value in values.items() if value is not None}


def _read_environment() -> Dict[str, Any]:
    load_dotenv()
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return values


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Builds Settings from an optional key-value file and CHORDMOOD_* environment variables.

    Environment variables win over the file; both win over the built-in defaults.
    Unknown keys in the file are ignored with a warning.

    Args:
        path (Optional[str]): Path to a key-value file (``KEY=value`` lines).

    Returns:
        Settings: The validated settings.

    Raises:
        ValueError: If the file is missing or a value fails validation.
    """
    values: Dict[str, Any] = {}
    if path:
        for key, value in _read_file(path).items():
            if key not in Settings.model_fields:
                logger.warning(f"Ignoring unknown config key '{key}' in {path}.")
                continue
            values[key] = value
    values.update(_read_environment())
    if values.get("grid_prime_limit") in ("", "none", "None"):
        values["grid_prime_limit"] = None
    return Settings(**values)
