import math
from typing import List, Optional, Sequence
from pydantic import BaseModel, field_validator, model_validator

REFERENCE_A4 = 440.0

PITCH_CLASSES = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1}


class PitchParseError(ValueError):
    """Malformed pitch name; ``position`` is the 0-based index of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def semitones_to_freqs(offsets: Sequence[float], root: float) -> List[float]:
    """
    12-TET frequencies root * 2^(offset/12) for semitone offsets from the root.

    Raises:
        ValueError: If the root is not positive or an offset is not finite.
    """
    if root <= 0:
        raise ValueError(f"Root frequency must be positive, got {root}.")
    freqs = []
    for offset in offsets:
        if not math.isfinite(offset):
            raise ValueError(f"Semitone offsets must be finite, got {offset}.")
        freqs.append(root * 2.0 ** (offset / 12.0))
    return freqs


def parse_pitch(name: str) -> float:
    """
    Converts a pitch name such as ``A4``, ``C#3``, ``Eb5`` or ``B-1`` to its 12-TET frequency
    with A4 = 440 Hz. Octaves run from -1 to 9.

    Raises:
        PitchParseError: With the position of the first character that breaks the grammar.
    """
    if not name:
        raise PitchParseError("Empty pitch name", 0)
    letter = name[0].upper()
    if letter not in PITCH_CLASSES:
        raise PitchParseError(f"Expected a note letter A-G, got {name[0]!r}", 0)
    pos = 1
    semitone = PITCH_CLASSES[letter]
    if pos < len(name) and name[pos] in ACCIDENTALS:
        semitone += ACCIDENTALS[name[pos]]
        pos += 1
    octave_text = name[pos:]
    if not octave_text:
        raise PitchParseError("Missing octave number", pos)
    digits_start = pos + (1 if octave_text.startswith("-") else 0)
    digits = name[digits_start:]
    if not digits:
        raise PitchParseError("Missing octave digits", digits_start)
    for offset, ch in enumerate(digits):
        if not ch.isdigit():
            raise PitchParseError(f"Unexpected character {ch!r}", digits_start + offset)
    octave = int(octave_text)
    if not -1 <= octave <= 9:
        raise PitchParseError(f"Octave {octave} is outside -1..9", pos)
    midi = (octave + 1) * 12 + semitone
    return REFERENCE_A4 * 2.0 ** ((midi - 69) / 12.0)


class PitchInput(BaseModel):
    """
    Real-world pitch input: exactly one of frequencies (Hz), semitone offsets from a root,
    or pitch names.
    """

    frequencies: Optional[List[float]] = None
    semitones: Optional[List[float]] = None
    names: Optional[List[str]] = None

    @field_validator("frequencies")
    def validate_frequencies(cls, v):
        if v is not None and any(not (math.isfinite(f) and f > 0) for f in v):
            raise ValueError(f"Frequencies must be finite and positive, got {v}.")
        return v

    @field_validator("semitones")
    def validate_semitones(cls, v):
        if v is not None and any(not math.isfinite(s) for s in v):
            raise ValueError(f"Semitone offsets must be finite, got {v}.")
        return v

    @model_validator(mode="after")
    def validate_single_form(self):
        """
        Validates that exactly one non-empty input form is supplied.
        """
        given = [
            form
            for form in (self.frequencies, self.semitones, self.names)
            if form is not None
        ]
        if len(given) != 1:
            raise ValueError(
                "Supply exactly one of frequencies, semitones or names."
            )
        if not given[0]:
            raise ValueError("Pitch input cannot be empty.")
        return self

    def to_frequencies(self, root: float = 261.63) -> List[float]:
        """Frequencies in Hz; ``root`` only matters for semitone input."""
        if self.frequencies is not None:
            return list(self.frequencies)
        if self.semitones is not None:
            return semitones_to_freqs(self.semitones, root)
        return [parse_pitch(name.strip()) for name in self.names]
