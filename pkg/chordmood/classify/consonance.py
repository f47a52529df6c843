from enum import Enum
from fractions import Fraction
from typing import List, Optional
from pydantic import BaseModel, computed_field
from chordmood.proportion import Proportion, pairwise_ratios

# Most consonant first; rank is the list index.
CONSONANCE_ORDER: List[Fraction] = [
    Fraction(1, 1),
    Fraction(2, 1),
    Fraction(3, 2),
    Fraction(4, 3),
    Fraction(5, 4),
    Fraction(8, 5),
    Fraction(6, 5),
    Fraction(5, 3),
]

LISTED_DISSONANCES: List[Fraction] = [
    Fraction(9, 5),
    Fraction(9, 8),
    Fraction(7, 5),
    Fraction(15, 8),
    Fraction(16, 15),
]


class Verdict(str, Enum):
    CONSONANT = "Consonant"
    DISSONANT_LISTED = "DissonantListed"
    DISSONANT_UNLISTED = "DissonantUnlisted"


class IntervalQuality(BaseModel):
    """
    Consonance verdict for one upward interval.

    Attributes:
        ratio (Fraction): The interval as given.
        reduced (Fraction): The interval octave-reduced into [1, 2].
        verdict (Verdict): Consonant, listed dissonance or unlisted dissonance.
        rank (Optional[int]): Position in the consonance list for consonant intervals.
    """

    ratio: Fraction
    reduced: Fraction
    verdict: Verdict
    rank: Optional[int] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @computed_field
    @property
    def consonant(self) -> bool:
        return self.verdict is Verdict.CONSONANT


class PairQuality(BaseModel):
    lower: int
    upper: int
    quality: IntervalQuality


class ConsonanceReport(BaseModel):
    """
    Consonance of a whole chord: consonant iff every pairwise interval is.
    """

    consonant: bool
    pairs: List[PairQuality]


def octave_reduce(r: Fraction) -> Fraction:
    """Divides by 2 until the ratio lies in [1, 2]; 2/1 itself is kept."""
    while r > 2:
        r /= 2
    return r


def interval_quality(r: Fraction) -> IntervalQuality:
    """
    Ranks an upward interval on the consonance list after octave reduction.

    Args:
        r (Fraction): Interval ratio, at least 1.

    Returns:
        IntervalQuality: Consonant with its rank, a listed dissonance, or an unlisted one.

    Raises:
        ValueError: If the ratio is below 1.
    """
    r = Fraction(r)
    if r < 1:
        raise ValueError(f"Interval must be oriented upward (ratio >= 1), got {r}.")
    reduced = octave_reduce(r)
    if reduced in CONSONANCE_ORDER:
        return IntervalQuality(
            ratio=r,
            reduced=reduced,
            verdict=Verdict.CONSONANT,
            rank=CONSONANCE_ORDER.index(reduced),
        )
    if reduced in LISTED_DISSONANCES:
        return IntervalQuality(ratio=r, reduced=reduced, verdict=Verdict.DISSONANT_LISTED)
    return IntervalQuality(ratio=r, reduced=reduced, verdict=Verdict.DISSONANT_UNLISTED)


def chord_consonant(p: Proportion) -> ConsonanceReport:
    """
    Checks every pairwise interval of a chord.

    Raises:
        ValueError: If the chord has fewer than two voices.
    """
    if p.voices < 2:
        raise ValueError(f"Consonance needs at least two voices, got {p.voices}.")
    pairs = [
        PairQuality(lower=i, upper=j, quality=interval_quality(ratio))
        for i, j, ratio in pairwise_ratios(p)
    ]
    return ConsonanceReport(
        consonant=all(pair.quality.consonant for pair in pairs), pairs=pairs
    )
