from .affect_classifier import (
    AffectClassifier,
    Band,
    Classification,
    PowerReport,
    classify,
    emotional_power,
    saturation_band,
)
from .consonance import (
    CONSONANCE_ORDER,
    LISTED_DISSONANCES,
    ConsonanceReport,
    IntervalQuality,
    PairQuality,
    Verdict,
    chord_consonant,
    interval_quality,
    octave_reduce,
)
