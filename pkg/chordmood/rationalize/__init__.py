from .pitch import PitchInput, PitchParseError, parse_pitch, semitones_to_freqs
from .rationalizer import (
    NoProportionFound,
    RationalizeConfig,
    candidate_key,
    convergents,
    largest_prime_factor,
    rationalize,
    within_tolerance,
)
