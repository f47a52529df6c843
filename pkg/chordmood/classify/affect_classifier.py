import math
from enum import Enum
from pydantic import BaseModel, field_validator, model_validator
from chordmood.proportion import Proportion, products


class Classification(str, Enum):
    MAJOR = "Major"
    MINOR = "Minor"
    SYMMETRIC = "Symmetric"


class Band(str, Enum):
    NOMINAL = "Nominal"
    SATURATING = "Saturating"
    OUT_OF_RANGE = "OutOfRange"


class PowerReport(BaseModel):
    """
    Signed emotional power of one chord.

    Attributes:
        classification (Classification): Major, Minor or Symmetric.
        pwe_main (float): Power of the main (simpler) proportion; positive for major.
        pwe_side (float): Power of the side proportion, opposite in sign.
        pwe_adjusted (float): Half-sum of main and side when near-symmetric, else pwe_main.
        near_symmetric (bool): Amplitudes of main and side differ by less than the threshold.
        valence_valid (bool): At least three voices.
        band (Band): Saturation band of |pwe_main|.
    """

    classification: Classification
    pwe_main: float
    pwe_side: float
    pwe_adjusted: float
    near_symmetric: bool
    valence_valid: bool
    band: Band

    class Config:
        frozen = True


class AffectClassifier(BaseModel):
    """
    Classifies proportions as major, minor or symmetric and computes their emotional power,
    Pwe = k * (1/M) * log(n1 * ... * nM) over the main proportion's terms.

    Attributes:
        near_sym_threshold (float): Main/side amplitude gap below which the half-sum is reported.
        k (float): Positive gain.
        log_base (float): Logarithm base.
        saturation_onset (float): Amplitude where perception starts to saturate.
        validity_ceiling (float): Amplitude above which the formula leaves its valid range.
    """

    near_sym_threshold: float = 0.50
    k: float = 1.0
    log_base: float = 2.0
    saturation_onset: float = 2.4
    validity_ceiling: float = 3.0

    @field_validator("near_sym_threshold")
    def validate_threshold(cls, v):
        if v < 0:
            raise ValueError(f"Near-symmetry threshold cannot be negative, got {v}.")
        return v

    @field_validator("k")
    def validate_k(cls, v):
        if v <= 0:
            raise ValueError(f"k must be positive, got {v}.")
        return v

    @field_validator("log_base")
    def validate_log_base(cls, v):
        if v <= 0 or v == 1:
            raise ValueError(f"Logarithm base must be positive and not 1, got {v}.")
        return v

    @model_validator(mode="after")
    def validate_bands(self):
        """
        Validates that the saturation onset does not exceed the validity ceiling.
        """
        if not 0 <= self.saturation_onset <= self.validity_ceiling:
            raise ValueError(
                f"Band boundaries must satisfy 0 <= onset ({self.saturation_onset}) <= ceiling ({self.validity_ceiling})."
            )
        return self

    def classify(self, p: Proportion) -> Classification:
        """
        Groups a proportion by comparing the products of its direct and inverse writings.

        Returns:
            Classification: Major if the direct writing is simpler, Minor if the inverse is,
                            Symmetric if both products are equal.
        """
        prods = products(p)
        if prods.p_dir < prods.p_inv:
            return Classification.MAJOR
        if prods.p_dir > prods.p_inv:
            return Classification.MINOR
        return Classification.SYMMETRIC

    def amplitude(self, product: int, voices: int) -> float:
        """Unsigned power k * (1/M) * log(product)."""
        if self.log_base == 2:
            return self.k * math.log2(product) / voices
        return self.k * math.log(product, self.log_base) / voices

    def emotional_power(self, p: Proportion) -> PowerReport:
        """
        Computes main, side and adjusted power for a proportion.

        Args:
            p (Proportion): The chord.

        Returns:
            PowerReport: Signed powers, near-symmetry flag, validity flag and band.
        """
        prods = products(p)
        classification = self.classify(p)
        direct = self.amplitude(prods.p_dir, p.voices)
        inverse = self.amplitude(prods.p_inv, p.voices)

        if classification is Classification.MINOR:
            pwe_main, pwe_side = -inverse, direct
        else:
            pwe_main, pwe_side = direct, -inverse
        if classification is Classification.SYMMETRIC:
            pwe_side = -pwe_main

        near_symmetric = classification is Classification.SYMMETRIC or (
            abs(pwe_side) - abs(pwe_main) < self.near_sym_threshold
        )
        if classification is Classification.SYMMETRIC:
            pwe_adjusted = 0.0
        elif near_symmetric:
            pwe_adjusted = (pwe_main + pwe_side) / 2
        else:
            pwe_adjusted = pwe_main

        return PowerReport(
            classification=classification,
            pwe_main=pwe_main,
            pwe_side=pwe_side,
            pwe_adjusted=pwe_adjusted,
            near_symmetric=near_symmetric,
            valence_valid=p.voices >= 3,
            band=self.saturation_band(abs(pwe_main)),
        )

    def saturation_band(self, pwe_amplitude: float) -> Band:
        """
        Places an unsigned power amplitude in its saturation band.

        Raises:
            ValueError: If the amplitude is negative.
        """
        if pwe_amplitude < 0:
            raise ValueError(f"Power amplitude cannot be negative, got {pwe_amplitude}.")
        if pwe_amplitude < self.saturation_onset:
            return Band.NOMINAL
        if pwe_amplitude <= self.validity_ceiling:
            return Band.SATURATING
        return Band.OUT_OF_RANGE


_default_classifier = AffectClassifier()


def classify(p: Proportion) -> Classification:
    return _default_classifier.classify(p)


def emotional_power(p: Proportion, near_sym_threshold: float = 0.50) -> PowerReport:
    if near_sym_threshold == _default_classifier.near_sym_threshold:
        return _default_classifier.emotional_power(p)
    return AffectClassifier(near_sym_threshold=near_sym_threshold).emotional_power(p)


def saturation_band(pwe_amplitude: float) -> Band:
    return _default_classifier.saturation_band(pwe_amplitude)
