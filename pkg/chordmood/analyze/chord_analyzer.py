from typing import Any, Dict, List, Optional
from pydantic import BaseModel, computed_field
from chordmood.classify import (
    AffectClassifier,
    ConsonanceReport,
    PowerReport,
    chord_consonant,
)
from chordmood.proportion import (
    Proportion,
    format_direct,
    format_inverse,
    inverse_numbers,
    parse_proportion_text,
    normalize_proportion,
    products,
)
from chordmood.rationalize import PitchInput, RationalizeConfig, rationalize
from chordmood.utils.logs import logger

JSON_DECIMALS = 6


class ChordAnalysis(BaseModel):
    """
    Everything the model says about one chord.

    Attributes:
        input (str): The chord as supplied.
        proportion (Proportion): Canonical ascending integer proportion.
        inverse_terms (List[int]): Inverse numbers aligned with the voices.
        p_dir (int): Product of the direct terms.
        p_inv (int): Product of the inverse numbers.
        power (PowerReport): Classification and emotional power.
        consonance (Optional[ConsonanceReport]): Pairwise consonance; absent for one voice.
    """

    input: str
    proportion: Proportion
    inverse_terms: List[int]
    p_dir: int
    p_inv: int
    power: PowerReport
    consonance: Optional[ConsonanceReport] = None

    @computed_field
    @property
    def direct_writing(self) -> str:
        return format_direct(self.proportion)

    @computed_field
    @property
    def inverse_writing(self) -> str:
        return format_inverse(self.proportion)

    def to_record(self) -> Dict[str, Any]:
        """
        Flat, JSON-ready view with powers rounded to six decimals and enums as strings.
        """
        power = self.power
        return {
            "input": self.input,
            "proportion": self.direct_writing,
            "inverse": self.inverse_writing,
            "inverse_terms": list(self.inverse_terms),
            "p_dir": self.p_dir,
            "p_inv": self.p_inv,
            "class": power.classification.value,
            "pwe_main": _round(power.pwe_main),
            "pwe_side": _round(power.pwe_side),
            "pwe_adjusted": _round(power.pwe_adjusted),
            "near_symmetric": power.near_symmetric,
            "valence_valid": power.valence_valid,
            "band": power.band.value,
            "consonant": None if self.consonance is None else self.consonance.consonant,
            "intervals": []
            if self.consonance is None
            else [
                {
                    "lower": pair.lower,
                    "upper": pair.upper,
                    "ratio": str(pair.quality.ratio),
                    "reduced": str(pair.quality.reduced),
                    "verdict": pair.quality.verdict.value,
                    "rank": pair.quality.rank,
                }
                for pair in self.consonance.pairs
            ],
        }


def _round(value: float) -> float:
    # + 0.0 folds -0.0 into 0.0
    return round(value, JSON_DECIMALS) + 0.0


class ChordAnalyzer(BaseModel):
    """
    Runs the classifier, consonance ranking and (for pitch input) the rationalizer on a chord.

    Attributes:
        classifier (AffectClassifier): Power settings.
        rationalize_config (RationalizeConfig): Search settings for pitch input.
        root (float): Root frequency for semitone input.
    """

    classifier: AffectClassifier = AffectClassifier()
    rationalize_config: RationalizeConfig = RationalizeConfig()
    root: float = 261.63

    def analyze(self, p: Proportion, label: Optional[str] = None) -> ChordAnalysis:
        """
        Analyzes a canonical proportion.

        Args:
            p (Proportion): The chord.
            label (Optional[str]): How the chord was written; defaults to its direct writing.

        Returns:
            ChordAnalysis: The full analysis.
        """
        prods = products(p)
        consonance = chord_consonant(p) if p.voices >= 2 else None
        return ChordAnalysis(
            input=label if label is not None else format_direct(p),
            proportion=p,
            inverse_terms=inverse_numbers(p),
            p_dir=prods.p_dir,
            p_inv=prods.p_inv,
            power=self.classifier.emotional_power(p),
            consonance=consonance,
        )

    def analyze_text(self, text: str) -> ChordAnalysis:
        """Analyzes proportion text such as ``4:5:6`` or ``/6:/5:/4``."""
        p = normalize_proportion(parse_proportion_text(text))
        return self.analyze(p, label=text.strip())

    def analyze_pitches(self, pitches: PitchInput) -> ChordAnalysis:
        """
        Rationalizes pitch input and analyzes the resulting proportion.

        Raises:
            NoProportionFound: If the pitches do not fit a small-integer proportion.
        """
        freqs = pitches.to_frequencies(self.root)
        p = rationalize(freqs, self.rationalize_config)
        logger.info(f"Pitches {freqs} resolved to {format_direct(p)}.")
        if pitches.names:
            label = ",".join(pitches.names)
        elif pitches.semitones is not None:
            label = ",".join(f"{s:g}" for s in pitches.semitones)
        else:
            label = ",".join(f"{f:g}" for f in freqs)
        return self.analyze(p, label=label)
