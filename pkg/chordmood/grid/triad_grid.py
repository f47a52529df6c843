from typing import List, Optional, Tuple
from pydantic import BaseModel, computed_field, model_validator
from chordmood.classify import AffectClassifier, PowerReport, chord_consonant
from chordmood.proportion import Proportion
from chordmood.rationalize import (
    NoProportionFound,
    RationalizeConfig,
    rationalize,
    semitones_to_freqs,
)
from chordmood.utils.apply import apply_in_order
from chordmood.utils.logs import logger

DEFAULT_ROOT = 261.63
# 12-TET stacked major thirds sit ~1.6% off 16:20:25, so the sweep needs more than 1%.
GRID_TOLERANCE = 0.02
# Largest prime in the consonance and dissonance lists (7/5).
GRID_PRIME_LIMIT = 7


def default_grid_config() -> RationalizeConfig:
    return RationalizeConfig(tolerance=GRID_TOLERANCE, prime_limit=GRID_PRIME_LIMIT)


class GridCell(BaseModel):
    """
    One triad of the sweep: root plus voices i and j semitones above it (i < j).

    Attributes:
        lower_semitones (int): Middle voice offset i.
        upper_semitones (int): Top voice offset j.
        proportion (Optional[Proportion]): Resolved proportion; None when unclassified.
        analysis (Optional[PowerReport]): Power report for resolved cells.
        consonant (Optional[bool]): Consonance verdict for resolved cells.
    """

    lower_semitones: int
    upper_semitones: int
    proportion: Optional[Proportion] = None
    analysis: Optional[PowerReport] = None
    consonant: Optional[bool] = None

    @model_validator(mode="after")
    def validate_triangle(self):
        """
        Validates that the cell lies above the diagonal, 1 <= i < j.
        """
        if not 1 <= self.lower_semitones < self.upper_semitones:
            raise ValueError(
                f"Grid cells need 1 <= i < j, got ({self.lower_semitones}, {self.upper_semitones})."
            )
        return self

    @computed_field
    @property
    def classified(self) -> bool:
        return self.proportion is not None

    @property
    def mirror_position(self) -> Tuple[int, int]:
        """The cell holding the inverted interval stack."""
        return (self.upper_semitones - self.lower_semitones, self.upper_semitones)


class TriadGrid(BaseModel):
    """
    The analyzed triangle of triads, cells ordered by (i, j).
    """

    j_max: int
    root: float
    tolerance: float
    cells: List[GridCell]

    def cell(self, i: int, j: int) -> GridCell:
        for candidate in self.cells:
            if candidate.lower_semitones == i and candidate.upper_semitones == j:
                return candidate
        raise KeyError(f"No grid cell ({i}, {j}) for j_max={self.j_max}.")


def analyze_cell(
    i: int,
    j: int,
    root: float,
    cfg: RationalizeConfig,
    classifier: AffectClassifier,
) -> GridCell:
    """
    Resolves and analyzes the triad (0, i, j) over ``root``; unresolvable cells come back
    unclassified.
    """
    freqs = semitones_to_freqs([0, i, j], root)
    try:
        p = rationalize(freqs, cfg)
    except NoProportionFound as e:
        logger.warning(f"Cell ({i}, {j}) left unclassified: {e}")
        return GridCell(lower_semitones=i, upper_semitones=j)
    return GridCell(
        lower_semitones=i,
        upper_semitones=j,
        proportion=p,
        analysis=classifier.emotional_power(p),
        consonant=chord_consonant(p).consonant,
    )


def generate_grid(
    j_max: int = 12,
    root: float = DEFAULT_ROOT,
    cfg: Optional[RationalizeConfig] = None,
    classifier: Optional[AffectClassifier] = None,
    show_progress: bool = False,
) -> TriadGrid:
    """
    Sweeps every triad (0, i, j) with 1 <= i < j <= j_max in 12-TET and analyzes it.

    Args:
        j_max (int): Largest top-voice offset, 2..24.
        root (float): Root frequency; only audio depends on it.
        cfg (Optional[RationalizeConfig]): Search settings; defaults to 2% with prime limit 7.
        classifier (Optional[AffectClassifier]): Power settings.
        show_progress (bool): Show a progress bar.

    Returns:
        TriadGrid: Cells ordered by (i, j).

    Raises:
        ValueError: If j_max or root is out of range.
    """
    if not 2 <= j_max <= 24:
        raise ValueError(f"j_max must lie in 2..24, got {j_max}.")
    if root <= 0:
        raise ValueError(f"Root frequency must be positive, got {root}.")
    cfg = cfg or default_grid_config()
    classifier = classifier or AffectClassifier()
    positions = [(i, j) for i in range(1, j_max) for j in range(i + 1, j_max + 1)]
    cells = apply_in_order(
        positions,
        lambda pos: analyze_cell(pos[0], pos[1], root, cfg, classifier),
        desc="Sweeping triads..",
        show_progress=show_progress,
    )
    unresolved = sum(1 for c in cells if not c.classified)
    logger.info(f"Grid j_max={j_max}: {len(cells)} cells, {unresolved} unclassified.")
    return TriadGrid(j_max=j_max, root=root, tolerance=cfg.tolerance, cells=cells)
