from typing import Tuple
import numpy as np
from .grid_emitter import GridEmitter
from chordmood.classify import Classification
from chordmood.grid.triad_grid import GridCell, TriadGrid

WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
GRAY = (160, 160, 160)


class PixmapEmitter(GridEmitter):
    """
    Plain portable pixmap (P3), one pixel per cell, j along x and i along y with the
    bottom row at i = 1. Major cells are red and minor cells blue, fading from white as
    |pwe_adjusted| grows to ``clamp``; near-symmetric cells are gray, unclassified cells
    white, and positions outside the triangle black.
    """

    def __init__(self, clamp: float = 3.0):
        if clamp <= 0:
            raise ValueError(f"Intensity clamp must be positive, got {clamp}.")
        self.clamp = clamp

    def color(self, cell: GridCell) -> Tuple[int, int, int]:
        if not cell.classified:
            return WHITE
        report = cell.analysis
        if report.near_symmetric:
            return GRAY
        scale = min(abs(report.pwe_adjusted), self.clamp) / self.clamp
        fade = int(round(255 * (1.0 - scale)))
        if report.classification is Classification.MAJOR:
            return (255, fade, fade)
        return (fade, fade, 255)

    def raster(self, grid: TriadGrid) -> np.ndarray:
        """Height x width x 3 array of 8-bit colors, row 0 at the top (i = j_max)."""
        size = grid.j_max
        image = np.zeros((size, size, 3), dtype=np.uint8)
        image[:, :] = BLACK
        for cell in grid.cells:
            row = size - cell.lower_semitones
            col = cell.upper_semitones - 1
            image[row, col] = self.color(cell)
        return image

    def emit(self, grid: TriadGrid) -> bytes:
        image = self.raster(grid)
        size = grid.j_max
        lines = ["P3", f"{size} {size}", "255"]
        for row in image:
            lines.append(" ".join(f"{r} {g} {b}" for r, g, b in row))
        return ("\n".join(lines) + "\n").encode("ascii")
