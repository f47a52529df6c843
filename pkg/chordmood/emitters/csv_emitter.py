import csv
import io
from typing import List
from .grid_emitter import GridEmitter
from chordmood.grid.triad_grid import GridCell, TriadGrid

CSV_COLUMNS = [
    "i",
    "j",
    "proportion",
    "class",
    "pwe_main",
    "pwe_side",
    "pwe_adjusted",
    "near_symmetric",
    "consonant",
]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _number(value: float) -> str:
    return f"{value + 0.0:.6f}"


class CsvEmitter(GridEmitter):
    """
    One row per cell, ordered by (i, j). Unclassified cells keep their coordinates and the
    class ``Unclassified`` with the remaining columns empty.
    """

    def row(self, cell: GridCell) -> List[str]:
        if not cell.classified:
            return [str(cell.lower_semitones), str(cell.upper_semitones), "", "Unclassified"] + [
                ""
            ] * 5
        report = cell.analysis
        return [
            str(cell.lower_semitones),
            str(cell.upper_semitones),
            str(cell.proportion),
            report.classification.value,
            _number(report.pwe_main),
            _number(report.pwe_side),
            _number(report.pwe_adjusted),
            _flag(report.near_symmetric),
            _flag(cell.consonant),
        ]

    def emit(self, grid: TriadGrid) -> bytes:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for cell in grid.cells:
            writer.writerow(self.row(cell))
        return buffer.getvalue().encode("ascii")
