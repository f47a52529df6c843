from typing import Dict
from chordmood.grid.triad_grid import TriadGrid


def emit_grid(grid: TriadGrid, format: str = "csv") -> bytes:
    """
    Serializes a grid as ``csv`` or ``image`` (plain portable pixmap).

    Raises:
        ValueError: If the format is not supported.
    """
    from chordmood.emitters import CsvEmitter, GridEmitter, PixmapEmitter

    emitters: Dict[str, GridEmitter] = {"csv": CsvEmitter(), "image": PixmapEmitter()}
    if format not in emitters:
        raise ValueError(
            f"Unsupported grid format '{format}'; choose one of {sorted(emitters)}."
        )
    return emitters[format].emit(grid)
