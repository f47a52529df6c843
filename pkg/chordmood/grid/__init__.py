from .triad_grid import (
    GRID_PRIME_LIMIT,
    GRID_TOLERANCE,
    GridCell,
    TriadGrid,
    analyze_cell,
    default_grid_config,
    generate_grid,
)
from .emit import emit_grid
