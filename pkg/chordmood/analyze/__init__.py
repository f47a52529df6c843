from .chord_analyzer import ChordAnalysis, ChordAnalyzer
from .appendix import (
    APPENDIX_ROWS,
    SIDE_ALWAYS_SHOWN,
    format_power,
    power_column,
    render_appendix_table,
    symmetry_note,
)
