from typing import List, Optional, Tuple
from chordmood.analyze.chord_analyzer import ChordAnalyzer
from chordmood.classify import AffectClassifier, Classification, PowerReport
from chordmood.proportion import other_writing, parse_proportion_text

SIDE_WINDOW = 0.6

# Chords the published table prints with their side power even though the gap exceeds the
# window (1:2:3 shows 0.86 against -1.72).
SIDE_ALWAYS_SHOWN = frozenset({"1:2:3"})

# (group, chord as written)
APPENDIX_ROWS: List[Tuple[str, str]] = [
    ("symmetric", "1:1:1"),
    ("symmetric", "1:2:4"),
    ("symmetric", "4:6:9"),
    ("symmetric", "16:20:25"),
    ("consonant-3", "1:2:3"),
    ("consonant-3", "2:3:4"),
    ("consonant-3", "2:3:5"),
    ("consonant-3", "2:3:8"),
    ("consonant-3", "2:4:5"),
    ("consonant-3", "2:5:6"),
    ("consonant-3", "2:5:8"),
    ("consonant-3", "3:4:5"),
    ("consonant-3", "/3:/4:/5"),
    ("consonant-3", "3:4:6"),
    ("consonant-3", "3:4:8"),
    ("consonant-3", "3:5:6"),
    ("consonant-3", "3:5:8"),
    ("consonant-3", "3:6:8"),
    ("consonant-3", "4:5:6"),
    ("consonant-3", "/4:/5:/6"),
    ("consonant-3", "4:5:8"),
    ("consonant-3", "5:6:8"),
    ("dissonant-3", "4:5:7"),
    ("dissonant-3", "5:6:7"),
    ("consonant-4", "1:2:3:4"),
    ("consonant-4", "2:3:4:5"),
    ("consonant-4", "3:4:5:6"),
    ("consonant-4", "4:5:6:8"),
]

HEADER = ("group", "proportion", "inverse", "pwe", "consonant", "note")


def format_power(value: float) -> str:
    # round first so tiny negatives never print as -0.00
    return f"{round(value, 2) + 0.0:.2f}"


def power_column(
    report: PowerReport, side_window: float = SIDE_WINDOW, show_side: bool = False
) -> str:
    """
    The power cell of one table row: ``main`` or ``main (side)``.

    Near-symmetric chords list the direct writing's power first, since for them the
    main/side split carries no valence; every other chord lists main first. The side
    power is shown when its amplitude is within ``side_window`` of the main one, or always
    when ``show_side`` is set.
    """
    first, second = report.pwe_main, report.pwe_side
    if report.near_symmetric and report.classification is Classification.MINOR:
        first, second = second, first
    if show_side or abs(abs(report.pwe_side) - abs(report.pwe_main)) <= side_window:
        return f"{format_power(first)} ({format_power(second)})"
    return format_power(first)


def symmetry_note(report: PowerReport) -> str:
    if report.classification is Classification.SYMMETRIC:
        return "symmetric"
    if report.near_symmetric:
        return "near-symmetric"
    return ""


def render_appendix_table(
    classifier: Optional[AffectClassifier] = None,
    rows: Optional[List[Tuple[str, str]]] = None,
    side_window: float = SIDE_WINDOW,
) -> str:
    """
    Regenerates the table of main and side powers as tab-separated text.

    Args:
        classifier (Optional[AffectClassifier]): Power settings; defaults to k=1, log2, 0.50.
        rows (Optional[List[Tuple[str, str]]]): (group, written chord) pairs; defaults to
            the published chord list.
        side_window (float): Largest main/side amplitude gap for which the side power is shown.

    Returns:
        str: Header plus one line per chord, newline-terminated.
    """
    analyzer = ChordAnalyzer(classifier=classifier or AffectClassifier())
    lines = ["\t".join(HEADER)]
    for group, text in rows or APPENDIX_ROWS:
        analysis = analyzer.analyze_text(text)
        consonant = analysis.consonance is not None and analysis.consonance.consonant
        lines.append(
            "\t".join(
                [
                    group,
                    text,
                    other_writing(parse_proportion_text(text)),
                    power_column(analysis.power, side_window, text in SIDE_ALWAYS_SHOWN),
                    "yes" if consonant else "no",
                    symmetry_note(analysis.power),
                ]
            )
        )
    return "\n".join(lines) + "\n"
