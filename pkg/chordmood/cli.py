import argparse
import json
import os
import sys
from typing import List, Optional, Sequence
from pydantic import ValidationError
from chordmood.analyze import ChordAnalysis, ChordAnalyzer, render_appendix_table
from chordmood.audio import (
    RenderSpec,
    matched_pair,
    probe_magnitude,
    render_chord,
    to_decibels,
    write_wav,
)
from chordmood.classify import AffectClassifier
from chordmood.grid import emit_grid, generate_grid
from chordmood.proportion import Proportion, parse_proportion
from chordmood.rationalize import (
    NoProportionFound,
    PitchInput,
    RationalizeConfig,
    parse_pitch,
    semitones_to_freqs,
)
from chordmood.utils import Settings, load_settings, logger, set_verbosity

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_INPUT_ERROR = 2
EXIT_NO_PROPORTION = 3


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordmood",
        description="Analyze chords as pitch proportions: major/minor class, emotional power, consonance.",
    )
    parser.add_argument("--config", help="Key-value file with default settings.")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="More log output (repeatable)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Analyze one chord.")
    analyze.add_argument("proportion", nargs="?", help="Proportion text, e.g. 4:5:6 or /6:/5:/4.")
    analyze.add_argument("--freqs", type=_float_list, help="Frequencies in Hz, comma-separated.")
    analyze.add_argument("--semitones", type=_float_list, help="Semitone offsets from --root.")
    analyze.add_argument("--notes", type=_name_list, help="Pitch names, e.g. C4,E4,G4.")
    analyze.add_argument("--root", type=float, help="Root frequency for --semitones.")
    analyze.add_argument("--tol", type=float, help="Relative tolerance for pitch input.")
    analyze.add_argument("--threshold", type=float, help="Near-symmetry threshold.")
    analyze.add_argument("--format", choices=["json", "text"], default="json")

    grid = sub.add_parser("grid", help="Sweep the 12-TET triad grid.")
    grid.add_argument("--jmax", type=int, default=12, help="Largest top-voice offset.")
    grid.add_argument("--tol", type=float, help="Relative tolerance for each cell.")
    grid.add_argument("--root", type=float, help="Root frequency.")
    grid.add_argument("--format", choices=["csv", "image"], default="csv")
    grid.add_argument("--out", help="Output file; stdout if omitted.")
    grid.add_argument("--progress", action="store_true", help="Show a progress bar.")

    wav = sub.add_parser("wav", help="Render a chord or a matched pair to WAV.")
    wav.add_argument("--freqs", type=_float_list, help="Frequencies in Hz, comma-separated.")
    wav.add_argument(
        "--prop", action="append", help="Proportion text; give twice for a matched pair."
    )
    wav.add_argument("--semitones", type=_float_list, help="Semitone offsets from --root.")
    wav.add_argument("--notes", type=_name_list, help="Pitch names, e.g. C4,E4,G4.")
    wav.add_argument("--root", type=float, help="Root frequency for --semitones.")
    wav.add_argument("--mean", type=float, help="Arithmetic-mean frequency for --prop.")
    wav.add_argument("--harmonics", type=int, help="Partials per voice.")
    wav.add_argument("--dur", type=float, help="Duration in seconds.")
    wav.add_argument("--sr", type=int, help="Sample rate in Hz.")
    wav.add_argument("--peak", type=float, help="Peak level as a fraction of full scale.")
    wav.add_argument("--out", default="chord.wav", help="Output file (pairs get suffixes).")
    wav.add_argument(
        "--check", action="store_true", help="Print the spectral level at each partial."
    )

    table = sub.add_parser("table", help="Print the table of main and side powers.")
    table.add_argument("--out", help="Output file; stdout if omitted.")
    return parser


def _pick(flag, default):
    return default if flag is None else flag


def _single_input(args: argparse.Namespace, forms: Sequence[str]) -> str:
    given = [name for name in forms if getattr(args, name) is not None]
    if len(given) != 1:
        flags = ", ".join(name if name == "proportion" else f"--{name}" for name in forms)
        raise ValueError(f"Supply exactly one chord input ({flags}); got {len(given)}.")
    return given[0]


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {out}.")
    else:
        sys.stdout.write(text)


def _format_text(analysis: ChordAnalysis) -> str:
    record = analysis.to_record()
    intervals = record.pop("intervals")
    width = max(len(key) for key in record)
    lines = [f"{key.ljust(width)}  {value}" for key, value in record.items()]
    for pair in intervals:
        lines.append(
            f"{'interval'.ljust(width)}  {pair['lower']}-{pair['upper']} {pair['ratio']}"
            f" ({pair['reduced']}) {pair['verdict']}"
        )
    return "\n".join(lines) + "\n"


def run_analyze(args: argparse.Namespace, settings: Settings) -> int:
    form = _single_input(args, ["proportion", "freqs", "semitones", "notes"])
    analyzer = ChordAnalyzer(
        classifier=AffectClassifier(
            near_sym_threshold=_pick(args.threshold, settings.near_sym_threshold)
        ),
        rationalize_config=RationalizeConfig(tolerance=_pick(args.tol, settings.tolerance)),
        root=_pick(args.root, settings.root),
    )
    if form == "proportion":
        analysis = analyzer.analyze_text(args.proportion)
    elif form == "freqs":
        analysis = analyzer.analyze_pitches(PitchInput(frequencies=args.freqs))
    elif form == "semitones":
        analysis = analyzer.analyze_pitches(PitchInput(semitones=args.semitones))
    else:
        analysis = analyzer.analyze_pitches(PitchInput(names=args.notes))

    if args.format == "json":
        sys.stdout.write(json.dumps(analysis.to_record(), ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(_format_text(analysis))
    return EXIT_OK


def run_grid(args: argparse.Namespace, settings: Settings) -> int:
    cfg = RationalizeConfig(
        tolerance=_pick(args.tol, settings.grid_tolerance),
        prime_limit=settings.grid_prime_limit,
    )
    grid = generate_grid(
        j_max=args.jmax,
        root=_pick(args.root, settings.root),
        cfg=cfg,
        show_progress=args.progress,
    )
    _write_output(emit_grid(grid, args.format).decode("ascii"), args.out)
    return EXIT_OK


def _pair_path(out: str, p: Proportion) -> str:
    stem, ext = os.path.splitext(out)
    return f"{stem}_{'-'.join(str(t) for t in p.terms)}{ext or '.wav'}"


def run_wav(args: argparse.Namespace, settings: Settings) -> int:
    form = _single_input(args, ["freqs", "prop", "semitones", "notes"])
    mean = _pick(args.mean, settings.mean_frequency)
    renders = []
    if form == "prop":
        if len(args.prop) > 2:
            raise ValueError(f"--prop takes at most two proportions, got {len(args.prop)}.")
        props = [parse_proportion(text) for text in args.prop]
        if len(props) == 2:
            freqs_a, freqs_b = matched_pair(props[0], props[1], mean)
            renders = [
                (_pair_path(args.out, props[0]), freqs_a),
                (_pair_path(args.out, props[1]), freqs_b),
            ]
        else:
            renders = [(args.out, matched_pair(props[0], props[0], mean)[0])]
    elif form == "freqs":
        renders = [(args.out, args.freqs)]
    elif form == "semitones":
        renders = [(args.out, semitones_to_freqs(args.semitones, _pick(args.root, settings.root)))]
    else:
        renders = [(args.out, [parse_pitch(name) for name in args.notes])]

    for path, freqs in renders:
        spec = RenderSpec(
            freqs=freqs,
            duration=_pick(args.dur, settings.duration),
            sample_rate=_pick(args.sr, settings.sample_rate),
            peak=_pick(args.peak, settings.peak),
            harmonics=_pick(args.harmonics, settings.harmonics),
        )
        buffer = render_chord(spec)
        write_wav(buffer, path, spec.sample_rate)
        sys.stdout.write(f"{path}\t{','.join(f'{f:g}' for f in freqs)}\n")
        if args.check:
            for freq in freqs:
                for h in range(1, spec.harmonics + 1):
                    level = max(probe_magnitude(buffer, h * freq, spec.sample_rate), 1e-12)
                    sys.stdout.write(f"  {h * freq:g} Hz\t{to_decibels(level):.1f} dB\n")
    return EXIT_OK


def run_table(args: argparse.Namespace, settings: Settings) -> int:
    classifier = AffectClassifier(near_sym_threshold=settings.near_sym_threshold)
    _write_output(render_appendix_table(classifier), args.out)
    return EXIT_OK


COMMANDS = {
    "analyze": run_analyze,
    "grid": run_grid,
    "wav": run_wav,
    "table": run_table,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs one subcommand and returns its exit code: 0 on success, 2 on input errors,
    3 when pitch input fits no small-integer proportion, 1 on I/O failures.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    set_verbosity(args.verbose)
    try:
        settings = load_settings(args.config)
        return COMMANDS[args.command](args, settings)
    except NoProportionFound as e:
        print(f"chordmood: {e}", file=sys.stderr)
        return EXIT_NO_PROPORTION
    except ValidationError as e:
        print(f"chordmood: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as e:
        print(f"chordmood: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"chordmood: {e}", file=sys.stderr)
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
