from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence
from chordmood.proportion.proportion import (
    Proportion,
    inverse_numbers,
    normalize_proportion,
)


class NotationError(ValueError):
    """Malformed proportion text; ``position`` is the 0-based index of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_proportion_text(text: str) -> List[Fraction]:
    """
    Parses a written proportion such as ``4:5:6``, ``/6:/5:/4`` or ``/4:/2:1``.

    A ``/n`` term stands for the reciprocal 1/n. Terms keep their written order.

    Returns:
        List[Fraction]: The written terms.

    Raises:
        NotationError: If a term is empty, not a positive integer, or zero.
    """
    if text is None or not text.strip():
        raise NotationError("Empty proportion text", 0)
    terms: List[Fraction] = []
    pos = 0
    for chunk in text.split(":"):
        stripped = chunk.strip()
        start = pos + (len(chunk) - len(chunk.lstrip()))
        reciprocal = stripped.startswith("/")
        digits = stripped[1:] if reciprocal else stripped
        digit_start = start + (1 if reciprocal else 0)
        if not digits:
            raise NotationError("Missing number in proportion term", digit_start)
        for offset, ch in enumerate(digits):
            if not ch.isdigit():
                raise NotationError(f"Unexpected character {ch!r}", digit_start + offset)
        value = int(digits)
        if value == 0:
            raise NotationError("Proportion terms must be positive", digit_start)
        terms.append(Fraction(1, value) if reciprocal else Fraction(value))
        pos += len(chunk) + 1
    return terms


def parse_proportion(text: str) -> Proportion:
    """Parses proportion text and normalizes it to canonical ascending integer form."""
    return normalize_proportion(parse_proportion_text(text))


def format_direct(p: Proportion) -> str:
    return ":".join(str(t) for t in p.terms)


def _format_reciprocals(numbers: Sequence[int]) -> str:
    # 1/1 is written as a plain 1
    return ":".join("1" if n == 1 else f"/{n}" for n in numbers)


def format_inverse(p: Proportion) -> str:
    """The reciprocal writing of p, e.g. 4:5:6 -> /15:/12:/10 and 1:2:4 -> /4:/2:1."""
    return _format_reciprocals(inverse_numbers(p))


def is_reciprocal_writing(written: Sequence[Fraction]) -> bool:
    """True when the written terms are unit fractions with at least one non-integer."""
    return any(t.denominator != 1 for t in written) and all(
        t.numerator == 1 for t in written
    )


def other_writing(written: Sequence[Fraction]) -> str:
    """
    The alternate writing of a written proportion, in written order.

    Integer writings turn into reciprocals (3:4:5 -> /20:/15:/12); reciprocal writings turn
    into integers (/3:/4:/5 -> 20:15:12).
    """
    if is_reciprocal_writing(written):
        common = lcm(*(t.denominator for t in written))
        ints = [int(t * common) for t in written]
        g = gcd(*ints)
        return ":".join(str(i // g) for i in ints)
    common = lcm(*(t.denominator for t in written))
    ints = [int(t * common) for t in written]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    top = lcm(*ints)
    return _format_reciprocals([top // i for i in ints])


def format_written(written: Sequence[Fraction]) -> str:
    """Prints written terms back in the notation they were parsed from."""
    return ":".join(
        str(t.numerator) if t.denominator == 1 else f"/{t.denominator}"
        if t.numerator == 1
        else f"{t.numerator}/{t.denominator}"
        for t in written
    )
