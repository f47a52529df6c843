from fractions import Fraction
from math import gcd, lcm, prod
from numbers import Rational as _RationalABC
from typing import List, Sequence, Tuple, Union
from pydantic import BaseModel, computed_field, field_validator

RationalLike = Union[int, float, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """
    Converts an int, Fraction, decimal string or float to an exact positive Fraction.

    Floats convert exactly from their binary value, so 300.0 gives 300 but 0.1 does not give 1/10.

    Raises:
        ValueError: If the value is not a finite positive number.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a number: {value!r}")
    if isinstance(value, (int, _RationalABC)):
        r = Fraction(value)
    elif isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"Entry must be finite, got {value}.")
        r = Fraction(value)
    elif isinstance(value, str):
        try:
            r = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e
    else:
        raise ValueError(f"Not a number: {value!r}")
    if r <= 0:
        raise ValueError(f"Entries must be positive, got {value}.")
    return r


class Proportion(BaseModel):
    """
    A chord's relative pitches as an ascending, globally coprime integer tuple a1:...:aM.

    Attributes:
        terms (Tuple[int, ...]): Voice terms, lowest voice first.
    """

    terms: Tuple[int, ...]

    class Config:
        frozen = True

    @field_validator("terms")
    def validate_terms(cls, v):
        """
        Validates the canonical form.

        Raises:
            ValueError: If the tuple is empty, has a non-positive term, is not ascending, or
                        its terms share a common factor.
        """
        if not v:
            raise ValueError("A proportion needs at least one term.")
        if any(t < 1 for t in v):
            raise ValueError(f"Proportion terms must be positive integers, got {v}.")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f"Proportion terms must be ascending, got {v}.")
        if gcd(*v) != 1:
            raise ValueError(f"Proportion terms must be coprime, got {v}.")
        return v

    @computed_field
    @property
    def voices(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return ":".join(str(t) for t in self.terms)


class ProportionProducts(BaseModel):
    """
    Products of the direct terms and of the inverse numbers of a proportion.
    """

    p_dir: int
    p_inv: int

    class Config:
        frozen = True

    @field_validator("p_dir", "p_inv")
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError(f"Products must be at least 1, got {v}.")
        return v


def normalize_proportion(raw: Sequence[RationalLike]) -> Proportion:
    """
    Reduces positive rationals to the unique ascending coprime integer tuple proportional
    to them (after sorting).

    Examples:
        [300, 400, 500] -> 3:4:5
        [1/6, 1/5, 1/4] -> 10:12:15

    Raises:
        ValueError: If the input is empty or contains a zero or negative entry.
    """
    if raw is None or len(raw) == 0:
        raise ValueError("Cannot normalize an empty proportion.")
    values = sorted(as_rational(x) for x in raw)
    common = lcm(*(v.denominator for v in values))
    ints = [int(v * common) for v in values]
    g = gcd(*ints)
    return Proportion(terms=tuple(i // g for i in ints))


def inverse_numbers(p: Proportion) -> List[int]:
    """
    Returns d_i = lcm(a_1..a_M) / a_i aligned with voice order, so (1/d_1):...:(1/d_M)
    recovers p. The list is descending.
    """
    common = lcm(*p.terms)
    return [common // t for t in p.terms]


def mirror(p: Proportion) -> Proportion:
    """
    The mirror chord: reciprocals of p's terms, normalized. mirror(mirror(p)) == p.
    """
    return normalize_proportion([Fraction(1, t) for t in p.terms])


def products(p: Proportion) -> ProportionProducts:
    """
    Exact products of the direct terms and of the inverse numbers.
    """
    return ProportionProducts(p_dir=prod(p.terms), p_inv=prod(inverse_numbers(p)))


def pairwise_ratios(p: Proportion) -> List[Tuple[int, int, Fraction]]:
    """
    All upward intervals a_j / a_i (j > i) with their voice indices.
    """
    return [
        (i, j, Fraction(p.terms[j], p.terms[i]))
        for i in range(p.voices)
        for j in range(i + 1, p.voices)
    ]
