import math
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple
from pydantic import BaseModel, field_validator
from chordmood.proportion import Proportion, inverse_numbers
from chordmood.utils.logs import logger

# Above this voice count the anchored enumeration gives way to convergents.
EXHAUSTIVE_MAX_VOICES = 4


class NoProportionFound(ValueError):
    """No integer proportion within the tolerance and term ceiling."""


class RationalizeConfig(BaseModel):
    """
    Search settings for turning frequencies into a small-integer proportion.

    Attributes:
        tolerance (float): Relative error bound for every pairwise ratio.
        max_term (int): Largest allowed term of the normalized proportion.
        max_voices (int): Largest accepted voice count.
        prime_limit (Optional[int]): If set, terms may only contain primes up to this value.
    """

    tolerance: float = 0.01
    max_term: int = 64
    max_voices: int = 8
    prime_limit: Optional[int] = None

    class Config:
        frozen = True

    @field_validator("tolerance")
    def validate_tolerance(cls, v):
        if not 0 < v < 0.06:
            raise ValueError(f"Tolerance must lie in (0, 0.06), got {v}.")
        return v

    @field_validator("max_term")
    def validate_max_term(cls, v):
        if v < 2:
            raise ValueError(f"max_term must be at least 2, got {v}.")
        return v

    @field_validator("max_voices")
    def validate_max_voices(cls, v):
        if v < 1:
            raise ValueError(f"max_voices must be at least 1, got {v}.")
        return v

    @field_validator("prime_limit")
    def validate_prime_limit(cls, v):
        if v is not None and v < 2:
            raise ValueError(f"prime_limit must be at least 2, got {v}.")
        return v


def within_tolerance(terms: Sequence[int], freqs: Sequence[float], tolerance: float) -> bool:
    """
    True if every pairwise ratio terms[j]/terms[i] is within ``tolerance`` (relative) of
    freqs[j]/freqs[i]. Both sequences are matched voice by voice.
    """
    count = len(terms)
    for i in range(count):
        for j in range(i + 1, count):
            exact = freqs[j] / freqs[i]
            if abs((terms[j] / terms[i]) / exact - 1.0) > tolerance:
                return False
    return True


def largest_prime_factor(n: int) -> int:
    largest = 1
    factor = 2
    while factor * factor <= n:
        while n % factor == 0:
            largest = factor
            n //= factor
        factor += 1
    return max(largest, n) if n > 1 else largest


def candidate_key(terms: Tuple[int, ...]) -> Tuple[int, int, Tuple[int, ...]]:
    """
    Ranking of a candidate: the simpler of its two writings first, then the direct product,
    then the terms themselves.
    """
    p_dir = math.prod(terms)
    p_inv = math.prod(inverse_numbers(Proportion(terms=terms)))
    return (min(p_dir, p_inv), p_dir, terms)


def _admissible(terms: Tuple[int, ...], cfg: RationalizeConfig) -> bool:
    if math.gcd(*terms) != 1 or terms[-1] > cfg.max_term:
        return False
    if cfg.prime_limit is not None:
        return all(largest_prime_factor(t) <= cfg.prime_limit for t in terms)
    return True


def convergents(x: float, max_den: int) -> Iterator[Fraction]:
    """
    Successive continued-fraction convergents of a positive real, stopping before the
    denominator exceeds ``max_den`` or once the expansion terminates.
    """
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    rest = x
    while True:
        a = math.floor(rest)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        if k > max_den:
            return
        yield Fraction(h, k)
        frac = rest - a
        if frac < 1e-12:
            return
        rest = 1.0 / frac


def _anchored_candidates(
    freqs: Sequence[float], cfg: RationalizeConfig
) -> Iterator[Tuple[int, ...]]:
    """Every ascending tuple within tolerance, anchored on the lowest term."""
    tol = cfg.tolerance
    ratios = [f / freqs[0] for f in freqs]
    count = len(freqs)

    def extend(prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        voice = len(prefix)
        if voice == count:
            yield tuple(prefix)
            return
        target = prefix[0] * ratios[voice]
        lo = max(prefix[-1], math.floor(target * (1 - tol)) - 1, 1)
        hi = min(cfg.max_term, math.ceil(target * (1 + tol)) + 1)
        for a in range(lo, hi + 1):
            candidate = prefix + [a]
            if within_tolerance(candidate, freqs[: voice + 1], tol):
                yield from extend(candidate)

    for anchor in range(1, cfg.max_term + 1):
        yield from extend([anchor])


def _convergent_candidates(
    freqs: Sequence[float], cfg: RationalizeConfig
) -> Iterator[Tuple[int, ...]]:
    """
    Per-voice convergents against the lowest voice, combined over a common denominator,
    followed by a local pass of nearest-integer tuples for every anchor up to max_term.
    """
    ratios = [f / freqs[0] for f in freqs]
    picked = [Fraction(1)]
    for ratio in ratios[1:]:
        choice = None
        for c in convergents(ratio, cfg.max_term):
            if abs(float(c) / ratio - 1.0) <= cfg.tolerance / 2:
                choice = c
                break
        if choice is None:
            break
        picked.append(choice)
    if len(picked) == len(ratios):
        common = math.lcm(*(c.denominator for c in picked))
        combined = tuple(int(c * common) for c in picked)
        shared = math.gcd(*combined)
        combined = tuple(t // shared for t in combined)
        ascending = all(a <= b for a, b in zip(combined, combined[1:]))
        if ascending and within_tolerance(combined, freqs, cfg.tolerance):
            yield combined

    for anchor in range(1, cfg.max_term + 1):
        terms = tuple(max(1, round(anchor * r)) for r in ratios)
        if all(a <= b for a, b in zip(terms, terms[1:])) and within_tolerance(
            terms, freqs, cfg.tolerance
        ):
            yield terms


def rationalize(freqs: Sequence[float], cfg: Optional[RationalizeConfig] = None) -> Proportion:
    """
    Finds the small-integer proportion that best explains a set of frequencies.

    Among all normalized proportions with terms <= max_term whose pairwise ratios are within
    the tolerance of the input's, picks the one minimizing min(p_dir, p_inv), then p_dir,
    then the term tuple.

    Args:
        freqs (Sequence[float]): Frequencies in Hz, any order.
        cfg (Optional[RationalizeConfig]): Search settings; defaults to 1% and terms <= 64.

    Returns:
        Proportion: The selected proportion.

    Raises:
        ValueError: If the input is empty, has too many voices or non-positive frequencies.
        NoProportionFound: If no candidate satisfies every pairwise tolerance.
    """
    cfg = cfg or RationalizeConfig()
    if freqs is None or len(freqs) == 0:
        raise ValueError("Cannot rationalize an empty frequency list.")
    if len(freqs) > cfg.max_voices:
        raise ValueError(
            f"Too many voices ({len(freqs)}); the limit is {cfg.max_voices}."
        )
    if any(not (math.isfinite(f) and f > 0) for f in freqs):
        raise ValueError(f"Frequencies must be finite and positive, got {list(freqs)}.")
    ordered = sorted(float(f) for f in freqs)
    if len(ordered) == 1:
        return Proportion(terms=(1,))

    if len(ordered) <= EXHAUSTIVE_MAX_VOICES:
        candidates = _anchored_candidates(ordered, cfg)
    else:
        candidates = _convergent_candidates(ordered, cfg)

    best = None
    for terms in candidates:
        if not _admissible(terms, cfg):
            continue
        key = candidate_key(terms)
        if best is None or key < best:
            best = key
    if best is None:
        raise NoProportionFound(
            f"No proportion with terms <= {cfg.max_term} fits {ordered} within {cfg.tolerance:.2%}."
        )
    logger.debug(f"Rationalized {ordered} to {best[2]} (key {best[:2]}).")
    return Proportion(terms=best[2])
