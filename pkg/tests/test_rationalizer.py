import math
import random
import pytest
from chordmood.proportion import normalize_proportion
from chordmood.rationalize import (
    NoProportionFound,
    PitchInput,
    PitchParseError,
    RationalizeConfig,
    convergents,
    largest_prime_factor,
    parse_pitch,
    rationalize,
    semitones_to_freqs,
    within_tolerance,
)


@pytest.fixture(scope="module")
def ranked_triples():
    """
    Every ascending coprime triple with terms <= 64, ranked by the selection order:
    min(p_dir, p_inv), then p_dir, then the terms.
    """
    ranked = []
    for a in range(1, 65):
        for b in range(a, 65):
            for c in range(b, 65):
                if math.gcd(a, b, c) != 1:
                    continue
                common = math.lcm(a, b, c)
                p_dir = a * b * c
                p_inv = (common // a) * (common // b) * (common // c)
                ranked.append((min(p_dir, p_inv), p_dir, (a, b, c)))
    ranked.sort()
    return [terms for _, _, terms in ranked]


@pytest.mark.parametrize(
    "freqs, expected",
    [
        ([300, 400, 500], (3, 4, 5)),
        ([220, 275, 330], (4, 5, 6)),
        ([330, 220, 275], (4, 5, 6)),
        ([440, 880], (1, 2)),
        ([440], (1,)),
    ],
)
def test_rationalize_examples(freqs, expected):
    """
    Test rationalization of exact frequency sets.
    """
    assert rationalize(freqs).terms == expected


def test_equal_tempered_major_triad():
    """
    Test that a 12-TET major triad resolves to 4:5:6 at 1%.
    """
    freqs = semitones_to_freqs([0, 4, 7], 261.63)
    assert rationalize(freqs).terms == (4, 5, 6)


def test_augmented_triad_prime_limit():
    """
    Test that the prime limit steers stacked major thirds to 16:20:25.
    """
    freqs = semitones_to_freqs([0, 4, 8], 261.63)
    assert rationalize(freqs, RationalizeConfig(tolerance=0.02, prime_limit=7)).terms == (
        16,
        20,
        25,
    )
    unlimited = rationalize(freqs, RationalizeConfig(tolerance=0.02))
    assert unlimited.terms == (12, 15, 19)


@pytest.mark.parametrize("voices, samples", [(2, 500), (3, 500), (4, 500), (5, 200)])
def test_recovery(voices, samples):
    """
    Test that exact scaled proportions with terms <= 32 come back unchanged at 0.1%.

    Five voices go through the convergent search rather than the anchored enumeration.
    """
    rng = random.Random(1234 + voices)
    cfg = RationalizeConfig(tolerance=0.001)
    for _ in range(samples):
        p = normalize_proportion([rng.randint(1, 32) for _ in range(voices)])
        scale = rng.uniform(0.5, 1000.0)
        assert rationalize([t * scale for t in p.terms], cfg) == p


def test_matches_brute_force(ranked_triples):
    """
    Test that the search agrees with exhaustive enumeration at 1% and 2%.
    """
    rng = random.Random(99)
    for _ in range(100):
        terms = sorted(rng.randint(1, 32) for _ in range(3))
        scale = rng.uniform(50.0, 500.0)
        freqs = sorted(t * scale * (1 + rng.uniform(-0.005, 0.005)) for t in terms)
        for tolerance in (0.01, 0.02):
            expected = next(
                (c for c in ranked_triples if within_tolerance(c, freqs, tolerance)), None
            )
            cfg = RationalizeConfig(tolerance=tolerance)
            if expected is None:
                with pytest.raises(NoProportionFound):
                    rationalize(freqs, cfg)
            else:
                assert rationalize(freqs, cfg).terms == expected


def test_result_within_tolerance_and_scale_invariant():
    """
    Test that results always fit the input and ignore a common scale.
    """
    rng = random.Random(5)
    cfg = RationalizeConfig(tolerance=0.01)
    for _ in range(100):
        freqs = sorted(rng.uniform(100.0, 400.0) for _ in range(3))
        try:
            p = rationalize(freqs, cfg)
        except NoProportionFound:
            continue
        assert within_tolerance(p.terms, freqs, cfg.tolerance)
        assert rationalize([f * 3.7 for f in freqs], cfg) == p
        assert rationalize(freqs, cfg) == p


@pytest.mark.parametrize(
    "terms",
    [(4, 5, 6, 7, 8), (1, 2, 3, 4, 5, 6), (8, 10, 12, 15, 18), (2, 3, 4, 5, 6, 8, 10)],
)
def test_many_voices(terms):
    """
    Test chords with more than four voices.
    """
    freqs = [t * 55.0 for t in terms]
    assert rationalize(freqs).terms == terms


def test_no_proportion_found():
    """
    Test the signal raised when nothing fits.
    """
    with pytest.raises(NoProportionFound):
        rationalize([100.0, 103.0, 107.0], RationalizeConfig(max_term=8))


@pytest.mark.parametrize(
    "freqs", [[], [100.0] * 9, [100.0, -200.0], [100.0, float("nan")], [0.0, 1.0]]
)
def test_rationalize_rejects_bad_input(freqs):
    """
    Test validation of the frequency list.
    """
    with pytest.raises(ValueError):
        rationalize(freqs)


@pytest.mark.parametrize(
    "kwargs",
    [{"tolerance": 0.0}, {"tolerance": 0.06}, {"max_term": 1}, {"prime_limit": 1}, {"max_voices": 0}],
)
def test_config_validation(kwargs):
    """
    Test validation of the search settings.
    """
    with pytest.raises(ValueError):
        RationalizeConfig(**kwargs)


def test_convergents():
    """
    Test continued-fraction convergents.
    """
    assert [str(c) for c in convergents(1.75, 64)] == ["1", "2", "7/4"]
    assert [str(c) for c in convergents(math.pi, 110)] == ["3", "22/7", "333/106"]


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (16, 2), (25, 5), (19, 19), (63, 7)])
def test_largest_prime_factor(n, expected):
    """
    Test the largest prime factor helper.
    """
    assert largest_prime_factor(n) == expected


def test_semitones_to_freqs():
    """
    Test 12-TET conversion of semitone offsets.
    """
    assert semitones_to_freqs([0, 12], 440) == [440.0, 880.0]
    assert semitones_to_freqs([0, 4, 7], 300) == pytest.approx([300.0, 377.98, 449.49], abs=0.01)
    assert semitones_to_freqs([0], 261.63) == [261.63]
    with pytest.raises(ValueError):
        semitones_to_freqs([0], 0)


@pytest.mark.parametrize(
    "name, freq",
    [("A4", 440.0), ("A5", 880.0), ("C4", 261.6256), ("c#4", 277.1826), ("Eb4", 311.1270), ("C-1", 8.1758)],
)
def test_parse_pitch(name, freq):
    """
    Test pitch names against their 12-TET frequencies.
    """
    assert parse_pitch(name) == pytest.approx(freq, abs=1e-3)


@pytest.mark.parametrize(
    "name, position", [("", 0), ("H4", 0), ("C", 1), ("C#x", 2), ("Cb-", 3), ("A10", 1)]
)
def test_parse_pitch_errors(name, position):
    """
    Test that malformed pitch names report where they break.
    """
    with pytest.raises(PitchParseError) as excinfo:
        parse_pitch(name)
    assert excinfo.value.position == position


def test_pitch_input():
    """
    Test the three pitch input forms and their validation.
    """
    assert PitchInput(frequencies=[300.0, 400.0]).to_frequencies() == [300.0, 400.0]
    assert PitchInput(semitones=[0, 12]).to_frequencies(root=100.0) == [100.0, 200.0]
    assert PitchInput(names=["A4", " A5"]).to_frequencies() == [440.0, 880.0]
    with pytest.raises(ValueError):
        PitchInput()
    with pytest.raises(ValueError):
        PitchInput(frequencies=[300.0], names=["A4"])
    with pytest.raises(ValueError):
        PitchInput(names=[])
    with pytest.raises(ValueError):
        PitchInput(frequencies=[0.0])
