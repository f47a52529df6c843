import io
import logging
import pytest
import pandas as pd
from chordmood.classify import AffectClassifier, Classification
from chordmood.emitters import CSV_COLUMNS, CsvEmitter, PixmapEmitter
from chordmood.grid import GridCell, TriadGrid, analyze_cell, emit_grid, generate_grid
from chordmood.proportion import mirror
from chordmood.rationalize import RationalizeConfig

FLIPPED = {
    Classification.MAJOR: Classification.MINOR,
    Classification.MINOR: Classification.MAJOR,
    Classification.SYMMETRIC: Classification.SYMMETRIC,
}


@pytest.fixture(scope="module")
def grid():
    return generate_grid()


@pytest.fixture
def unresolved_grid():
    cfg = RationalizeConfig(tolerance=0.001, max_term=4)
    cell = analyze_cell(1, 2, 261.63, cfg, AffectClassifier())
    return TriadGrid(j_max=2, root=261.63, tolerance=0.001, cells=[cell])


def test_grid_shape(grid):
    """
    Test that the default grid holds the full triangle in (i, j) order.
    """
    assert len(grid.cells) == 66
    positions = [(c.lower_semitones, c.upper_semitones) for c in grid.cells]
    assert positions == sorted(positions)
    assert all(1 <= i < j <= 12 for i, j in positions)


@pytest.mark.parametrize(
    "i, j, terms, classification, pwe",
    [
        (4, 7, (4, 5, 6), Classification.MAJOR, 2.30),
        (3, 7, (10, 12, 15), Classification.MINOR, -2.30),
    ],
)
def test_triad_spot_checks(grid, i, j, terms, classification, pwe):
    """
    Test the major and minor triad cells.
    """
    cell = grid.cell(i, j)
    assert cell.proportion.terms == terms
    assert cell.analysis.classification is classification
    assert round(cell.analysis.pwe_main, 2) == pwe
    assert cell.consonant


def test_augmented_triad_cell(grid):
    """
    Test that stacked major thirds resolve to the symmetric 16:20:25.
    """
    cell = grid.cell(4, 8)
    assert cell.proportion.terms == (16, 20, 25)
    assert cell.analysis.classification is Classification.SYMMETRIC
    assert cell.analysis.pwe_adjusted == 0.0


def test_tritone_cell_is_dissonant(grid):
    """
    Test that the cell containing a tritone is flagged dissonant.
    """
    cell = grid.cell(6, 12)
    assert cell.classified
    assert cell.proportion.terms == (5, 7, 10)
    assert not cell.consonant


def test_mirror_pairs(grid):
    """
    Test that cells (i, j) and (j - i, j) carry mirrored chords with opposite valence.

    Self-mirror cells are skipped, as are pairs where a mirrored proportion exceeds the
    term ceiling and so cannot be a candidate in the other cell.
    """
    checked = 0
    for cell in grid.cells:
        i, j = cell.lower_semitones, cell.upper_semitones
        partner = cell.mirror_position
        if partner[0] <= i:
            continue
        other = grid.cell(*partner)
        assert other.mirror_position == (i, j)
        if not (cell.classified and other.classified):
            continue
        if max(mirror(cell.proportion).terms) > 64 or max(mirror(other.proportion).terms) > 64:
            continue
        assert other.proportion == mirror(cell.proportion), (i, j)
        assert other.analysis.classification is FLIPPED[cell.analysis.classification]
        if cell.analysis.classification is Classification.SYMMETRIC:
            assert other.analysis.pwe_adjusted == cell.analysis.pwe_adjusted == 0.0
        else:
            assert other.analysis.pwe_main == pytest.approx(-cell.analysis.pwe_main, abs=1e-9)
        checked += 1
    assert checked >= 10


def test_mirror_position():
    """
    Test the inverted-stack partner of a cell.
    """
    assert GridCell(lower_semitones=4, upper_semitones=7).mirror_position == (3, 7)


def test_cell_bounds():
    """
    Test that cells on or below the diagonal are rejected.
    """
    with pytest.raises(ValueError):
        GridCell(lower_semitones=5, upper_semitones=5)
    with pytest.raises(ValueError):
        GridCell(lower_semitones=0, upper_semitones=3)


def test_missing_cell_lookup(grid):
    """
    Test that looking up a position outside the triangle raises KeyError.
    """
    with pytest.raises(KeyError):
        grid.cell(7, 4)


@pytest.mark.parametrize("j_max", [1, 25])
def test_generate_grid_rejects_size(j_max):
    """
    Test the accepted grid sizes.
    """
    with pytest.raises(ValueError):
        generate_grid(j_max=j_max)


def test_generate_grid_rejects_root():
    """
    Test that the root frequency must be positive.
    """
    with pytest.raises(ValueError):
        generate_grid(j_max=4, root=0.0)


def test_root_does_not_change_classification():
    """
    Test that moving the root leaves every cell's proportion unchanged.
    """
    low = generate_grid(j_max=7, root=110.0)
    high = generate_grid(j_max=7, root=440.0)
    assert [c.proportion for c in low.cells] == [c.proportion for c in high.cells]


def test_csv_output(grid):
    """
    Test the CSV rows read back with pandas.
    """
    frame = pd.read_csv(io.BytesIO(emit_grid(grid, "csv")), dtype=str, keep_default_na=False)
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) == 66
    row = frame[(frame["i"] == "4") & (frame["j"] == "7")].iloc[0]
    assert row["proportion"] == "4:5:6"
    assert row["class"] == "Major"
    assert float(row["pwe_main"]) == pytest.approx(2.302, abs=1e-3)
    assert row["near_symmetric"] == "false"
    assert row["consonant"] == "true"
    augmented = frame[(frame["i"] == "4") & (frame["j"] == "8")].iloc[0]
    assert augmented["class"] == "Symmetric"
    assert float(augmented["pwe_adjusted"]) == 0.0


def test_csv_unclassified_row(unresolved_grid):
    """
    Test that an unresolved cell keeps its coordinates and leaves the rest empty.
    """
    assert not unresolved_grid.cells[0].classified
    lines = CsvEmitter().emit(unresolved_grid).decode("ascii").splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "1,2,,Unclassified,,,,,"


def test_pixmap_output(grid):
    """
    Test the pixmap header and the color of the major triad cell.
    """
    tokens = emit_grid(grid, "image").decode("ascii").split()
    assert tokens[:4] == ["P3", "12", "12", "255"]
    pixels = tokens[4:]
    assert len(pixels) == 12 * 12 * 3

    def pixel(i, j):
        start = ((12 - i) * 12 + (j - 1)) * 3
        return tuple(int(v) for v in pixels[start : start + 3])

    adjusted = grid.cell(4, 7).analysis.pwe_adjusted
    fade = int(round(255 * (1 - min(abs(adjusted), 3.0) / 3.0)))
    assert pixel(4, 7) == (255, fade, fade)
    minor = grid.cell(3, 7).analysis.pwe_adjusted
    fade = int(round(255 * (1 - min(abs(minor), 3.0) / 3.0)))
    assert pixel(3, 7) == (fade, fade, 255)
    assert pixel(4, 8) == (160, 160, 160)
    assert pixel(7, 4) == (0, 0, 0)
    assert pixel(12, 12) == (0, 0, 0)


def test_pixmap_unclassified_is_white(unresolved_grid):
    """
    Test that unresolved cells are drawn white.
    """
    image = PixmapEmitter().raster(unresolved_grid)
    assert image.shape == (2, 2, 3)
    assert tuple(image[1, 1]) == (255, 255, 255)
    assert tuple(image[0, 0]) == (0, 0, 0)


def test_unsupported_format(grid):
    """
    Test that only csv and image are accepted.
    """
    with pytest.raises(ValueError):
        emit_grid(grid, "svg")
    with pytest.raises(ValueError):
        PixmapEmitter(clamp=0)


def test_unclassified_cell_logs_warning(caplog):
    """
    Test that an unresolved cell is reported at warning level.
    """
    cfg = RationalizeConfig(tolerance=0.001, max_term=4)
    with caplog.at_level(logging.WARNING, logger="chordmood"):
        cell = analyze_cell(1, 2, 261.63, cfg, AffectClassifier())
    assert not cell.classified
    assert "Cell (1, 2) left unclassified" in caplog.text
