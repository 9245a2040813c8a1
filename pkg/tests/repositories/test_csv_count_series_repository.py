"""
Tests for the CsvCountSeriesRepository.
"""

from pathlib import Path

import numpy as np
import pytest

from mivt.exceptions import DomainError
from mivt.models import CountSeries
from mivt.repositories import CsvCountSeriesRepository


@pytest.fixture
def series() -> CountSeries:
    """
    Fixture to provide a labelled bivariate series.
    """
    return CountSeries(delta=5.0, counts=[[2, 0, 7, 1], [1, 3, 0, 0]], labels=["subs", "dels"])


@pytest.fixture
def repository(tmp_path: Path) -> CsvCountSeriesRepository:
    """
    Fixture to provide a repository backed by a temporary file.
    """
    return CsvCountSeriesRepository(tmp_path / "counts.csv")


def test_save_and_load(repository: CsvCountSeriesRepository, series: CountSeries):
    """
    Test that a saved series loads back with the same counts, labels and grid step.
    """
    repository.save_series(series)
    loaded = repository.load_series()
    assert np.array_equal(loaded.counts, series.counts)
    assert loaded.labels == ["subs", "dels"]
    assert loaded.delta == pytest.approx(5.0)


def test_header_layout(repository: CsvCountSeriesRepository, series: CountSeries):
    repository.save_series(series)
    assert repository.path.read_text().splitlines()[0] == "t,subs,dels"


def test_resave_is_byte_identical(tmp_path: Path):
    """
    Test that loading and saving again reproduces the file exactly.
    """
    first = CsvCountSeriesRepository(tmp_path / "a.csv")
    second = CsvCountSeriesRepository(tmp_path / "b.csv")
    first.save_series(CountSeries(delta=1.0, counts=[[0, 4, 2, 9, 1]]))
    second.save_series(first.load_series())
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_origin_is_preserved(repository: CsvCountSeriesRepository):
    repository.save_series(CountSeries(delta=5.0, counts=[[1, 2, 3]], origin=1800.0))
    loaded = repository.load_series()
    assert loaded.origin == pytest.approx(1800.0)
    assert loaded.times().tolist() == pytest.approx([1800.0, 1805.0, 1810.0])


def test_single_row_needs_delta(tmp_path: Path):
    path = tmp_path / "one.csv"
    path.write_text("t,Y1\n0,4\n")
    with pytest.raises(DomainError):
        CsvCountSeriesRepository(path).load_series()
    assert CsvCountSeriesRepository(path, delta=2.0).load_series().delta == 2.0


def test_non_uniform_grid_is_rejected(tmp_path: Path):
    path = tmp_path / "gaps.csv"
    path.write_text("t,Y1\n0,1\n1,2\n3,0\n")
    with pytest.raises(DomainError):
        CsvCountSeriesRepository(path).load_series()


def test_missing_time_column_is_rejected(tmp_path: Path):
    path = tmp_path / "no_time.csv"
    path.write_text("Y1,Y2\n1,2\n3,4\n")
    with pytest.raises(DomainError):
        CsvCountSeriesRepository(path).load_series()


def test_negative_counts_are_rejected(tmp_path: Path):
    path = tmp_path / "negative.csv"
    path.write_text("t,Y1\n0,1\n1,-2\n")
    with pytest.raises(DomainError):
        CsvCountSeriesRepository(path).load_series()


@pytest.mark.parametrize("delta,origin", [(0.1, 1800.0), (1.0 / 3.0, None), (5.0, 34200.0)])
def test_grid_step_round_trips_exactly(tmp_path: Path, delta: float, origin: float | None):
    """
    Test that the recovered grid step and times are bit-for-bit those that were saved.
    """
    repository = CsvCountSeriesRepository(tmp_path / "exact.csv")
    saved = CountSeries(delta=delta, counts=[[3, 1, 4, 1, 5, 9, 2, 6]], origin=origin)
    repository.save_series(saved)
    loaded = repository.load_series()
    assert loaded.delta == delta
    assert loaded.origin == origin
    assert np.array_equal(loaded.times(), saved.times())
