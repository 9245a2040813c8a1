"""
Tests for the CsvEventRepository.
"""

from pathlib import Path

import numpy as np
import pytest

from mivt.exceptions import DomainError
from mivt.repositories import CsvEventRepository


@pytest.fixture
def events_file(tmp_path: Path) -> Path:
    """
    Fixture to provide an unsorted timestamp file with an extra column.
    """
    path = tmp_path / "subs.csv"
    path.write_text("timestamp,size\n4.9,100\n0.1,50\n5.2,10\n")
    return path


def test_timestamps_are_sorted(events_file: Path):
    """
    Test that timestamps load in increasing order.
    """
    assert np.array_equal(CsvEventRepository(events_file).load_timestamps(), [0.1, 4.9, 5.2])


def test_label_defaults_to_file_stem(events_file: Path):
    assert CsvEventRepository(events_file).label == "subs"
    assert CsvEventRepository(events_file, label="submissions").label == "submissions"


def test_missing_timestamp_column_is_rejected(tmp_path: Path):
    path = tmp_path / "bad.csv"
    path.write_text("time\n1.0\n")
    with pytest.raises(DomainError):
        CsvEventRepository(path).load_timestamps()


def test_non_numeric_timestamps_are_rejected(tmp_path: Path):
    path = tmp_path / "text.csv"
    path.write_text("timestamp\n1.0\nnoon\n")
    with pytest.raises(DomainError):
        CsvEventRepository(path).load_timestamps()
