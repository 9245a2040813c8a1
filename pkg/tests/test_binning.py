"""
Tests for the event binning.
"""

import logging

import numpy as np
import pytest

from mivt.binning import bin_events
from mivt.exceptions import DomainError


def test_reference_binning():
    """
    Test that events (0.1, 4.9, 5.2) in [0, 10) with width 5 give counts (2, 1).
    """
    series = bin_events([[0.1, 4.9, 5.2]], delta=5.0, start=0.0, end=10.0)
    assert series.counts.tolist() == [[2, 1]]
    assert series.origin == 0.0


def test_edge_event_belongs_to_later_bin():
    series = bin_events([[5.0]], delta=5.0, start=0.0, end=10.0)
    assert series.counts.tolist() == [[0, 1]]


def test_trading_day_bin_count():
    """A 9:30 to 16:00 window in five-second bins has 4680 bins; 10:00 to 15:30 has 3960."""
    assert bin_events([[]], delta=5.0, start=34200.0, end=57600.0).length == 4680
    assert bin_events([[]], delta=5.0, start=36000.0, end=55800.0).length == 3960


def test_events_outside_window_are_dropped():
    series = bin_events([[-1.0, 0.0, 9.99, 10.0, 12.0]], delta=5.0, start=0.0, end=10.0)
    assert series.counts.sum() == 2


def test_counts_are_conserved():
    """
    Test that every event inside a whole-bin window is counted exactly once.
    """
    rng = np.random.default_rng(0)
    events = [rng.uniform(0.0, 600.0, 5000), rng.uniform(0.0, 600.0, 300)]
    series = bin_events(events, delta=5.0, start=0.0, end=600.0, labels=["a", "b"])
    assert series.counts.sum(axis=1).tolist() == [5000, 300]
    assert series.labels == ["a", "b"]


def test_partial_last_bin_warns(caplog: pytest.LogCaptureFixture):
    with caplog.at_level(logging.WARNING, logger="mivt.binning"):
        series = bin_events([[1.0, 11.0]], delta=5.0, start=0.0, end=12.0)
    assert series.length == 2
    assert series.counts.sum() == 1
    assert "dropped" in caplog.text


@pytest.mark.parametrize(
    "delta,start,end",
    [(5.0, 10.0, 10.0), (5.0, 0.0, 4.0), (0.0, 0.0, 10.0)],
)
def test_invalid_windows_are_rejected(delta: float, start: float, end: float):
    with pytest.raises(DomainError):
        bin_events([[1.0]], delta=delta, start=start, end=end)


def test_edge_event_with_inexact_width_belongs_to_later_bin():
    """
    Test that t = 0.3 with start 0.1 and width 0.1 lands in the bin starting at 0.3.
    """
    series = bin_events([[0.3]], delta=0.1, start=0.1, end=0.5)
    assert series.counts.tolist() == [[0, 0, 1, 0]]


def test_decimal_edges_each_open_a_bin():
    series = bin_events([[0.1 * k for k in range(1, 10)]], delta=0.1, start=0.0, end=1.0)
    assert series.counts.tolist() == [[0] + [1] * 9]
