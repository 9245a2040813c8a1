"""
Aggregation of event timestamps into counts on half-open bins.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from mivt.exceptions import DomainError
from mivt.models.count_series import CountSeries

logger = logging.getLogger(__name__)


def bin_events(
    events: Sequence[ArrayLike],
    delta: float,
    start: float,
    end: float,
    labels: Optional[Sequence[str]] = None,
) -> CountSeries:
    """
    Count events per component in bins [start + k delta, start + (k + 1) delta).

    There are K = floor((end - start) / delta) bins; events before ``start`` or at
    or after ``start + K delta`` are discarded, so an event on a bin edge belongs to
    the later bin, also when rounding puts its quotient just below an integer.

    Args:
        events: One array of timestamps (seconds) per component
        delta: Bin width in seconds
        start: Start of the window
        end: End of the window
        labels: Component labels

    Returns:
        CountSeries with origin ``start``

    Raises:
        DomainError: If the window holds no complete bin or there are no components
    """
    if delta <= 0:
        raise DomainError(f"bin width must be positive, got {delta}")
    if not start < end:
        raise DomainError(f"empty window [{start}, {end})")
    n_bins = math.floor((end - start) / delta + 1e-9)
    if n_bins < 1:
        raise DomainError(f"window [{start}, {end}) is shorter than one bin of width {delta}")
    if not events:
        raise DomainError("no event components given")
    if not math.isclose(start + n_bins * delta, end, rel_tol=1e-12, abs_tol=1e-9):
        logger.warning("window [%g, %g) is not a whole number of bins; events after %g are dropped",
                       start, end, start + n_bins * delta)

    counts = np.zeros((len(events), n_bins), dtype=np.int64)
    for i, timestamps in enumerate(events):
        t = np.asarray(timestamps, dtype=float)
        index = np.floor((t - start) / delta + 1e-9).astype(np.int64)
        inside = (index >= 0) & (index < n_bins)
        counts[i] = np.bincount(index[inside], minlength=n_bins)
        logger.debug("component %d: %d of %d events inside the window", i, inside.sum(), t.size)
    return CountSeries(delta=delta, counts=counts, labels=list(labels or []), origin=start)
