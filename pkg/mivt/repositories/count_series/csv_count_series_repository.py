"""
CSV implementation of the CountSeriesRepository interface.
"""

from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from mivt.exceptions import DomainError
from mivt.interfaces.count_series_repository import CountSeriesRepository
from mivt.models.count_series import CountSeries

TIME_COLUMN = "t"


class CsvCountSeriesRepository(CountSeriesRepository):
    """
    Count series stored as CSV with header ``t,<label1>,...,<labeln>``.

    Each row is one grid point; ``t`` is the grid time k Delta (shifted by the origin
    when the series has one). Delta is recovered from the spacing of ``t``; a
    single-row file needs ``delta`` passed explicitly. Times are
    read back at full precision so the recovered step reproduces the saved grid.
    """

    def __init__(self, path: str | Path, delta: Optional[float] = None):
        self._path = Path(path)
        self._delta = delta

    @property
    def path(self) -> Path:
        return self._path

    def save_series(self, series: CountSeries) -> None:
        """Writes the series with one row per grid point."""
        frame = pd.DataFrame(series.counts.T, columns=series.labels)
        frame.insert(0, TIME_COLUMN, series.times())
        frame.to_csv(self._path, index=False)

    def load_series(self) -> CountSeries:
        """Reads the series and validates counts and grid spacing."""
        frame = pd.read_csv(self._path, float_precision="round_trip")
        if frame.columns.empty or frame.columns[0] != TIME_COLUMN:
            raise DomainError(f"{self._path}: first column must be {TIME_COLUMN!r}")
        if frame.shape[1] < 2 or frame.empty:
            raise DomainError(f"{self._path}: no count columns or no rows")
        times = frame[TIME_COLUMN].to_numpy(dtype=float)
        delta = self._grid_step(times)
        counts = frame.drop(columns=TIME_COLUMN)
        if counts.isna().to_numpy().any():
            raise DomainError(f"{self._path}: missing counts")
        origin = float(times[0]) if times[0] != 0 else None
        try:
            return CountSeries(delta=delta, counts=counts.to_numpy().T,
                               labels=[str(c) for c in counts.columns], origin=origin)
        except ValueError as exc:
            raise DomainError(f"{self._path}: {exc}") from exc

    def _grid_step(self, times: np.ndarray) -> float:
        if times.size < 2:
            if self._delta is None:
                raise DomainError(f"{self._path}: a single row needs an explicit delta")
            return self._delta
        steps = np.diff(times)
        delta = self._exact_step(times)
        if delta <= 0 or np.max(np.abs(steps - delta)) > 1e-6 * delta:
            raise DomainError(f"{self._path}: time column is not an increasing uniform grid")
        if self._delta is not None and abs(self._delta - delta) > 1e-6 * delta:
            raise DomainError(f"{self._path}: grid step {delta:g} differs from delta={self._delta:g}")
        return self._delta if self._delta is not None else delta

    @staticmethod
    def _exact_step(times: np.ndarray) -> float:
        """
        The shortest step that regenerates ``times`` as t_0 + k Delta bit for bit.

        Falls back to the average spacing when no candidate reproduces the column.
        """
        span = float(times[-1] - times[0]) / (times.size - 1)
        grid = np.arange(times.size)
        candidates = [float(f"{span:.{digits}g}") for digits in range(1, 18)]
        candidates += [float(np.nextafter(span, -np.inf)), float(np.nextafter(span, np.inf))]
        for candidate in candidates:
            if np.array_equal(times[0] + candidate * grid, times):
                return candidate
        return span
