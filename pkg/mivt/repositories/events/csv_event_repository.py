"""
CSV implementation of the EventRepository interface.
"""

from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from mivt.exceptions import DomainError
from mivt.interfaces.event_repository import EventRepository

TIMESTAMP_COLUMN = "timestamp"


class CsvEventRepository(EventRepository):
    """
    Event timestamps (seconds) read from a CSV file with a ``timestamp`` column.

    The component label defaults to the file stem, so ``subs.csv`` yields ``subs``.
    """

    def __init__(self, path: str | Path, label: Optional[str] = None):
        self._path = Path(path)
        self._label = label or self._path.stem

    @property
    def label(self) -> str:
        return self._label

    def load_timestamps(self) -> np.ndarray:
        """Reads, validates and sorts the timestamps."""
        frame = pd.read_csv(self._path)
        if TIMESTAMP_COLUMN not in frame.columns:
            raise DomainError(f"{self._path}: missing {TIMESTAMP_COLUMN!r} column")
        values = pd.to_numeric(frame[TIMESTAMP_COLUMN], errors="coerce").to_numpy(dtype=float)
        if not np.all(np.isfinite(values)):
            raise DomainError(f"{self._path}: timestamps must be finite numbers")
        return np.sort(values)
