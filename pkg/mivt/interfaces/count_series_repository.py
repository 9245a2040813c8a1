"""
Count series repository interface.

Defines the contract for persisting gridded multivariate count series.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from mivt.models.count_series import CountSeries


class CountSeriesRepository(ABC):
    """
    Abstract interface for count series storage.

    **Key Operations:**
    - Save a count series
    - Load a count series
    """

    @abstractmethod
    def save_series(self, series: "CountSeries") -> None:
        """
        Persist a count series.

        Args:
            series: The series to store

        Raises:
            OSError: If the underlying storage cannot be written
        """
        pass

    @abstractmethod
    def load_series(self) -> "CountSeries":
        """
        Load the stored count series.

        Returns:
            The series, with Delta recovered from the time column

        Raises:
            OSError: If the underlying storage cannot be read
            DomainError: If the stored data is not a valid count series
        """
        pass
