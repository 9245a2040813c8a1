"""
Event repository interface.

Defines the contract for reading raw event timestamps, one component per source.
"""

from abc import ABC, abstractmethod

import numpy as np


class EventRepository(ABC):
    """
    Abstract interface for event timestamp sources.

    **Key Operations:**
    - Load the sorted timestamps of one component
    - Name the component the source describes
    """

    @property
    @abstractmethod
    def label(self) -> str:
        """Component label used as the column header of binned counts."""
        pass

    @abstractmethod
    def load_timestamps(self) -> np.ndarray:
        """
        Load event timestamps in seconds.

        Returns:
            Finite timestamps sorted in non-decreasing order

        Raises:
            OSError: If the source cannot be read
            DomainError: If timestamps are missing, non-numeric or not finite
        """
        pass
