"""
Interfaces for the mivt library.

This package contains abstract interfaces that define the contract for trawl
functions, seed laws and data sources.
"""

from .trawl_function import TrawlFunction
from .seed_law import SeedLaw
from .count_series_repository import CountSeriesRepository
from .event_repository import EventRepository

__all__ = [
    "TrawlFunction",
    "SeedLaw",
    "CountSeriesRepository",
    "EventRepository",
]
