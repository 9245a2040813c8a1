from .count_series import CsvCountSeriesRepository
from .events import CsvEventRepository

__all__ = ["CsvCountSeriesRepository", "CsvEventRepository"]
