from .csv_count_series_repository import CsvCountSeriesRepository

__all__ = ["CsvCountSeriesRepository"]
