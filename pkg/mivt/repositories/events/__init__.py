from .csv_event_repository import CsvEventRepository

__all__ = ["CsvEventRepository"]
