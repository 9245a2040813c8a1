from .family import TrawlFamily, SeedFamily, parse_trawl_family

__all__ = [
    "TrawlFamily",
    "SeedFamily",
    "parse_trawl_family",
]
