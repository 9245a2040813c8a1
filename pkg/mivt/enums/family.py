from enum import Enum


class TrawlFamily(str, Enum):
    """Parametric trawl-function families."""

    EXPONENTIAL = "exponential"
    SUP_IG = "sup-ig"
    GAMMA_LM = "gamma-lm"
    GIG = "gig"
    SEASONAL_EXP = "seasonal-exp"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value


class SeedFamily(str, Enum):
    """Multivariate infinitely divisible integer seed families."""

    POISSON_FACTOR = "poisson-factor"
    NB_INDEPENDENT = "nb-independent"
    NB_COMMON = "nb-common"
    NB_COMMON_IDIO = "nb-common-idio"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value


_TRAWL_ALIASES = {
    "exp": TrawlFamily.EXPONENTIAL,
    "supig": TrawlFamily.SUP_IG,
    "gamma": TrawlFamily.GAMMA_LM,
    "seasonal": TrawlFamily.SEASONAL_EXP,
}


def parse_trawl_family(label: str) -> TrawlFamily:
    """Resolve a family name or its short CLI alias ("exp", "supig", "gamma", "seasonal")."""
    key = label.strip().lower()
    if key in _TRAWL_ALIASES:
        return _TRAWL_ALIASES[key]
    return TrawlFamily(key)
