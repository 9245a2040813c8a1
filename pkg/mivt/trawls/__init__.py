"""
Parametric trawl-function families and their pairwise autocorrelators.

``TrawlSpec`` is the tagged union of the five families, discriminated on the
``family`` field, so a JSON object such as ``{"family": "gamma-lm", "alpha": 1, "H": 2}``
validates straight into the right class.
"""

from typing import Annotated, Any, Union

import numpy as np
from numpy.typing import ArrayLike
from pydantic import Field, TypeAdapter

from .autocorrelator import autocorrelator, exponential_pair_overlap
from .exponential_trawl import ExponentialTrawl
from .gamma_trawl import GammaLMTrawl
from .gig_trawl import GIGTrawl
from .seasonal_trawl import SeasonalExpTrawl
from .sup_ig_trawl import SupIGTrawl

TrawlSpec = Annotated[
    Union[ExponentialTrawl, SupIGTrawl, GammaLMTrawl, GIGTrawl, SeasonalExpTrawl],
    Field(discriminator="family"),
]

_TRAWL_ADAPTER = TypeAdapter(TrawlSpec)

TRAWL_CLASSES = {
    "exponential": ExponentialTrawl,
    "sup-ig": SupIGTrawl,
    "gamma-lm": GammaLMTrawl,
    "gig": GIGTrawl,
    "seasonal-exp": SeasonalExpTrawl,
}


def parse_trawl(data: Any) -> TrawlSpec:
    """Validate a mapping or JSON string into the matching trawl class."""
    if isinstance(data, (str, bytes)):
        return _TRAWL_ADAPTER.validate_json(data)
    return _TRAWL_ADAPTER.validate_python(data)


def eval_trawl(spec: TrawlSpec, z: ArrayLike) -> np.ndarray:
    """d(z) for z <= 0."""
    return spec.eval(z)


def leb_A(spec: TrawlSpec) -> float:
    """Lebesgue measure of the trawl set."""
    return spec.leb()


def acf(spec: TrawlSpec, h: ArrayLike) -> np.ndarray:
    """Theoretical autocorrelation r(h)."""
    return spec.acf(h)


__all__ = [
    "TrawlSpec",
    "TRAWL_CLASSES",
    "ExponentialTrawl",
    "SupIGTrawl",
    "GammaLMTrawl",
    "GIGTrawl",
    "SeasonalExpTrawl",
    "parse_trawl",
    "eval_trawl",
    "leb_A",
    "acf",
    "autocorrelator",
    "exponential_pair_overlap",
]
