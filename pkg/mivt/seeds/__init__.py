"""
Multivariate integer-valued seed laws and their jump distributions.
"""

from typing import Annotated, Any, Optional, Union

import numpy as np
from pydantic import Field, TypeAdapter

from .cp_representation import CategoricalBlock, CpBlock, CpRepresentation, LogarithmicBlock, MlsdBlock
from .distributions import (
    log_pmf_mlsd,
    log_pmf_nb,
    modified_log_parameters,
    pmf_logarithmic,
    pmf_mlsd,
    pmf_modified_log,
    pmf_nb,
    sample_logarithmic,
    sample_mlsd,
)
from .nb_common_factor_seed import NBCommonFactorSeed, joint_pmf_nb_common
from .nb_common_idio_seed import NBCommonIdioSeed
from .nb_independent_seed import NBIndependentSeed
from .poisson_factor_seed import PoissonFactorSeed
from .seed_cumulants import SeedCumulants

SeedSpec = Annotated[
    Union[PoissonFactorSeed, NBIndependentSeed, NBCommonFactorSeed, NBCommonIdioSeed],
    Field(discriminator="family"),
]

_SEED_ADAPTER = TypeAdapter(SeedSpec)


def parse_seed(data: Any) -> SeedSpec:
    """Validate a mapping or JSON string into the matching seed class."""
    if isinstance(data, (str, bytes)):
        return _SEED_ADAPTER.validate_json(data)
    return _SEED_ADAPTER.validate_python(data)


def seed_cumulants(spec: SeedSpec) -> SeedCumulants:
    return spec.cumulants()


def cp_representation(spec: SeedSpec) -> CpRepresentation:
    return spec.cp_representation()


def sample_seed(spec: SeedSpec, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """Unit-area seed draw(s) composed from the compound Poisson blocks."""
    return spec.sample(rng, size)


__all__ = [
    "SeedSpec",
    "SeedCumulants",
    "CpBlock",
    "CpRepresentation",
    "MlsdBlock",
    "LogarithmicBlock",
    "CategoricalBlock",
    "PoissonFactorSeed",
    "NBIndependentSeed",
    "NBCommonFactorSeed",
    "NBCommonIdioSeed",
    "parse_seed",
    "seed_cumulants",
    "cp_representation",
    "sample_seed",
    "joint_pmf_nb_common",
    "pmf_mlsd",
    "log_pmf_mlsd",
    "sample_mlsd",
    "pmf_nb",
    "log_pmf_nb",
    "pmf_logarithmic",
    "sample_logarithmic",
    "modified_log_parameters",
    "pmf_modified_log",
]
