"""
Shared fixtures: the two-component reference model used across the test suite.
"""

import pytest

from mivt.models import MivtModel
from mivt.seeds import NBCommonFactorSeed
from mivt.trawls import ExponentialTrawl

REFERENCE_LAMBDA = (2.157, 1.919)
REFERENCE_ALPHA = (95.161, 73.055)
REFERENCE_KAPPA = 0.812


@pytest.fixture(scope="session")
def reference_seed() -> NBCommonFactorSeed:
    """Fixture to provide the common-factor NB seed of the reference model."""
    return NBCommonFactorSeed(kappa=REFERENCE_KAPPA, alpha=list(REFERENCE_ALPHA))


@pytest.fixture(scope="session")
def reference_model(reference_seed: NBCommonFactorSeed) -> MivtModel:
    """Fixture to provide the bivariate exponential-trawl reference model."""
    return MivtModel(
        trawls=[ExponentialTrawl(lambda_=rate) for rate in REFERENCE_LAMBDA],
        seed=reference_seed,
    )
