"""
Negative binomial seed with independent components.
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mivt.exceptions import InvalidParameterError
from mivt.interfaces.seed_law import SeedLaw

from .cp_representation import CpRepresentation, LogarithmicBlock
from .distributions import pmf_nb
from .seed_cumulants import SeedCumulants


class NBIndependentSeed(BaseModel, SeedLaw):
    """
    Independent components L'_i ~ NB(kappa_i, beta_i / (1 + beta_i)).

    Each component is a gamma-mixed Poisson with its own mixing variable, so all
    cross-covariances vanish. The compound Poisson form has one logarithmic block per
    component with rate kappa_i log(1 + beta_i).
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"family": "nb-independent", "kappa": [1.0, 0.5], "beta": [2.0, 3.0]}},
    )

    family: Literal["nb-independent"] = "nb-independent"
    kappa: List[float] = Field(..., min_length=1, description="Shapes kappa_i > 0")
    beta: List[float] = Field(..., min_length=1, description="Scales beta_i > 0")

    @model_validator(mode="after")
    def check_parameters(self) -> "NBIndependentSeed":
        if len(self.kappa) != len(self.beta):
            raise InvalidParameterError("kappa and beta must have one entry per component")
        if any(v <= 0 for v in [*self.kappa, *self.beta]):
            raise InvalidParameterError("kappa and beta must be strictly positive")
        return self

    @property
    def dimension(self) -> int:
        return len(self.kappa)

    def parameters(self) -> Dict[str, float]:
        named = {f"kappa_{i + 1}": k for i, k in enumerate(self.kappa)}
        named.update({f"beta_{i + 1}": b for i, b in enumerate(self.beta)})
        return named

    def cumulants(self) -> SeedCumulants:
        kappa, beta = np.asarray(self.kappa), np.asarray(self.beta)
        mean = kappa * beta
        variance = mean * (1.0 + beta)
        return SeedCumulants(mean=mean.tolist(), variance=variance.tolist(),
                             covariance=np.diag(variance).tolist())

    def cp_representation(self) -> CpRepresentation:
        blocks = [
            LogarithmicBlock(rate=k * np.log1p(b), dimension=self.dimension, component=i, p=b / (1.0 + b))
            for i, (k, b) in enumerate(zip(self.kappa, self.beta))
        ]
        return CpRepresentation(blocks=blocks)

    def pgf(self, t: ArrayLike) -> float:
        t = self._pgf_argument(t)
        kappa, beta = np.asarray(self.kappa), np.asarray(self.beta)
        return float(np.prod((1.0 - beta * (t - 1.0)) ** -kappa))

    def marginal_pmf(self, component: int, x: ArrayLike, scale: float = 1.0) -> np.ndarray:
        b = self.beta[component]
        return pmf_nb(scale * self.kappa[component], b / (1.0 + b), x)
