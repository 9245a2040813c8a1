"""
Negative binomial seed with a common factor plus independent idiosyncratic factors.
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mivt.exceptions import InvalidParameterError
from mivt.interfaces.seed_law import SeedLaw

from .cp_representation import CpRepresentation, LogarithmicBlock, MlsdBlock
from .distributions import pmf_nb
from .seed_cumulants import SeedCumulants


class NBCommonIdioSeed(BaseModel, SeedLaw):
    """
    L'_i | U, V_i ~ Poisson(alpha_i (U + V_i)), U ~ Gamma(kappa, 1), V_i ~ Gamma(kappa_i, 1).

    The idiosyncratic factor V_i shares the scale alpha_i of the common loading, so the
    marginal of component i is NB(kappa + kappa_i, alpha_i / (1 + alpha_i)) while
    kappa_ij = kappa alpha_i alpha_j as in the pure common-factor model. kappa_i = 0
    switches the idiosyncratic factor of component i off.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"family": "nb-common-idio", "kappa": 0.5, "alpha": [2.0, 3.0], "kappa_idio": [0.3, 0.0]}
        },
    )

    family: Literal["nb-common-idio"] = "nb-common-idio"
    kappa: float = Field(..., gt=0, description="Shape of the common gamma factor")
    alpha: List[float] = Field(..., min_length=1, description="Loadings alpha_i > 0")
    kappa_idio: List[float] = Field(..., min_length=1, description="Idiosyncratic shapes kappa_i >= 0")

    @model_validator(mode="after")
    def check_parameters(self) -> "NBCommonIdioSeed":
        if len(self.alpha) != len(self.kappa_idio):
            raise InvalidParameterError("alpha and kappa_idio must have one entry per component")
        if any(a <= 0 for a in self.alpha):
            raise InvalidParameterError("loadings alpha_i must be strictly positive")
        if any(k < 0 for k in self.kappa_idio):
            raise InvalidParameterError("idiosyncratic shapes must be non-negative")
        return self

    @property
    def dimension(self) -> int:
        return len(self.alpha)

    def parameters(self) -> Dict[str, float]:
        named = {"kappa": self.kappa}
        named.update({f"alpha_{i + 1}": a for i, a in enumerate(self.alpha)})
        named.update({f"kappa_{i + 1}": k for i, k in enumerate(self.kappa_idio)})
        return named

    def cumulants(self) -> SeedCumulants:
        alpha = np.asarray(self.alpha)
        shape = self.kappa + np.asarray(self.kappa_idio)
        mean = shape * alpha
        variance = mean * (1.0 + alpha)
        cov = self.kappa * np.outer(alpha, alpha)
        np.fill_diagonal(cov, variance)
        return SeedCumulants(mean=mean.tolist(), variance=variance.tolist(), covariance=cov.tolist())

    def cp_representation(self) -> CpRepresentation:
        total = float(sum(self.alpha))
        blocks = [MlsdBlock(rate=self.kappa * np.log1p(total), p=[a / (1.0 + total) for a in self.alpha])]
        blocks.extend(
            LogarithmicBlock(rate=k * np.log1p(a), dimension=self.dimension, component=i, p=a / (1.0 + a))
            for i, (k, a) in enumerate(zip(self.kappa_idio, self.alpha))
            if k > 0
        )
        return CpRepresentation(blocks=blocks)

    def pgf(self, t: ArrayLike) -> float:
        t = self._pgf_argument(t)
        alpha = np.asarray(self.alpha)
        common = (1.0 - np.dot(alpha, t - 1.0)) ** -self.kappa
        idio = np.prod((1.0 - alpha * (t - 1.0)) ** -np.asarray(self.kappa_idio))
        return float(common * idio)

    def marginal_pmf(self, component: int, x: ArrayLike, scale: float = 1.0) -> np.ndarray:
        a = self.alpha[component]
        return pmf_nb(scale * (self.kappa + self.kappa_idio[component]), a / (1.0 + a), x)
