"""
Negative binomial seed with dependence through one common gamma factor.
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.special import gammaln

from mivt.exceptions import DomainError, InvalidParameterError
from mivt.interfaces.seed_law import SeedLaw

from .cp_representation import CpRepresentation, MlsdBlock
from .distributions import pmf_nb
from .seed_cumulants import SeedCumulants


class NBCommonFactorSeed(BaseModel, SeedLaw):
    """
    Common-factor negative binomial seed.

    L'_i | U ~ Poisson(alpha_i U) independently with U ~ Gamma(kappa, 1). The joint law
    is negative multinomial, the marginals are NB(kappa, alpha_i / (1 + alpha_i)) and
    the pgf is (1 - sum alpha_i (t_i - 1))^(-kappa).

    **Key Features:**
    - mean_i = kappa alpha_i, var_i = kappa alpha_i (1 + alpha_i)
    - kappa_ij = kappa alpha_i alpha_j
    - a single dependent compound Poisson block with MLSD jumps

    **Usage Examples:**
    ```python
    seed = NBCommonFactorSeed(kappa=0.812, alpha=[95.161, 73.055])
    seed.cp_representation().rate   # 0.812 * log(1 + 168.216)
    seed.joint_pmf([0, 0])          # (1 + 168.216) ** -0.812
    ```
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"family": "nb-common", "kappa": 0.812, "alpha": [95.161, 73.055]}},
    )

    family: Literal["nb-common"] = "nb-common"
    kappa: float = Field(..., gt=0, description="Shape of the common gamma factor")
    alpha: List[float] = Field(..., min_length=1, description="Loadings alpha_i > 0")

    @field_validator("alpha")
    @classmethod
    def check_alpha(cls, v: List[float]) -> List[float]:
        if any(a <= 0 for a in v):
            raise InvalidParameterError("loadings alpha_i must be strictly positive")
        return v

    @property
    def dimension(self) -> int:
        return len(self.alpha)

    def parameters(self) -> Dict[str, float]:
        named = {"kappa": self.kappa}
        named.update({f"alpha_{i + 1}": a for i, a in enumerate(self.alpha)})
        return named

    def cumulants(self) -> SeedCumulants:
        alpha = np.asarray(self.alpha)
        mean = self.kappa * alpha
        cov = self.kappa * np.outer(alpha, alpha)
        variance = mean * (1.0 + alpha)
        np.fill_diagonal(cov, variance)
        return SeedCumulants(mean=mean.tolist(), variance=variance.tolist(), covariance=cov.tolist())

    def cp_representation(self) -> CpRepresentation:
        total = float(sum(self.alpha))
        block = MlsdBlock(rate=self.kappa * np.log1p(total), p=[a / (1.0 + total) for a in self.alpha])
        return CpRepresentation(blocks=[block])

    def pgf(self, t: ArrayLike) -> float:
        t = self._pgf_argument(t)
        return float((1.0 - np.dot(self.alpha, t - 1.0)) ** -self.kappa)

    def marginal_pmf(self, component: int, x: ArrayLike, scale: float = 1.0) -> np.ndarray:
        a = self.alpha[component]
        return pmf_nb(scale * self.kappa, a / (1.0 + a), x)

    def log_joint_pmf(self, x: ArrayLike) -> float:
        """log P(L' = x) of the negative multinomial law."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise DomainError(f"count vector needs {self.dimension} components, got shape {x.shape}")
        if np.any(x < 0):
            raise DomainError("counts must be non-negative")
        alpha = np.asarray(self.alpha)
        log_total = np.log1p(alpha.sum())
        return float(
            gammaln(self.kappa + x.sum())
            - gammaln(self.kappa)
            - gammaln(x + 1).sum()
            + np.dot(x, np.log(alpha) - log_total)
            - self.kappa * log_total
        )

    def joint_pmf(self, x: ArrayLike) -> float:
        return float(np.exp(self.log_joint_pmf(x)))


def joint_pmf_nb_common(spec: NBCommonFactorSeed, x: ArrayLike) -> float:
    """
    Gamma(kappa + sum x) / (Gamma(kappa) prod x_i!) prod (alpha_i / (1 + alpha))^x_i (1 + alpha)^-kappa.
    """
    return spec.joint_pmf(x)
