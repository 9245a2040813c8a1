"""
Seasonally modulated exponential trawl function.
"""

from typing import ClassVar, Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from mivt.exceptions import DomainError
from mivt.interfaces.trawl_function import TrawlFunction
from mivt.numerics.quadrature import DEFAULT_EPS_QUAD, trawl_overlap


class SeasonalExpTrawl(BaseModel, TrawlFunction):
    """
    Seasonal trawl function d(z) = 1/2 exp(lambda z) [cos(a z) + 1], a = 2 pi psi.

    The function is not monotone, so the set overlap leb(A cap A_h) is not the
    integral of the shifted profile. :meth:`profile_acf` keeps the closed form of
    int_{-inf}^{-h} d(s) ds / leb(A), while :meth:`acf` integrates the true overlap
    min{d(s), d(s - h)} numerically; the latter is what a simulated path exhibits.

    **Usage Examples:**
    ```python
    trawl = SeasonalExpTrawl(lambda_=1.0, psi=0.25)
    trawl.leb()          # (2 + a^2) / (2 (1 + a^2)), a = pi / 2
    trawl.acf([0, 1, 2]) # oscillating, |r(h)| <= 1
    ```
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={"example": {"family": "seasonal-exp", "lambda": 1.0, "psi": 0.25}},
    )

    is_monotone: ClassVar[bool] = False

    family: Literal["seasonal-exp"] = "seasonal-exp"
    lambda_: float = Field(..., alias="lambda", gt=0, description="Decay rate of the envelope")
    psi: float = Field(..., description="Season parameter, a = 2 pi psi")
    eps_quad: float = Field(DEFAULT_EPS_QUAD, gt=0, lt=1, exclude=True,
                            description="Truncation level for the overlap quadrature")

    @property
    def frequency(self) -> float:
        return 2.0 * np.pi * self.psi

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return 0.5 * np.exp(self.lambda_ * z) * (np.cos(self.frequency * z) + 1.0)

    def leb(self) -> float:
        lam, a = self.lambda_, self.frequency
        return (2.0 * lam**2 + a**2) / (2.0 * lam * (lam**2 + a**2))

    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        h = np.asarray(h, dtype=float)
        lam, a = self.lambda_, self.frequency
        bracket = lam**2 * np.cos(a * h) - a * lam * np.sin(a * h) + lam**2 + a**2
        return np.exp(-lam * h) * bracket / (2.0 * lam**2 + a**2)

    def acf(self, h: ArrayLike) -> np.ndarray:
        h = np.asarray(h, dtype=float)
        if np.any(h < 0):
            raise DomainError("acf requires non-negative lags")
        leb = self.leb()
        values = [
            1.0 if lag == 0 else trawl_overlap(self, self, float(lag), self.eps_quad) / leb
            for lag in h.ravel()
        ]
        return np.asarray(values).reshape(h.shape)

    def envelope_cutoff(self, eps: float) -> float:
        # d(z) <= exp(lambda z)
        return float(np.log(1.0 / eps) / self.lambda_)

    def exit_time(self, u: ArrayLike) -> np.ndarray:
        raise DomainError("exit times are defined for monotone trawl functions only")

    def parameters(self) -> Dict[str, float]:
        return {"lambda": self.lambda_, "psi": self.psi}

    def free_parameters(self) -> np.ndarray:
        return np.array([np.log(self.lambda_), self.psi])

    @classmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "SeasonalExpTrawl":
        return cls(lambda_=float(np.exp(theta[0])), psi=float(theta[1]))

    @classmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        rate = 1.0 / lag_scale
        return [
            np.array([np.log(rate), psi / lag_scale])
            for psi in np.linspace(0.05, 0.5, n_starts)
        ]
