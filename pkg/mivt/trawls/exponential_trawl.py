"""
Exponential trawl function d(z) = exp(lambda z).
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from mivt.interfaces.trawl_function import TrawlFunction


class ExponentialTrawl(BaseModel, TrawlFunction):
    """
    Exponential trawl function, the short-memory workhorse of the package.

    **Key Features:**
    - d(z) = exp(lambda z), d(0) = 1, monotone
    - leb(A) = 1 / lambda
    - r(h) = exp(-lambda h)
    - Closed-form exit time -log(u) / lambda used by the simulator

    **Usage Examples:**
    ```python
    trawl = ExponentialTrawl(lambda_=2.157)
    trawl.leb()            # 0.46361...
    trawl.acf([1.0, 2.0])  # exp(-2.157), exp(-4.314)

    # JSON form
    ExponentialTrawl.model_validate_json('{"family": "exponential", "lambda": 2.157}')
    ```
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={
            "example": {"family": "exponential", "lambda": 2.157},
            "description": "Exponential trawl function d(z) = exp(lambda z)",
        },
    )

    family: Literal["exponential"] = "exponential"
    lambda_: float = Field(..., alias="lambda", gt=0, description="Decay rate per unit time")

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return np.exp(self.lambda_ * z)

    def leb(self) -> float:
        return 1.0 / self.lambda_

    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        return np.exp(-self.lambda_ * np.asarray(h, dtype=float))

    def exit_time(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore"):
            return np.where(u > 0, -np.log(np.clip(u, 0.0, 1.0)) / self.lambda_, np.inf)

    def parameters(self) -> Dict[str, float]:
        return {"lambda": self.lambda_}

    def free_parameters(self) -> np.ndarray:
        return np.array([np.log(self.lambda_)])

    @classmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "ExponentialTrawl":
        return cls(lambda_=float(np.exp(theta[0])))

    @classmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        rates = np.logspace(-1.0, 1.0, n_starts) / lag_scale
        return [np.array([np.log(rate)]) for rate in rates]
