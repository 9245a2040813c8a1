"""
Power-law (long memory) trawl obtained from a gamma mixing law.
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from mivt.interfaces.trawl_function import TrawlFunction


class GammaLMTrawl(BaseModel, TrawlFunction):
    """
    Gamma long-memory trawl function d(z) = (1 - z/alpha)^(-H).

    **Memory regimes:**
    - H in (1, 2]: stationary long memory, the ACF is not summable
    - H > 2: stationary short memory

    leb(A) = alpha / (H - 1) and r(h) = (1 + h/alpha)^(1 - H).
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={"example": {"family": "gamma-lm", "alpha": 1.0, "H": 2.0}},
    )

    family: Literal["gamma-lm"] = "gamma-lm"
    alpha: float = Field(..., gt=0, description="Time scale alpha")
    hurst: float = Field(..., alias="H", gt=1, description="Power-law exponent H > 1")

    @property
    def is_long_memory(self) -> bool:
        return self.hurst <= 2.0

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return (1.0 - z / self.alpha) ** (-self.hurst)

    def leb(self) -> float:
        return self.alpha / (self.hurst - 1.0)

    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        h = np.asarray(h, dtype=float)
        return (1.0 + h / self.alpha) ** (1.0 - self.hurst)

    def exit_time(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore"):
            inverse = self.alpha * (np.clip(u, 0.0, 1.0) ** (-1.0 / self.hurst) - 1.0)
        return np.where(u > 0, inverse, np.inf)

    def parameters(self) -> Dict[str, float]:
        return {"alpha": self.alpha, "H": self.hurst}

    def free_parameters(self) -> np.ndarray:
        return np.log([self.alpha, self.hurst - 1.0])

    @classmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "GammaLMTrawl":
        return cls(alpha=float(np.exp(theta[0])), hurst=float(1.0 + np.exp(theta[1])))

    @classmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        starts = []
        for excess in np.logspace(-1.0, 1.0, n_starts):
            starts.append(np.log([lag_scale * excess, excess]))
        return starts
