"""
Superposition of exponentials mixed over an inverse Gaussian law (sup-IG trawl).
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from mivt.exceptions import InfiniteTrawlMeasureError
from mivt.interfaces.trawl_function import TrawlFunction


class SupIGTrawl(BaseModel, TrawlFunction):
    """
    sup-IG trawl function.

    d(z) = (1 - 2z/gamma^2)^(-1/2) exp(delta gamma (1 - sqrt(1 - 2z/gamma^2))),
    leb(A) = gamma / delta and r(h) = exp(delta gamma (1 - sqrt(1 + 2h/gamma^2))).

    gamma must be strictly positive for d to be defined at the origin; delta = 0 is
    accepted but gives an infinite trawl set, which :meth:`leb` reports.
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={"example": {"family": "sup-ig", "delta": 1.0, "gamma": 2.0}},
    )

    family: Literal["sup-ig"] = "sup-ig"
    delta: float = Field(..., ge=0, description="IG shape parameter delta")
    gamma: float = Field(..., gt=0, description="IG scale parameter gamma")

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        root = np.sqrt(1.0 - 2.0 * z / self.gamma**2)
        return np.exp(self.delta * self.gamma * (1.0 - root)) / root

    def leb(self) -> float:
        if self.delta == 0:
            raise InfiniteTrawlMeasureError("sup-IG trawl with delta = 0 has infinite measure")
        return self.gamma / self.delta

    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        h = np.asarray(h, dtype=float)
        return np.exp(self.delta * self.gamma * (1.0 - np.sqrt(1.0 + 2.0 * h / self.gamma**2)))

    def parameters(self) -> Dict[str, float]:
        return {"delta": self.delta, "gamma": self.gamma}

    def free_parameters(self) -> np.ndarray:
        return np.log([self.delta, self.gamma])

    @classmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "SupIGTrawl":
        delta, gamma = np.exp(theta)
        return cls(delta=float(delta), gamma=float(gamma))

    @classmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        # shape c = delta * gamma on a log grid, leb = gamma / delta pinned to lag_scale
        starts = []
        for shape in np.logspace(-1.0, 1.0, n_starts):
            gamma = np.sqrt(shape * lag_scale)
            delta = np.sqrt(shape / lag_scale)
            starts.append(np.log([delta, gamma]))
        return starts
