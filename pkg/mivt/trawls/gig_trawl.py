"""
Trawl function from a generalised inverse Gaussian (GIG) mixing density.
"""

from typing import Dict, List, Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.special import gammaln

from mivt.exceptions import InfiniteTrawlMeasureError, InvalidParameterError
from mivt.interfaces.trawl_function import TrawlFunction
from mivt.numerics.bessel import bessel_k_ratio, log_bessel_k

MAX_DELTA_GAMMA = 700.0


def _bessel_profile(order: float, x: np.ndarray) -> np.ndarray:
    """2^(1-m) / Gamma(m) x^m K_m(x), continuous at x = 0 where it equals one."""
    x = np.asarray(x, dtype=float)
    positive = np.where(x > 0, x, 1.0)
    log_value = (1.0 - order) * np.log(2.0) - gammaln(order) + order * np.log(positive)
    log_value = log_value + log_bessel_k(order, positive)
    return np.where(x > 0, np.exp(log_value), 1.0)


class GIGTrawl(BaseModel, TrawlFunction):
    """
    GIG trawl function.

    With y(z) = sqrt(1 - 2z/gamma^2):

    - d(z) = y^(-nu) K_nu(delta gamma y) / K_nu(delta gamma)
    - leb(A) = (gamma/delta) K_{nu-1}(delta gamma) / K_nu(delta gamma)
    - r(h) = K_{nu-1}(delta sqrt(gamma^2 + 2h)) / K_{nu-1}(delta gamma) (1 + 2h/gamma^2)^((1-nu)/2)

    nu = 1/2 reproduces the sup-IG trawl. delta * gamma is capped at 700 to keep the
    Bessel ratios inside double range.

    The boundary cases are the limits of these formulas:

    - delta = 0 (gamma mixing, nu > 0): d(z) = (1 - 2z/gamma^2)^(-nu), the gamma trawl
      with alpha = gamma^2 / 2 and H = nu; the set is finite only for nu > 1.
    - gamma = 0 (inverse gamma mixing, nu < 0): with m = -nu and x = delta sqrt(-2z),
      d(z) = 2^(1-m) / Gamma(m) x^m K_m(x) and leb(A) = 2m / delta^2.
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={"example": {"family": "gig", "nu": 0.5, "delta": 1.0, "gamma": 2.0}},
    )

    family: Literal["gig"] = "gig"
    nu: float = Field(..., description="GIG index nu")
    delta: float = Field(..., ge=0, description="GIG parameter delta")
    gamma: float = Field(..., ge=0, description="GIG parameter gamma")

    @model_validator(mode="after")
    def validate_parameters(self) -> "GIGTrawl":
        """Reject a degenerate mixing law and delta * gamma beyond the supported Bessel range."""
        if self.delta == 0 and self.gamma == 0:
            raise InvalidParameterError("delta and gamma must not both be zero")
        if self.delta == 0 and self.nu <= 0:
            raise InvalidParameterError("delta = 0 needs nu > 0")
        if self.gamma == 0 and self.nu >= 0:
            raise InvalidParameterError("gamma = 0 needs nu < 0")
        if self.delta * self.gamma > MAX_DELTA_GAMMA:
            raise InvalidParameterError(f"delta * gamma must not exceed {MAX_DELTA_GAMMA}")
        return self

    @property
    def _shape(self) -> float:
        return self.delta * self.gamma

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        if self.delta == 0:
            return (1.0 - 2.0 * z / self.gamma**2) ** (-self.nu)
        if self.gamma == 0:
            return _bessel_profile(-self.nu, self.delta * np.sqrt(-2.0 * z))
        y = np.sqrt(1.0 - 2.0 * z / self.gamma**2)
        return y ** (-self.nu) * bessel_k_ratio(self.nu, self._shape * y, self._shape)

    def leb(self) -> float:
        if self.delta == 0:
            if self.nu <= 1:
                raise InfiniteTrawlMeasureError(f"GIG trawl with delta = 0 and nu = {self.nu} <= 1 has infinite measure")
            return self.gamma**2 / (2.0 * (self.nu - 1.0))
        if self.gamma == 0:
            return -2.0 * self.nu / self.delta**2
        log_ratio = log_bessel_k(self.nu - 1.0, self._shape) - log_bessel_k(self.nu, self._shape)
        return float(self.gamma / self.delta * np.exp(log_ratio))

    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        h = np.asarray(h, dtype=float)
        if self.delta == 0:
            return (1.0 + 2.0 * h / self.gamma**2) ** (1.0 - self.nu)
        if self.gamma == 0:
            return _bessel_profile(1.0 - self.nu, self.delta * np.sqrt(2.0 * h))
        stretch = 1.0 + 2.0 * h / self.gamma**2
        ratio = bessel_k_ratio(self.nu - 1.0, self._shape * np.sqrt(stretch), self._shape)
        return ratio * stretch ** (0.5 * (1.0 - self.nu))

    def parameters(self) -> Dict[str, float]:
        return {"nu": self.nu, "delta": self.delta, "gamma": self.gamma}

    def free_parameters(self) -> np.ndarray:
        return np.array([self.nu, np.log(self.delta), np.log(self.gamma)])

    @classmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "GIGTrawl":
        return cls(nu=float(theta[0]), delta=float(np.exp(theta[1])), gamma=float(np.exp(theta[2])))

    @classmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        starts = []
        for nu, shape in zip(np.linspace(-1.0, 2.0, n_starts), np.logspace(-0.5, 0.5, n_starts)):
            gamma = np.sqrt(shape * lag_scale)
            delta = np.sqrt(shape / lag_scale)
            starts.append(np.array([nu, np.log(delta), np.log(gamma)]))
        return starts
