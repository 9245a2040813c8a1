"""
Trawl function interface.

Defines the contract every parametric trawl family fulfils: pointwise evaluation of
the height profile d(z), the Lebesgue measure of the trawl set, the theoretical
autocorrelation and the inverse quantities the simulator needs.
"""

from abc import ABC, abstractmethod
from typing import ClassVar, Dict, List

import numpy as np
from numpy.typing import ArrayLike

from mivt.exceptions import DomainError


class TrawlFunction(ABC):
    """
    Abstract interface for a trawl function d: (-inf, 0] -> [0, 1].

    The trawl set is A = {(x, s): s <= 0, 0 <= x <= d(s)}; shifting it along the time
    axis gives A_t. Implementations are immutable pydantic models, so a single
    instance can be shared between threads.

    **Key Operations:**
    - Evaluate d(z) for z <= 0
    - Lebesgue measure leb(A)
    - Autocorrelation r(h) = leb(A cap A_h) / leb(A)
    - Exit time of a point of height u (monotone families)
    """

    is_monotone: ClassVar[bool] = True

    @abstractmethod
    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        """Vectorised d(z); callers guarantee z <= 0."""

    @abstractmethod
    def leb(self) -> float:
        """
        Lebesgue measure of the trawl set.

        Returns:
            leb(A) = integral of d over (-inf, 0]

        Raises:
            InfiniteTrawlMeasureError: If the integral diverges
        """

    @abstractmethod
    def profile_acf(self, h: ArrayLike) -> np.ndarray:
        """
        Closed form of the shifted-profile ratio int_{-inf}^{-h} d(s) ds / leb(A).

        For monotone families this is the autocorrelation function itself.
        """

    @abstractmethod
    def parameters(self) -> Dict[str, float]:
        """Named parameter values, in the order used by the fitter."""

    @abstractmethod
    def free_parameters(self) -> np.ndarray:
        """Parameters mapped to an unconstrained vector (log transforms etc.)."""

    @classmethod
    @abstractmethod
    def from_free_parameters(cls, theta: np.ndarray) -> "TrawlFunction":
        """Inverse of :meth:`free_parameters`."""

    @classmethod
    @abstractmethod
    def start_points(cls, n_starts: int, lag_scale: float) -> List[np.ndarray]:
        """
        Starting vectors for multi-start fitting, on a log-spaced grid.

        Args:
            n_starts: Number of starting vectors
            lag_scale: Characteristic decay time suggested by the data
        """

    def eval(self, z: ArrayLike) -> np.ndarray:
        """
        Evaluate the trawl function.

        Args:
            z: Non-positive time offset(s)

        Returns:
            d(z), same shape as ``z``

        Raises:
            DomainError: If any z is positive
        """
        z = np.asarray(z, dtype=float)
        if np.any(z > 0):
            raise DomainError("trawl functions are defined on z <= 0 only")
        return self._evaluate(z)

    def acf(self, h: ArrayLike) -> np.ndarray:
        """
        Theoretical autocorrelation r(h) = leb(A cap A_h) / leb(A).

        Raises:
            DomainError: If any lag is negative
        """
        h = np.asarray(h, dtype=float)
        if np.any(h < 0):
            raise DomainError("acf requires non-negative lags")
        return np.where(h == 0, 1.0, self.profile_acf(h))

    def tail_mass(self, x: ArrayLike) -> np.ndarray:
        """int_{-inf}^{-x} d(s) ds for x >= 0."""
        return self.leb() * self.profile_acf(x)

    def envelope_cutoff(self, eps: float) -> float:
        """Smallest x >= 0 beyond which d(-y) <= eps for every y >= x."""
        return float(self.exit_time(np.asarray(eps)))

    def exit_time(self, u: ArrayLike) -> np.ndarray:
        """
        Time a point of height u stays inside a monotone trawl.

        Returns sup{x >= 0: d(-x) >= u}; +inf for u <= 0 and 0 for u >= d(0).
        Families with a closed-form inverse override this bisection.
        """
        u = np.asarray(u, dtype=float)
        lo = np.zeros_like(u)
        hi = np.full_like(u, max(self.leb(), 1e-3))
        positive = u > 0
        for _ in range(2048):
            grow = positive & (self._evaluate(-hi) >= u)
            if not grow.any():
                break
            hi = np.where(grow, 2.0 * hi, hi)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            inside = self._evaluate(-mid) >= u
            lo = np.where(inside, mid, lo)
            hi = np.where(inside, hi, mid)
        return np.where(positive, lo, np.inf)
