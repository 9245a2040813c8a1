"""
Seed law interface.

Defines the contract for the infinitely divisible integer-valued Levy seeds that
drive a multivariate trawl process.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Dict, Optional

import numpy as np
from numpy.typing import ArrayLike

from mivt.exceptions import DomainError

if TYPE_CHECKING:
    from mivt.seeds.cp_representation import CpRepresentation
    from mivt.seeds.seed_cumulants import SeedCumulants


class SeedLaw(ABC):
    """
    Abstract interface for a discrete compound Poisson seed L' on N_0^n.

    Implementations are immutable pydantic models; sampling always goes through an
    explicit ``numpy.random.Generator`` owned by the caller.

    **Key Operations:**
    - First and second cumulants, including the pairwise covariances kappa_ij
    - Compound Poisson representation (block rates and jump laws)
    - Probability generating function
    - Marginal pmf of the seed integrated over an area of given size
    - Sampling unit-area seed draws
    """

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Number of components n."""

    @abstractmethod
    def parameters(self) -> Dict[str, float]:
        """Named parameters, e.g. {"kappa": ..., "alpha_1": ..., "alpha_2": ...}."""

    @abstractmethod
    def cumulants(self) -> "SeedCumulants":
        """
        Mean, variance and covariance matrix of the unit-area seed.

        Returns:
            SeedCumulants with the covariance matrix (kappa_ij)
        """

    @abstractmethod
    def cp_representation(self) -> "CpRepresentation":
        """
        Compound Poisson representation of the seed.

        Returns:
            Blocks whose rates sum to the total jump intensity v
        """

    @abstractmethod
    def pgf(self, t: ArrayLike) -> float:
        """
        Probability generating function E[prod t_i^{L'_i}].

        Args:
            t: Point in [0, 1]^n

        Raises:
            DomainError: If t has the wrong length or leaves [0, 1]^n
        """

    @abstractmethod
    def marginal_pmf(self, component: int, x: ArrayLike, scale: float = 1.0) -> np.ndarray:
        """
        Pmf of component ``component`` of the seed integrated over area ``scale``.

        With scale = leb(A_i) this is the stationary marginal law of Y^(i).
        """

    def correlation(self) -> np.ndarray:
        """Seed correlation matrix derived from :meth:`cumulants`."""
        cumulants = self.cumulants()
        cov = np.asarray(cumulants.covariance, dtype=float)
        sd = np.sqrt(np.diag(cov))
        return cov / np.outer(sd, sd)

    def sample(self, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
        """
        Draw unit-area seed vectors by superposing the compound Poisson blocks.

        Args:
            rng: Random generator handle
            size: Number of draws; ``None`` returns a single vector

        Returns:
            Integer array of shape (n,) or (size, n)
        """
        draws = 1 if size is None else size
        out = np.zeros((draws, self.dimension), dtype=np.int64)
        for block in self.cp_representation().blocks:
            counts = rng.poisson(block.rate, size=draws)
            total = int(counts.sum())
            if total == 0:
                continue
            jumps = block.sample_jumps(total, rng)
            owners = np.repeat(np.arange(draws), counts)
            np.add.at(out, owners, jumps)
        return out[0] if size is None else out

    def _pgf_argument(self, t: ArrayLike) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if t.shape != (self.dimension,):
            raise DomainError(f"pgf argument needs {self.dimension} components, got shape {t.shape}")
        if np.any(t < 0) or np.any(t > 1):
            raise DomainError("pgf is evaluated on [0, 1]^n")
        return t
