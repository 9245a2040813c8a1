"""
Multivariate Poisson seed built from independent Poisson factors, L' = A X.
"""

from itertools import combinations
from typing import Dict, List, Literal, Sequence

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import stats

from mivt.exceptions import InvalidParameterError
from mivt.interfaces.seed_law import SeedLaw

from .cp_representation import CategoricalBlock, CpRepresentation
from .seed_cumulants import SeedCumulants


class PoissonFactorSeed(BaseModel, SeedLaw):
    """
    Poisson factor seed L' = A X with X_k ~ Poisson(theta_k) independent.

    Every column of the 0/1 matrix A is a jump vector; component i receives factor k
    when A[i][k] = 1. Shared factors create the (necessarily non-negative) dependence.

    **Key Features:**
    - mean = A theta, covariance = A diag(theta) A^T
    - compound Poisson rate sum(theta) with categorical column jumps
    - constructors for the common-factor and trivariate interaction designs

    **Usage Examples:**
    ```python
    seed = PoissonFactorSeed(A=[[1, 0, 1], [0, 1, 1]], theta=[1.0, 1.0, 1.0])
    seed.cumulants().covariance  # [[2, 1], [1, 2]]

    seed = PoissonFactorSeed.one_common_factor(common=1.0, idiosyncratic=[1.0, 1.0])
    ```
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        serialize_by_alias=True,
        json_schema_extra={
            "example": {"family": "poisson-factor", "A": [[1, 0, 1], [0, 1, 1]], "theta": [1.0, 1.0, 1.0]}
        },
    )

    family: Literal["poisson-factor"] = "poisson-factor"
    factor_matrix: List[List[int]] = Field(..., alias="A", min_length=1,
                                           description="Row-major n x m 0/1 factor matrix")
    theta: List[float] = Field(..., min_length=1, description="Factor rates theta_k > 0")

    @model_validator(mode="after")
    def check_design(self) -> "PoissonFactorSeed":
        m = len(self.theta)
        if any(len(row) != m for row in self.factor_matrix):
            raise InvalidParameterError(f"every row of A needs {m} entries, one per factor")
        if any(v not in (0, 1) for row in self.factor_matrix for v in row):
            raise InvalidParameterError("A must contain only 0 and 1")
        if any(rate <= 0 for rate in self.theta):
            raise InvalidParameterError("factor rates must be strictly positive")
        columns = [tuple(col) for col in zip(*self.factor_matrix)]
        if any(sum(col) == 0 for col in columns):
            raise InvalidParameterError("A has an all-zero column")
        if len(set(columns)) != len(columns):
            raise InvalidParameterError("A has duplicate columns")
        return self

    @classmethod
    def one_common_factor(cls, common: float, idiosyncratic: Sequence[float]) -> "PoissonFactorSeed":
        """A = [I_n | 1]: one private factor per component plus one shared factor."""
        n = len(idiosyncratic)
        matrix = np.hstack([np.eye(n, dtype=int), np.ones((n, 1), dtype=int)])
        return cls(A=matrix.tolist(), theta=[*idiosyncratic, common])

    @classmethod
    def trivariate_all_interactions(cls, theta: Sequence[float]) -> "PoissonFactorSeed":
        """Seven factors: three private, three pairwise and one shared by all components."""
        return cls(A=_interaction_matrix(3, max_order=3).tolist(), theta=list(theta))

    @classmethod
    def trivariate_pairwise(cls, theta: Sequence[float]) -> "PoissonFactorSeed":
        """Six factors: three private and three pairwise."""
        return cls(A=_interaction_matrix(3, max_order=2).tolist(), theta=list(theta))

    @property
    def dimension(self) -> int:
        return len(self.factor_matrix)

    def parameters(self) -> Dict[str, float]:
        return {f"theta_{k + 1}": rate for k, rate in enumerate(self.theta)}

    def cumulants(self) -> SeedCumulants:
        a = np.asarray(self.factor_matrix, dtype=float)
        theta = np.asarray(self.theta)
        cov = a @ np.diag(theta) @ a.T
        return SeedCumulants(mean=(a @ theta).tolist(), variance=np.diag(cov).tolist(),
                             covariance=cov.tolist())

    def cp_representation(self) -> CpRepresentation:
        total = float(sum(self.theta))
        block = CategoricalBlock(
            rate=total,
            columns=[list(col) for col in zip(*self.factor_matrix)],
            probabilities=[rate / total for rate in self.theta],
        )
        return CpRepresentation(blocks=[block])

    def pgf(self, t: ArrayLike) -> float:
        t = self._pgf_argument(t)
        a = np.asarray(self.factor_matrix)
        column_values = np.prod(np.where(a == 1, t[:, None], 1.0), axis=0)
        return float(np.exp(np.dot(self.theta, column_values - 1.0)))

    def marginal_pmf(self, component: int, x: ArrayLike, scale: float = 1.0) -> np.ndarray:
        rate = scale * float(np.dot(self.factor_matrix[component], self.theta))
        return stats.poisson.pmf(np.asarray(x), rate)


def _interaction_matrix(n: int, max_order: int) -> np.ndarray:
    columns = []
    for order in range(1, max_order + 1):
        for members in combinations(range(n), order):
            col = np.zeros(n, dtype=int)
            col[list(members)] = 1
            columns.append(col)
    return np.column_stack(columns)
