"""
First and second cumulants of a seed law.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SeedCumulants(BaseModel):
    """Per-component mean and variance plus the covariance matrix (kappa_ij) of a seed."""

    model_config = ConfigDict(frozen=True)

    mean: List[float] = Field(..., description="E[L'_i]")
    variance: List[float] = Field(..., description="Var(L'_i)")
    covariance: List[List[float]] = Field(..., description="Cov(L'_i, L'_j) = kappa_ij")

    @model_validator(mode="after")
    def check_shapes(self) -> "SeedCumulants":
        n = len(self.mean)
        if len(self.variance) != n or len(self.covariance) != n or any(len(r) != n for r in self.covariance):
            raise ValueError("mean, variance and covariance must share the dimension")
        return self
