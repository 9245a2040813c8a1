"""
Runtime options of the estimation pipeline.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from mivt.enums import SeedFamily, TrawlFamily
from mivt.numerics.quadrature import DEFAULT_EPS_QUAD


class ModelTemplate(BaseModel):
    """Families to fit: one trawl family per component and one seed family."""

    model_config = ConfigDict(frozen=True)

    trawls: List[TrawlFamily] = Field(..., min_length=1, description="Trawl family of each component")
    seed: SeedFamily = Field(SeedFamily.NB_COMMON, description="Seed family")

    @property
    def dimension(self) -> int:
        return len(self.trawls)


class FitOptions(BaseModel):
    """
    Options of the two-stage moment fit.

    **Usage Examples:**
    ```python
    FitOptions()                    # 30 lags, 5 starts
    FitOptions(lags=50, n_starts=8)
    ```
    """

    model_config = ConfigDict(frozen=True)

    lags: int = Field(30, ge=1, description="Number of ACF lags (in bins) matched in the trawl step")
    n_starts: int = Field(5, ge=1, description="Starting points of the simplex search")
    max_iter: int = Field(4000, ge=10, description="Iteration cap per simplex run")
    eps_quad: float = Field(DEFAULT_EPS_QUAD, gt=0, lt=1, description="Quadrature truncation level")
    log_regression_start: bool = Field(
        True, description="Add the log-regression rate as an extra start for exponential trawls"
    )


class BootstrapOptions(BaseModel):
    """Options of the parametric bootstrap and the Monte Carlo study."""

    model_config = ConfigDict(frozen=True)

    reps: int = Field(500, ge=1, description="Number of replicates")
    level: float = Field(0.95, gt=0, lt=1, description="Coverage of the percentile intervals")
    n_jobs: int = Field(1, description="joblib worker count; -1 uses every core")
    max_failure_fraction: float = Field(0.1, ge=0, lt=1, description="Tolerated share of failed refits")

    @field_validator("n_jobs")
    @classmethod
    def validate_n_jobs(cls, v: int) -> int:
        if v == 0:
            raise ValueError("n_jobs must be non-zero")
        return v
