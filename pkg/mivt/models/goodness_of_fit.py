"""
Goodness-of-fit result of a fitted stationary marginal law.
"""

from typing import List

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field


class GofCell(BaseModel):
    """One pooled cell of the chi-square table, counts low..high inclusive."""

    model_config = ConfigDict(frozen=True)

    low: int = Field(..., ge=0)
    high: int = Field(..., description="Upper count of the cell; -1 marks an open upper tail")
    observed: int = Field(..., ge=0)
    expected: float = Field(..., ge=0)


class QuantilePair(BaseModel):
    model_config = ConfigDict(frozen=True)

    probability: float = Field(..., gt=0, lt=1)
    empirical: float
    fitted: float


class MarginalGoodnessOfFit(BaseModel):
    """
    Observed versus fitted marginal distribution of one component.

    **Usage Examples:**
    ```python
    gof = marginal_goodness_of_fit(series, report.model, component=0)
    gof.p_value
    gof.to_frame()      # pandas table: low, high, observed, expected
    ```
    """

    model_config = ConfigDict(frozen=True)

    label: str
    chi_square: float = Field(..., ge=0)
    dof: int = Field(..., ge=0)
    p_value: float = Field(..., ge=0, le=1)
    cells: List[GofCell] = Field(..., min_length=1)
    quantiles: List[QuantilePair] = Field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([cell.model_dump() for cell in self.cells])

    def quantile_frame(self) -> pd.DataFrame:
        return pd.DataFrame([pair.model_dump() for pair in self.quantiles])
