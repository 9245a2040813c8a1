"""
Descriptive summary of a count series.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ComponentSummary(BaseModel):
    """Descriptive statistics of one component."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(..., description="Component label")
    min: float = Field(..., description="Smallest count")
    q1: float = Field(..., description="First quartile")
    median: float = Field(..., description="Median")
    mean: float = Field(..., description="Sample mean")
    q3: float = Field(..., description="Third quartile")
    max: float = Field(..., description="Largest count")
    variance: float = Field(..., ge=0, description="Sample variance (1/K normalisation)")
    overdispersion: Optional[float] = Field(None, description="variance / mean; None for an all-zero component")

    @model_validator(mode="after")
    def check_order(self) -> "ComponentSummary":
        if not self.min <= self.q1 <= self.median <= self.q3 <= self.max:
            raise ValueError("quantiles must be ordered min <= q1 <= median <= q3 <= max")
        return self


class MomentSummary(BaseModel):
    """
    Summary statistics of a count series in the layout of a descriptive data table.

    **Usage Examples:**
    ```python
    summary = summarize(series)
    summary.components[0].mean
    summary.correlation[0][1]   # lag-0 sample correlation
    ```
    """

    model_config = ConfigDict(frozen=True)

    length: int = Field(..., ge=1, description="Number of grid points K")
    delta: float = Field(..., gt=0, description="Grid step")
    components: List[ComponentSummary] = Field(..., min_length=1)
    correlation: List[List[Optional[float]]] = Field(
        ..., description="Pairwise lag-0 sample correlations; None where a component is constant"
    )
