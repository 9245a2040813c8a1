"""
Result objects of the two-stage moment fit.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mivt.enums import SeedFamily, TrawlFamily
from mivt.trawls import TrawlSpec

from .mivt_model import MivtModel


class TrawlFit(BaseModel):
    """Outcome of matching one component's ACF."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(..., description="Component label")
    trawl: TrawlSpec = Field(..., description="Fitted trawl function")
    residual: float = Field(..., ge=0, description="Sum of squared ACF errors at the optimum")
    leb: float = Field(..., gt=0, description="leb(A) of the fitted trawl")


class MarginalFit(BaseModel):
    """
    Stage-one marginal estimates.

    ``alpha`` holds the loadings of the common-factor families, ``beta`` the scales of
    the independent family. ``kappa_implied`` is m_i / (leb_i alpha_i) for NB families
    and m_i / leb_i for the Poisson family; it is a diagnostic only.
    """

    model_config = ConfigDict(frozen=True)

    alpha: Optional[List[float]] = Field(None, description="Loadings alpha_i")
    beta: Optional[List[float]] = Field(None, description="Scales beta_i (independent family)")
    kappa_implied: List[float] = Field(..., description="Component-wise implied shape or rate")
    seed_mean: List[float] = Field(..., description="Sample mean de-scaled by leb(A_i)")
    seed_variance: List[float] = Field(..., description="Sample variance de-scaled by leb(A_i)")


class DependenceFit(BaseModel):
    """Stage-two dependence estimates from lag-0 cross-covariances."""

    model_config = ConfigDict(frozen=True)

    kappa: Optional[float] = Field(None, description="Common-factor shape")
    theta_common: Optional[float] = Field(None, description="Common Poisson factor rate")
    kappa_pairs: List[List[Optional[float]]] = Field(
        ..., description="Pairwise kappa_ij = c_ij(0) / R_ij(0); None on the diagonal"
    )
    r0: List[List[float]] = Field(default_factory=list, description="Autocorrelators R_ij(0) used in the ratios")
    pair_estimates: List[float] = Field(default_factory=list,
                                        description="Per-pair estimates averaged into the reported value")
    spread: Optional[float] = Field(None, description="Standard deviation of the per-pair estimates")
    floored: bool = Field(False, description="A negative cross-covariance was floored at zero")


class ConfidenceInterval(BaseModel):
    """Bootstrap percentile interval of one parameter."""

    model_config = ConfigDict(frozen=True)

    estimate: float
    lower: float
    upper: float
    level: float = Field(..., gt=0, lt=1)
    contains_estimate: bool = Field(..., description="Whether the point estimate lies inside the interval")

    @model_validator(mode="after")
    def check_order(self) -> "ConfidenceInterval":
        if self.lower > self.upper:
            raise ValueError("interval bounds are not ordered")
        return self


class FitMetadata(BaseModel):
    """Inputs the fit was computed from."""

    model_config = ConfigDict(frozen=True)

    labels: List[str]
    trawl_families: List[TrawlFamily]
    seed_family: SeedFamily
    lags: int = Field(..., ge=1)
    length: int = Field(..., ge=1, description="Series length K")
    delta: float = Field(..., gt=0)
    bootstrap_reps: Optional[int] = None
    bootstrap_failures: Optional[int] = None


class FitReport(BaseModel):
    """
    Complete result of the two-stage moment fit, optionally with bootstrap intervals.

    **JSON layout:**
    ```json
    {"trawl": [...], "marginal": {"alpha": [...]}, "dependence": {"kappa": 0.81},
     "ci": {"lambda_1": {...}}, "diagnostics": {...}, "model": {...}, "metadata": {...}}
    ```
    """

    model_config = ConfigDict(frozen=True)

    model: MivtModel = Field(..., description="Fitted model, ready to simulate from")
    trawl: List[TrawlFit] = Field(..., min_length=1)
    marginal: MarginalFit
    dependence: DependenceFit
    ci: Dict[str, ConfidenceInterval] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)
    metadata: FitMetadata

    def parameters(self) -> Dict[str, float]:
        """Flat map of fitted parameters, e.g. lambda_1, alpha_1, kappa."""
        return self.model.parameters()

    def with_intervals(self, ci: Dict[str, ConfidenceInterval], reps: int, failures: int) -> "FitReport":
        metadata = self.metadata.model_copy(update={"bootstrap_reps": reps, "bootstrap_failures": failures})
        return self.model_copy(update={"ci": ci, "metadata": metadata})
