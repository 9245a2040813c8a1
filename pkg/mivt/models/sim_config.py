"""
Simulation grid configuration.
"""

import logging
import math
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

logger = logging.getLogger(__name__)

DEFAULT_EPS_CUT = 1e-12
DEFAULT_BURNIN_EPS = 1e-6


class SimConfig(BaseModel):
    """
    Grid and horizon of a simulation run.

    T / Delta and burn-in / Delta must be whole numbers of grid steps; other values
    are rounded to the nearest step with a warning. A missing burn-in is resolved
    from the model at simulation time (``--burnin auto``).

    **Usage Examples:**
    ```python
    cfg = SimConfig(delta=1.0, horizon=3960, seed=42)                 # burn-in auto
    cfg = SimConfig(delta=0.25, horizon=100, burnin=10, eps_cut=0.0, seed=7)
    cfg.n_obs   # 400
    ```
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"delta": 1.0, "horizon": 3960, "burnin": None, "eps_cut": 1e-12, "seed": 42}},
    )

    delta: float = Field(..., gt=0, description="Grid step Delta in time units")
    horizon: float = Field(..., gt=0, description="Horizon T kept after burn-in")
    burnin: Optional[float] = Field(None, ge=0, description="Burn-in duration; None picks the default rule")
    burnin_eps: float = Field(DEFAULT_BURNIN_EPS, gt=0, lt=1, description="Trawl level used by the default burn-in")
    eps_cut: float = Field(DEFAULT_EPS_CUT, ge=0, lt=1,
                           description="Trawl level below which jumps stop contributing; 0 disables pruning")
    seed: int = Field(..., ge=0, lt=2**64, description="Master RNG seed")

    @model_validator(mode="before")
    @classmethod
    def round_to_grid(cls, data: Any) -> Any:
        """Round horizon and burn-in to whole grid steps."""
        if not isinstance(data, dict):
            return data
        delta = data.get("delta")
        if not isinstance(delta, (int, float)) or delta <= 0:
            return data
        data = dict(data)
        for key in ("horizon", "burnin"):
            value = data.get(key)
            if not isinstance(value, (int, float)) or value <= 0:
                continue
            steps = round(value / delta)
            if key == "horizon":
                steps = max(steps, 1)
            if abs(steps * delta - value) > 1e-9 * max(1.0, abs(value)):
                logger.warning("%s=%g is not a multiple of delta=%g, rounded to %g", key, value, delta, steps * delta)
                data[key] = steps * delta
        return data

    @property
    def n_obs(self) -> int:
        """Number of kept grid points K = T / Delta."""
        return int(round(self.horizon / self.delta))

    def burnin_steps(self, burnin: float) -> int:
        return int(round(burnin / self.delta))

    def with_burnin(self, burnin: float) -> "SimConfig":
        """Copy with the given burn-in rounded up to whole grid steps."""
        steps = math.ceil(burnin / self.delta - 1e-9)
        return self.model_copy(update={"burnin": max(steps, 0) * self.delta})
