"""
Monte Carlo study of the two-stage estimator: simulate from a known model, refit,
and tabulate the spread of the estimates around the truth.
"""

import logging
from typing import Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from mivt.exceptions import DomainError
from mivt.models.mivt_model import MivtModel
from mivt.models.options import BootstrapOptions, FitOptions

from .replicates import run_replicates, template_of

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["parameter", "truth", "median", "mean", "bias", "relative_bias", "std", "iqr", "n"]


class McStudyResult(BaseModel):
    """
    Estimates of every replicate and their per-parameter summary.

    ``estimates`` has one row per successful replicate (column ``replicate`` holds
    its index) and one column per parameter; ``summary`` has the columns of
    ``SUMMARY_COLUMNS``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    truth: MivtModel
    n_obs: int = Field(..., ge=1)
    delta: float = Field(..., gt=0)
    reps: int = Field(..., ge=1)
    failures: int = Field(..., ge=0)
    estimates: pd.DataFrame
    summary: pd.DataFrame


def summarize_estimates(estimates: pd.DataFrame, truth: dict) -> pd.DataFrame:
    """Truth, median, mean, bias, relative bias, standard deviation and IQR per parameter."""
    rows = []
    for name, true_value in truth.items():
        values = estimates[name].to_numpy(dtype=float)
        q1, median, q3 = np.quantile(values, [0.25, 0.5, 0.75])
        mean = float(values.mean())
        rows.append({
            "parameter": name,
            "truth": true_value,
            "median": float(median),
            "mean": mean,
            "bias": mean - true_value,
            "relative_bias": (mean - true_value) / true_value if true_value != 0 else np.nan,
            "std": float(values.std(ddof=1)) if values.size > 1 else 0.0,
            "iqr": float(q3 - q1),
            "n": int(values.size),
        })
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def mc_study(
    model: MivtModel,
    reps: int,
    n_obs: int,
    seed: int,
    delta: float = 1.0,
    fit_options: Optional[FitOptions] = None,
    options: Optional[BootstrapOptions] = None,
) -> McStudyResult:
    """
    Simulate ``reps`` paths of ``n_obs`` points from ``model`` and refit each.

    Args:
        model: True model
        reps: Number of replicates (>= 1)
        n_obs: Observations per path
        seed: Master seed
        delta: Bin width of the simulated paths
        fit_options: Options of the refits
        options: Worker count and failure tolerance (``reps`` and ``level`` are ignored)

    Returns:
        McStudyResult with the estimate matrix and the summary table

    Raises:
        DomainError: If reps or n_obs is not positive
        BootstrapUnstableError: If more than the tolerated share of refits fail
    """
    if reps < 1 or n_obs < 1:
        raise DomainError(f"need reps >= 1 and n_obs >= 1, got reps={reps}, n_obs={n_obs}")
    options = options or BootstrapOptions()
    fit_options = fit_options or FitOptions()
    logger.info("Monte Carlo study: %d replicates of %d observations", reps, n_obs)
    estimates = run_replicates(
        model, template_of(model), n_obs, delta, seed, reps, fit_options,
        options.n_jobs, options.max_failure_fraction,
    )
    rows = [{"replicate": r, **e} for r, e in enumerate(estimates) if e is not None]
    truth = model.parameters()
    frame = pd.DataFrame(rows, columns=["replicate", *truth])
    return McStudyResult(
        truth=model,
        n_obs=n_obs,
        delta=delta,
        reps=reps,
        failures=reps - len(rows),
        estimates=frame,
        summary=summarize_estimates(frame, truth),
    )
