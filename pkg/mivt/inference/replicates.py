"""
Simulate-and-refit replicates shared by the bootstrap and the Monte Carlo study.
"""

import logging
from typing import Dict, List, Optional

from joblib import Parallel, delayed
from pydantic import ValidationError

from mivt.exceptions import BootstrapUnstableError, MivtError
from mivt.models.mivt_model import MivtModel
from mivt.models.options import FitOptions, ModelTemplate
from mivt.models.sim_config import SimConfig
from mivt.simulation.rng import derive_seed
from mivt.simulation.simulator import simulate_mivt

from .two_stage import fit

logger = logging.getLogger(__name__)

Estimate = Optional[Dict[str, float]]


def template_of(model: MivtModel) -> ModelTemplate:
    """Families of a model, used to refit paths simulated from it."""
    return ModelTemplate(trawls=[trawl.family for trawl in model.trawls], seed=model.seed.family)


def run_replicate(
    model: MivtModel,
    template: ModelTemplate,
    n_obs: int,
    delta: float,
    seed: int,
    options: FitOptions,
) -> Estimate:
    """Simulate one path and refit it; ``None`` marks a failed refit."""
    cfg = SimConfig(delta=delta, horizon=n_obs * delta, seed=seed)
    try:
        series = simulate_mivt(model, cfg)
        return fit(series, template, options).parameters()
    except (MivtError, ValidationError) as exc:
        logger.info("replicate with seed %d failed: %s", seed, exc)
        return None


def run_replicates(
    model: MivtModel,
    template: ModelTemplate,
    n_obs: int,
    delta: float,
    master_seed: int,
    reps: int,
    options: FitOptions,
    n_jobs: int = 1,
    max_failure_fraction: float = 0.1,
) -> List[Estimate]:
    """
    Run ``reps`` replicates with per-replicate streams derived from ``master_seed``.

    Results are ordered by replicate index whatever the worker count.

    Raises:
        BootstrapUnstableError: If more than ``max_failure_fraction`` of the refits fail
    """
    estimates = Parallel(n_jobs=n_jobs)(
        delayed(run_replicate)(model, template, n_obs, delta, derive_seed(master_seed, r), options)
        for r in range(reps)
    )
    failures = sum(e is None for e in estimates)
    if failures > max_failure_fraction * reps:
        raise BootstrapUnstableError(failures, reps)
    if failures:
        logger.warning("%d of %d replicate refits failed and were dropped", failures, reps)
    return estimates
