"""
Parametric bootstrap percentile intervals.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from mivt.exceptions import DomainError
from mivt.models.fit_report import ConfidenceInterval, FitReport
from mivt.models.options import BootstrapOptions, FitOptions, ModelTemplate

from .replicates import Estimate, run_replicates

logger = logging.getLogger(__name__)

MIN_BOOTSTRAP_REPS = 50


def percentile_intervals(
    estimates: List[Estimate], point: Dict[str, float], level: float
) -> Dict[str, ConfidenceInterval]:
    """Percentile interval of every parameter over the successful replicates."""
    kept = [e for e in estimates if e is not None]
    tail = (1.0 - level) / 2.0
    intervals = {}
    for name, estimate in point.items():
        values = np.array([e[name] for e in kept])
        lower, upper = np.quantile(values, [tail, 1.0 - tail])
        intervals[name] = ConfidenceInterval(
            estimate=estimate, lower=float(lower), upper=float(upper), level=level,
            contains_estimate=bool(lower <= estimate <= upper),
        )
        if not intervals[name].contains_estimate:
            logger.warning("%s estimate %.6g lies outside its bootstrap interval (%.6g, %.6g)",
                           name, estimate, lower, upper)
    return intervals


def bootstrap(
    report: FitReport,
    seed: int,
    options: Optional[BootstrapOptions] = None,
    fit_options: Optional[FitOptions] = None,
) -> FitReport:
    """
    Parametric bootstrap of a fitted model.

    Simulates ``options.reps`` paths of the fitted model at the observed length and
    bin width, refits each with the same families and lag budget, and attaches
    percentile intervals at ``options.level``.

    Args:
        report: Fit to bootstrap
        seed: Master seed; replicate r uses the stream derived from (seed, r)
        options: Replicate count, level, worker count and failure tolerance
        fit_options: Options for the refits; the lag budget defaults to the original

    Returns:
        Copy of ``report`` with ``ci`` filled in

    Raises:
        DomainError: If fewer than 50 replicates are requested
        BootstrapUnstableError: If more than the tolerated share of refits fail
    """
    options = options or BootstrapOptions()
    if options.reps < MIN_BOOTSTRAP_REPS:
        raise DomainError(f"bootstrap needs at least {MIN_BOOTSTRAP_REPS} replicates, got {options.reps}")
    fit_options = fit_options or FitOptions(lags=report.metadata.lags)
    template = ModelTemplate(trawls=report.metadata.trawl_families, seed=report.metadata.seed_family)
    logger.info("bootstrapping %d replicates of length %d", options.reps, report.metadata.length)
    estimates = run_replicates(
        report.model, template, report.metadata.length, report.metadata.delta, seed,
        options.reps, fit_options, options.n_jobs, options.max_failure_fraction,
    )
    intervals = percentile_intervals(estimates, report.parameters(), options.level)
    failures = sum(e is None for e in estimates)
    return report.with_intervals(intervals, options.reps, failures)
