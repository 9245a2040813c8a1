"""
Trawl stage: match the theoretical autocorrelation to the empirical one.

The objective is the sum of squared differences sum_h (r_e(h) - r(h Delta))^2 over
the configured lags, minimised with a Nelder-Mead simplex in each family's
unconstrained parameterisation from several starting points.
"""

import logging
from typing import Mapping, NamedTuple, Sequence

import numpy as np
from pydantic import ValidationError
from scipy import optimize

from mivt.enums import TrawlFamily
from mivt.exceptions import DomainError, FitFailureError, MivtError
from mivt.trawls import TRAWL_CLASSES, TrawlSpec

logger = logging.getLogger(__name__)


class TrawlEstimate(NamedTuple):
    trawl: TrawlSpec
    residual: float


def _as_lag_arrays(acf_emp: Mapping[int, float] | Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(acf_emp, Mapping):
        lags = np.array(sorted(acf_emp), dtype=float)
        values = np.array([acf_emp[int(h)] for h in lags], dtype=float)
    else:
        values = np.asarray(acf_emp, dtype=float)
        lags = np.arange(1, values.size + 1, dtype=float)
    usable = np.isfinite(values)
    return lags[usable], values[usable]


def lag_scale(lags: np.ndarray, values: np.ndarray, delta: float) -> float:
    """Characteristic decay time: the first lag below 1/e, else the positive ACF area."""
    below = np.flatnonzero(values < np.exp(-1.0))
    if below.size:
        return float(max(lags[below[0]], 0.5) * delta)
    area = float(np.sum(np.clip(values, 0.0, None)) * delta)
    return max(area, delta)


def log_regression_rate(lags: np.ndarray, values: np.ndarray, delta: float) -> float | None:
    """Exponential rate from the slope of log r_e(h) against h Delta."""
    positive = values > 0
    if positive.sum() < 2:
        return None
    slope = np.polyfit(lags[positive] * delta, np.log(values[positive]), 1)[0]
    return float(-slope) if slope < 0 else None


def fit_trawl(
    acf_emp: Mapping[int, float] | Sequence[float],
    family: TrawlFamily | str,
    delta: float,
    n_starts: int = 5,
    max_iter: int = 4000,
    log_regression_start: bool = True,
) -> TrawlEstimate:
    """
    Least-squares fit of a trawl family to an empirical ACF.

    Args:
        acf_emp: Mapping lag (in bins) -> r_e(lag), or values for lags 1, 2, ...
        family: Trawl family to fit
        delta: Bin width; lag h corresponds to time h * delta
        n_starts: Number of simplex starting points
        max_iter: Iteration cap per simplex run
        log_regression_start: For exponential trawls, also start from the
            log-regression rate estimate

    Returns:
        Fitted trawl and the residual sum of squares

    Raises:
        DomainError: If there are too few usable lags or values leave [-1, 1]
        FitFailureError: If no start reaches a finite residual inside the domain
    """
    family = TrawlFamily(family)
    cls = TRAWL_CLASSES[family.value]
    lags, values = _as_lag_arrays(acf_emp)
    if np.any(np.abs(values) > 1.0 + 1e-12):
        raise DomainError("empirical autocorrelations must lie in [-1, 1]")

    starts = cls.start_points(n_starts, lag_scale(lags, values, delta))
    n_params = starts[0].size
    if lags.size < n_params + 1:
        raise DomainError(f"{family} needs at least {n_params + 1} usable lags, got {lags.size}")
    if family is TrawlFamily.EXPONENTIAL and log_regression_start:
        rate = log_regression_rate(lags, values, delta)
        if rate is not None:
            starts.insert(0, np.array([np.log(rate)]))

    times = lags * delta

    def objective(theta: np.ndarray) -> float:
        try:
            trawl = cls.from_free_parameters(theta)
            with np.errstate(all="ignore"):
                fitted = trawl.acf(times)
        except (ValidationError, MivtError, ArithmeticError, ValueError):
            return np.inf
        residual = float(np.sum((values - fitted) ** 2))
        return residual if np.isfinite(residual) else np.inf

    simplex_options = {"xatol": 1e-10, "fatol": 1e-16, "maxiter": max_iter, "maxfev": 2 * max_iter}
    best = None
    for start in starts:
        if not np.isfinite(objective(start)):
            continue
        result = optimize.minimize(objective, start, method="Nelder-Mead", options=simplex_options)
        logger.debug("%s start %s -> residual %.3e", family, np.round(start, 4), result.fun)
        if np.isfinite(result.fun) and (best is None or result.fun < best.fun):
            best = result
    if best is None:
        raise FitFailureError(f"every {family} start diverged")

    # restart from the optimum to shake off a collapsed simplex
    polished = optimize.minimize(objective, best.x, method="Nelder-Mead", options=simplex_options)
    if polished.fun <= best.fun:
        best = polished
    try:
        trawl = cls.from_free_parameters(best.x)
    except (ValidationError, MivtError) as exc:
        raise FitFailureError(f"{family} optimum left the parameter domain: {exc}", best.fun) from exc
    if not all(np.isfinite(v) for v in trawl.parameters().values()):
        raise FitFailureError(f"{family} fit ran to the boundary of the parameter domain", best.fun)
    logger.info("fitted %s trawl %s (residual %.3e)", family, trawl.parameters(), best.fun)
    return TrawlEstimate(trawl=trawl, residual=float(best.fun))
