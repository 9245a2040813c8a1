"""
Empirical moments of count series.

Autocovariances use the 1/K denominator at every lag, which keeps the estimated
autocovariance sequence positive semi-definite.
"""

import numpy as np

from mivt.exceptions import DegenerateVarianceError, DomainError
from mivt.models.count_series import CountSeries
from mivt.models.moment_summary import ComponentSummary, MomentSummary

MAX_CUMULANT_ORDER = 4


def _centred(series: CountSeries, component: int | str) -> np.ndarray:
    y = series.component(component).astype(float)
    centred = y - y.mean()
    if not np.any(centred):
        raise DegenerateVarianceError(
            f"component {series.labels[series.index_of(component)]!r} is constant"
        )
    return centred


def sample_autocovariance(series: CountSeries, component: int | str, max_lag: int) -> np.ndarray:
    """c(h) = (1/K) sum_k (y_k - mean)(y_{k+h} - mean) for h = 0..max_lag."""
    if max_lag < 0:
        raise DomainError(f"max_lag must be non-negative, got {max_lag}")
    if series.length <= max_lag + 2:
        raise DomainError(f"series of length {series.length} is too short for {max_lag} lags")
    x = _centred(series, component)
    k = x.size
    return np.array([np.dot(x[: k - h], x[h:]) / k for h in range(max_lag + 1)])


def sample_acf(series: CountSeries, component: int | str, max_lag: int) -> np.ndarray:
    """
    Sample autocorrelation r(h) = c(h) / c(0) at lags h = 1..max_lag (in bins).

    Args:
        series: Count series
        component: Component index or label
        max_lag: Largest lag

    Returns:
        Array of length max_lag; entry h - 1 is r(h)

    Raises:
        DegenerateVarianceError: If the component is constant
        DomainError: If the series is not longer than max_lag + 2
    """
    acov = sample_autocovariance(series, component, max_lag)
    return acov[1:] / acov[0]


def sample_ccov(series: CountSeries, i: int | str, j: int | str, h: int) -> float:
    """
    Sample cross-covariance c_ij(h) = (1/K) sum_k (y_k^(i) - mean_i)(y_{k+h}^(j) - mean_j).

    Negative lags are allowed; c_ij(h) = c_ji(-h).

    Raises:
        DegenerateVarianceError: If either component is constant
        DomainError: If the series is not longer than |h| + 2
    """
    if series.length <= abs(h) + 2:
        raise DomainError(f"series of length {series.length} is too short for lag {h}")
    x = _centred(series, i)
    y = _centred(series, j)
    k = x.size
    if h >= 0:
        return float(np.dot(x[: k - h], y[h:]) / k)
    return float(np.dot(x[-h:], y[: k + h]) / k)


def sample_cumulants(series: CountSeries, component: int | str, order: int = MAX_CUMULANT_ORDER) -> np.ndarray:
    """
    Moment-based cumulant estimates kappa_1..kappa_order.

    kappa_1 is the mean, kappa_2 and kappa_3 the central moments m_2 and m_3, and
    kappa_4 = m_4 - 3 m_2^2.

    Raises:
        DomainError: If order is outside 1..4 or the series has fewer than 10 points
    """
    if not 1 <= order <= MAX_CUMULANT_ORDER:
        raise DomainError(f"cumulant order must be in 1..{MAX_CUMULANT_ORDER}, got {order}")
    if series.length < 10:
        raise DomainError(f"cumulants need at least 10 observations, got {series.length}")
    y = series.component(component).astype(float)
    mean = y.mean()
    m2, m3, m4 = (np.mean((y - mean) ** p) for p in (2, 3, 4))
    return np.array([mean, m2, m3, m4 - 3.0 * m2**2])[:order]


def summarize(series: CountSeries) -> MomentSummary:
    """
    Descriptive table of a count series: quartiles, mean, variance, overdispersion
    and lag-0 correlations.
    """
    components = []
    for label, row in zip(series.labels, series.counts.astype(float)):
        q = np.quantile(row, [0.0, 0.25, 0.5, 0.75, 1.0])
        mean = float(row.mean())
        variance = float(row.var())
        components.append(
            ComponentSummary(
                label=label,
                min=q[0], q1=q[1], median=q[2], mean=mean, q3=q[3], max=q[4],
                variance=variance,
                overdispersion=variance / mean if mean > 0 else None,
            )
        )
    std = np.array([c.variance for c in components]) ** 0.5
    centred = series.counts - series.counts.mean(axis=1, keepdims=True)
    cov = centred @ centred.T / series.length
    correlation = [
        [float(cov[a, b] / (std[a] * std[b])) if std[a] > 0 and std[b] > 0 else None
         for b in range(series.n_components)]
        for a in range(series.n_components)
    ]
    return MomentSummary(length=series.length, delta=series.delta, components=components, correlation=correlation)
