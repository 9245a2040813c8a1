"""
Discrete laws behind the negative binomial seeds.

Univariate logarithmic, modified logarithmic and negative binomial pmfs, the
multivariate logarithmic series distribution (MLSD) and samplers for the jump laws.
All pmfs are evaluated in log-space; the seed parameters met in practice (shapes
below one, scales near a hundred) overflow factorial-based formulas immediately.
"""

import functools
import logging
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gammaln, xlogy

from mivt.exceptions import DomainError

logger = logging.getLogger(__name__)

# cumulative table of the logarithmic law is built up to this quantile
_TABLE_QUANTILE = 1.0 - 1e-12
_TABLE_MAX_SIZE = 1 << 22


def _check_probability(p: float, name: str = "p") -> None:
    if not 0.0 < p < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {p}")


def _check_mlsd_parameters(p: np.ndarray) -> None:
    if p.ndim != 1 or p.size == 0:
        raise DomainError("MLSD parameters must be a non-empty vector")
    if np.any(p <= 0) or np.any(p >= 1) or p.sum() >= 1:
        raise DomainError(f"MLSD parameters need 0 < p_i and sum(p) < 1, got {p.tolist()}")


def log_pmf_logarithmic(p: float, x: ArrayLike) -> np.ndarray:
    """log P(X = x) for X ~ Log(p), support x >= 1."""
    _check_probability(p)
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        value = x * np.log(p) - np.log(x) - np.log(-np.log1p(-p))
    return np.where(x >= 1, value, -np.inf)


def pmf_logarithmic(p: float, x: ArrayLike) -> np.ndarray:
    return np.exp(log_pmf_logarithmic(p, x))


@functools.lru_cache(maxsize=256)
def _logarithmic_table(p: float) -> np.ndarray:
    """Cumulative distribution of Log(p) on 1..K with K the 1 - 1e-12 quantile (capped)."""
    norm = -np.log1p(-p)
    cdf = []
    term = p / norm
    total = 0.0
    x = 1
    while total < _TABLE_QUANTILE and x <= _TABLE_MAX_SIZE:
        total += term
        cdf.append(total)
        term *= p * x / (x + 1)
        x += 1
    if x > _TABLE_MAX_SIZE:
        logger.debug("logarithmic table for p=%g capped at %d entries", p, _TABLE_MAX_SIZE)
    return np.asarray(cdf)


def _sequential_search(p: float, u: float, start: int, cdf_start: float) -> int:
    """Continue the inversion search past the end of the cached table."""
    norm = -np.log1p(-p)
    x = start
    total = cdf_start
    term = np.exp(x * np.log(p) - np.log(x)) / norm
    while total < u and term > 0:
        total += term
        if total >= u:
            return x
        term *= p * x / (x + 1)
        x += 1
    return x


def sample_logarithmic(p: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw from the univariate logarithmic law Log(p) by inversion.

    Uniforms are located in a cached cumulative table; the rare ones beyond the
    table's last entry are resolved by direct sequential summation.

    Args:
        p: Parameter in (0, 1)
        size: Number of draws
        rng: Random generator handle

    Returns:
        Integer array of draws >= 1
    """
    _check_probability(p)
    table = _logarithmic_table(float(p))
    u = rng.random(size)
    draws = np.searchsorted(table, u, side="left") + 1
    beyond = np.flatnonzero(draws > table.size)
    for k in beyond:
        draws[k] = _sequential_search(float(p), u[k], table.size + 1, table[-1])
    return draws.astype(np.int64)


def log_pmf_nb(kappa: float, p: float, x: ArrayLike) -> np.ndarray:
    """log of binom(kappa + x - 1, x) p^x (1 - p)^kappa, support x >= 0."""
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    _check_probability(p)
    x = np.asarray(x, dtype=float)
    value = gammaln(kappa + x) - gammaln(kappa) - gammaln(x + 1) + xlogy(x, p) + kappa * np.log1p(-p)
    return np.where(x >= 0, value, -np.inf)


def pmf_nb(kappa: float, p: float, x: ArrayLike) -> np.ndarray:
    """
    Negative binomial pmf with mean kappa p / (1 - p) and variance kappa p / (1 - p)^2.

    Examples:
        >>> float(pmf_nb(2.0, 0.5, 1))
        0.25
    """
    return np.exp(log_pmf_nb(kappa, p, x))


def log_pmf_mlsd(p: ArrayLike, c: ArrayLike) -> np.ndarray:
    """
    log pmf of the multivariate logarithmic series distribution.

    Args:
        p: Parameter vector with p_i > 0 and sum(p) < 1
        c: Count vector, or array of count vectors in the last axis

    Raises:
        DomainError: If any count vector is identically zero
    """
    p = np.asarray(p, dtype=float)
    _check_mlsd_parameters(p)
    c = np.asarray(c, dtype=float)
    if c.shape[-1] != p.size:
        raise DomainError(f"count vectors need {p.size} components, got {c.shape[-1]}")
    if np.any(c < 0):
        raise DomainError("counts must be non-negative")
    total = c.sum(axis=-1)
    if np.any(total == 0):
        raise DomainError("the MLSD has no mass at the zero vector")
    return (
        gammaln(total)
        - gammaln(c + 1).sum(axis=-1)
        + (c * np.log(p)).sum(axis=-1)
        - np.log(-np.log1p(-p.sum()))
    )


def pmf_mlsd(p: ArrayLike, c: ArrayLike) -> np.ndarray:
    """Gamma(sum c) / prod(c_i!) * prod(p_i^c_i) / (-log(1 - sum p))."""
    return np.exp(log_pmf_mlsd(p, c))


def modified_log_parameters(p: ArrayLike, component: int) -> Tuple[float, float]:
    """
    Parameters of the marginal law of one MLSD component.

    Returns:
        (p_tilde, delta) with p_tilde = p_i / (1 - p + p_i) and
        delta = log(1 - p + p_i) / log(1 - p), p = sum(p)
    """
    p = np.asarray(p, dtype=float)
    _check_mlsd_parameters(p)
    rest = 1.0 - p.sum() + p[component]
    return float(p[component] / rest), float(np.log(rest) / np.log1p(-p.sum()))


def pmf_modified_log(p_tilde: float, delta: float, x: ArrayLike) -> np.ndarray:
    """Log(p_tilde) law with an added atom of weight delta at zero."""
    if not 0.0 <= delta < 1.0:
        raise DomainError(f"delta must lie in [0, 1), got {delta}")
    x = np.asarray(x)
    positive = (1.0 - delta) * pmf_logarithmic(p_tilde, np.maximum(x, 1))
    return np.where(x == 0, delta, np.where(x > 0, positive, 0.0))


def sample_mlsd(p: ArrayLike, size: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw from the multivariate logarithmic series distribution by conditioning.

    The first component is drawn from its modified logarithmic marginal with
    parameter p_1 / (1 - p_2 - ... - p_n). When it is positive the remaining
    components follow a negative multinomial, drawn as a chain of negative binomials
    with the running total as shape; when it is zero the remaining components form
    an MLSD on the remaining parameters and the procedure recurses.

    Args:
        p: Parameter vector with p_i > 0 and sum(p) < 1
        size: Number of draws
        rng: Random generator handle

    Returns:
        Integer array of shape (size, n), no row identically zero
    """
    p = np.asarray(p, dtype=float)
    _check_mlsd_parameters(p)
    out = np.zeros((size, p.size), dtype=np.int64)
    _fill_mlsd(out, np.arange(size), p, 0, rng)
    return out


def _fill_mlsd(out: np.ndarray, rows: np.ndarray, p: np.ndarray, first: int,
               rng: np.random.Generator) -> None:
    if rows.size == 0:
        return
    if first == p.size - 1:
        out[rows, first] = sample_logarithmic(p[first], rows.size, rng)
        return

    later = p[first + 1:].sum()
    p_tilde = p[first] / (1.0 - later)
    delta = np.log1p(-later) / np.log1p(-p[first:].sum())

    zero = rng.random(rows.size) < delta
    _fill_mlsd(out, rows[zero], p, first + 1, rng)

    active = rows[~zero]
    if active.size == 0:
        return
    running = sample_logarithmic(p_tilde, active.size, rng)
    out[active, first] = running
    # negative multinomial given the first positive count; step j succeeds with
    # probability (1 - sum_{k>=j} p_k) / (1 - sum_{k>j} p_k)
    for j in range(first + 1, p.size):
        remaining = p[j:].sum()
        success = (1.0 - remaining) / (1.0 - remaining + p[j])
        draws = rng.negative_binomial(running, success)
        out[active, j] = draws
        running = running + draws
