"""
Pairwise autocorrelators R_ij(h) = leb(A_i cap A_j,h).

Both-exponential pairs use the closed form built on the single crossing point of
lambda_i s = lambda_j (s - h); every other pair is integrated numerically.
"""

import math

from mivt.exceptions import DomainError
from mivt.interfaces.trawl_function import TrawlFunction
from mivt.numerics.quadrature import DEFAULT_EPS_QUAD, trawl_overlap


def exponential_pair_overlap(rate_i: float, rate_j: float, h: float) -> float:
    """
    Closed-form overlap of two exponential trawls.

    Args:
        rate_i: Rate of the trawl observed at time t
        rate_j: Rate of the trawl observed at time t + h
        h: Non-negative lag

    Returns:
        int_{-inf}^0 min{exp(rate_i s), exp(rate_j (s - h))} ds
    """
    if h < 0:
        raise DomainError(f"lag must be non-negative, got {h}")
    if rate_i <= rate_j:
        # the shifted trawl stays below on the whole half line
        return math.exp(-rate_j * h) / rate_j
    crossing = rate_j * h / (rate_j - rate_i)
    left = math.exp(rate_i * crossing) / rate_i
    right = math.exp(-rate_j * h) * (1.0 - math.exp(rate_j * crossing)) / rate_j
    return left + right


def autocorrelator(
    spec_i: TrawlFunction,
    spec_j: TrawlFunction,
    h: float,
    eps_quad: float = DEFAULT_EPS_QUAD,
) -> float:
    """
    Autocorrelator R_ij(h) driving the cross-covariance Cov(Y_t^i, Y_{t+h}^j) = R_ij(h) kappa_ij.

    Args:
        spec_i: Trawl of component i
        spec_j: Trawl of component j
        h: Non-negative lag in time units
        eps_quad: Quadrature truncation level for pairs without a closed form

    Returns:
        leb(A_i cap A_j,h), never larger than min(leb(A_i), leb(A_j))

    Raises:
        DomainError: If h is negative
        QuadratureError: If numerical integration fails
    """
    if h < 0:
        raise DomainError(f"lag must be non-negative, got {h}")
    if spec_i.family == "exponential" and spec_j.family == "exponential":
        return exponential_pair_overlap(spec_i.lambda_, spec_j.lambda_, h)
    return trawl_overlap(spec_i, spec_j, h, eps_quad)
