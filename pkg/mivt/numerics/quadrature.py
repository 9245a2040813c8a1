"""
Adaptive quadrature of trawl overlaps on the half line.

The overlap leb(A_i cap A_j,h) = int_{-inf}^0 min{d_i(s), d_j(s - h)} ds is integrated
with QUADPACK's adaptive Gauss-Kronrod rule on a truncated domain [s_min, 0]. The
domain is split into geometrically growing segments so power-law tails are resolved,
and the mass left of s_min is added from the families' closed-form tails.
"""

import logging
import warnings

import numpy as np
from scipy import integrate

from mivt.exceptions import DomainError, QuadratureError
from mivt.interfaces.trawl_function import TrawlFunction

logger = logging.getLogger(__name__)

DEFAULT_EPS_QUAD = 1e-12
_SEGMENT_LIMIT = 200


def _segments(s_min: float, base: float) -> list[tuple[float, float]]:
    edges = [0.0]
    width = base
    while edges[-1] > s_min:
        edges.append(max(edges[-1] - width, s_min))
        width *= 2.0
    return [(edges[k + 1], edges[k]) for k in range(len(edges) - 1)]


def trawl_overlap(
    trawl_i: TrawlFunction,
    trawl_j: TrawlFunction,
    h: float,
    eps_quad: float = DEFAULT_EPS_QUAD,
    rel_tol: float = 1e-10,
) -> float:
    """
    Integrate min{d_i(s), d_j(s - h)} over s <= 0.

    Args:
        trawl_i: Trawl of the earlier observation
        trawl_j: Trawl shifted forward by h
        h: Non-negative time lag
        eps_quad: Level below which both branches are treated as negligible
        rel_tol: Relative accuracy requested from each segment

    Returns:
        The overlap measure

    Raises:
        DomainError: If h is negative
        QuadratureError: If the accumulated error estimate exceeds the tolerance
    """
    if h < 0:
        raise DomainError(f"lag must be non-negative, got {h}")

    cut_i = trawl_i.envelope_cutoff(eps_quad)
    cut_j = trawl_j.envelope_cutoff(eps_quad)
    s_min = min(-cut_i, h - cut_j)
    base = 0.05 * min(trawl_i.leb(), trawl_j.leb())

    def integrand(s: float) -> float:
        return float(min(trawl_i._evaluate(np.asarray(s)), trawl_j._evaluate(np.asarray(s - h))))

    total = 0.0
    error = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for lower, upper in _segments(s_min, base):
            value, abserr = integrate.quad(
                integrand, lower, upper, epsabs=eps_quad, epsrel=rel_tol, limit=_SEGMENT_LIMIT
            )
            total += value
            error += abserr

    tail = min(float(trawl_i.tail_mass(-s_min)), float(trawl_j.tail_mass(h - s_min)))
    total += tail

    tolerance = max(1e-8 * abs(total), 1e-10)
    if error > tolerance:
        raise QuadratureError("trawl overlap quadrature did not converge", error)
    logger.debug("overlap h=%g: %.12g (abs. err %.2e, tail %.2e)", h, total, error, tail)
    return total
