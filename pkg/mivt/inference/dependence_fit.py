"""
Dependence stage: kappa_ij = c_ij(0) / R_ij(0) from lag-0 cross-covariances.
"""

import logging
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from mivt.enums import SeedFamily
from mivt.exceptions import DomainError, FitFailureError
from mivt.models.count_series import CountSeries
from mivt.models.fit_report import DependenceFit, MarginalFit
from mivt.numerics.quadrature import DEFAULT_EPS_QUAD
from mivt.statistics.moments import sample_ccov
from mivt.trawls import TrawlSpec, autocorrelator

logger = logging.getLogger(__name__)


def estimate_dependence(
    cross_cov: np.ndarray,
    r0: np.ndarray,
    marginal: MarginalFit,
    family: SeedFamily | str,
    labels: Optional[Sequence[str]] = None,
) -> DependenceFit:
    """
    Dependence parameters from lag-0 cross-covariances and autocorrelators.

    For the common-factor NB families each pair gives kappa_ij / (alpha_i alpha_j);
    for the one-common-factor Poisson seed each pair gives the common rate directly.
    With more than two components the pair values are averaged and their standard
    deviation is reported as ``spread``. A negative cross-covariance is floored at
    zero and flagged, since these seeds cannot produce negative dependence.

    A single component has no cross-covariance; the common shape then falls back to
    the marginal's implied value.

    Raises:
        FitFailureError: If some R_ij(0) is not positive
    """
    family = SeedFamily(family)
    cross_cov = np.asarray(cross_cov, dtype=float)
    r0 = np.asarray(r0, dtype=float)
    n = cross_cov.shape[0]
    labels = list(labels) if labels is not None else [f"Y{i + 1}" for i in range(n)]

    kappa_pairs: list[list[Optional[float]]] = [[None] * n for _ in range(n)]
    pair_estimates = []
    floored = False
    for i, j in combinations(range(n), 2):
        if not r0[i, j] > 0:
            raise FitFailureError(f"R_{i + 1}{j + 1}(0) = {r0[i, j]:.3g} is not positive")
        kappa_ij = cross_cov[i, j] / r0[i, j]
        if kappa_ij < 0:
            logger.warning("negative lag-0 cross-covariance between %s and %s floored at 0",
                           labels[i], labels[j])
            kappa_ij = 0.0
            floored = True
        kappa_pairs[i][j] = kappa_pairs[j][i] = float(kappa_ij)
        if family in (SeedFamily.NB_COMMON, SeedFamily.NB_COMMON_IDIO):
            pair_estimates.append(kappa_ij / (marginal.alpha[i] * marginal.alpha[j]))
        elif family is SeedFamily.POISSON_FACTOR:
            pair_estimates.append(kappa_ij)

    spread = float(np.std(pair_estimates)) if len(pair_estimates) > 1 else None
    if len(pair_estimates) > 1:
        logger.info("pairwise dependence estimates %s (spread %.3g)", np.round(pair_estimates, 6), spread)
    common = float(np.mean(pair_estimates)) if pair_estimates else None
    if n == 1 and family in (SeedFamily.NB_COMMON, SeedFamily.NB_COMMON_IDIO):
        common = marginal.kappa_implied[0]

    if family is SeedFamily.POISSON_FACTOR:
        return DependenceFit(theta_common=common, kappa_pairs=kappa_pairs, r0=r0.tolist(),
                             pair_estimates=pair_estimates, spread=spread, floored=floored)
    return DependenceFit(kappa=common, kappa_pairs=kappa_pairs, r0=r0.tolist(),
                         pair_estimates=pair_estimates, spread=spread, floored=floored)


def fit_dependence(
    series: CountSeries,
    trawls: Sequence[TrawlSpec],
    marginal: MarginalFit,
    family: SeedFamily | str,
    eps_quad: float = DEFAULT_EPS_QUAD,
) -> DependenceFit:
    """
    Estimate dependence parameters of a series given its fitted trawls and marginals.

    Args:
        series: Observed counts
        trawls: Fitted trawl of each component
        marginal: Stage-one marginal estimates
        family: Seed family
        eps_quad: Quadrature truncation for R_ij(0)

    Raises:
        DomainError: If the number of trawls differs from the number of components
        FitFailureError: If some R_ij(0) is not positive
    """
    n = series.n_components
    if len(trawls) != n:
        raise DomainError(f"{len(trawls)} trawls for {n} components")
    cross_cov = np.zeros((n, n))
    r0 = np.diag([trawl.leb() for trawl in trawls])
    for i, j in combinations(range(n), 2):
        cross_cov[i, j] = cross_cov[j, i] = sample_ccov(series, i, j, 0)
        r0[i, j] = r0[j, i] = autocorrelator(trawls[i], trawls[j], 0.0, eps_quad)
    return estimate_dependence(cross_cov, r0, marginal, family, series.labels)
