"""
Marginal stage: recover seed cumulants from the sample moments of each component.

The k-th cumulant of Y^(i) is leb(A_i) times the k-th cumulant of the seed, so
dividing the sample mean and variance by the fitted leb(A_i) gives seed moments. For
negative binomial seeds the variance/mean ratio 1 + alpha_i does not depend on
leb(A_i) at all.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from mivt.enums import SeedFamily
from mivt.exceptions import DomainError, ModelMismatchError
from mivt.models.fit_report import MarginalFit

logger = logging.getLogger(__name__)

_NB_FAMILIES = (SeedFamily.NB_COMMON, SeedFamily.NB_COMMON_IDIO, SeedFamily.NB_INDEPENDENT)


def fit_marginal(
    means: Sequence[float],
    variances: Sequence[float],
    leb_hat: Sequence[float],
    family: SeedFamily | str,
    labels: Optional[Sequence[str]] = None,
) -> MarginalFit:
    """
    Per-component marginal estimates.

    Args:
        means: Sample means m_i
        variances: Sample variances s_i^2
        leb_hat: Fitted leb(A_i)
        family: Seed family
        labels: Component labels used in error messages

    Returns:
        alpha_i = s_i^2 / m_i - 1 (beta_i for the independent family), the implied
        component-wise shapes and the de-scaled seed moments

    Raises:
        DomainError: If a leb(A_i) is not positive or the inputs disagree in length
        ModelMismatchError: If a component is not overdispersed under an NB family
    """
    family = SeedFamily(family)
    m = np.asarray(means, dtype=float)
    s2 = np.asarray(variances, dtype=float)
    leb = np.asarray(leb_hat, dtype=float)
    if not m.shape == s2.shape == leb.shape:
        raise DomainError("means, variances and leb_hat must have one entry per component")
    if np.any(leb <= 0) or not np.all(np.isfinite(leb)):
        raise DomainError("leb_hat must be positive and finite")
    labels = list(labels) if labels is not None else [f"Y{i + 1}" for i in range(m.size)]

    seed_mean = (m / leb).tolist()
    seed_variance = (s2 / leb).tolist()

    if family is SeedFamily.POISSON_FACTOR:
        for label, mean, var in zip(labels, m, s2):
            if mean > 0 and var / mean > 1.5:
                logger.warning("component %s is overdispersed (var/mean = %.3g) under a Poisson seed",
                               label, var / mean)
        return MarginalFit(kappa_implied=seed_mean, seed_mean=seed_mean, seed_variance=seed_variance)

    ratio = np.divide(s2, m, out=np.zeros_like(s2), where=m > 0)
    scale = ratio - 1.0
    for label, value in zip(labels, scale):
        if not value > 0:
            raise ModelMismatchError(
                f"component {label!r} is not overdispersed (var/mean = {value + 1.0:.6g}); "
                f"the {family} seed needs variance above the mean"
            )
    kappa_implied = (m / (leb * scale)).tolist()
    if family is SeedFamily.NB_INDEPENDENT:
        return MarginalFit(beta=scale.tolist(), kappa_implied=kappa_implied,
                           seed_mean=seed_mean, seed_variance=seed_variance)
    return MarginalFit(alpha=scale.tolist(), kappa_implied=kappa_implied,
                       seed_mean=seed_mean, seed_variance=seed_variance)
