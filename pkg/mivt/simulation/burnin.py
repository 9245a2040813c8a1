"""
Default burn-in rule.
"""

import logging

from mivt.exceptions import DomainError
from mivt.models.mivt_model import MivtModel

logger = logging.getLogger(__name__)


def default_burnin(model: MivtModel, eps: float) -> float:
    """
    Smallest burn-in after which every trawl function has dropped below ``eps``.

    The pre-sample content of each trawl vanishes in probability as time runs; this
    rule stops once d^(i)(-bi) <= eps for all components. Non-monotone families use
    their exponential envelope. Long-memory gamma trawls only decay polynomially and
    trigger a warning.

    Args:
        model: Model whose trawls are inspected
        eps: Trawl level in (0, 1)

    Returns:
        Burn-in duration in time units

    Raises:
        DomainError: If eps is outside (0, 1)
    """
    if not 0.0 < eps < 1.0:
        raise DomainError(f"burn-in level must lie in (0, 1), got {eps}")
    durations = []
    for i, trawl in enumerate(model.trawls):
        if trawl.is_monotone:
            duration = float(trawl.exit_time(eps))
        else:
            duration = trawl.envelope_cutoff(eps)
        if trawl.family == "gamma-lm":
            logger.warning(
                "component %d has a gamma trawl (H=%g): residual pre-sample mass decays only "
                "polynomially, burn-in %.6g may be inadequate", i + 1, trawl.hurst, duration
            )
        durations.append(duration)
    return max(durations)
