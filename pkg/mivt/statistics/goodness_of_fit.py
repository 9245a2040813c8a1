"""
Chi-square and quantile comparison of observed counts against the stationary
marginal law implied by a model, NB(leb * kappa, alpha / (1 + alpha)) or
Poisson(leb * mean) depending on the seed family.
"""

import logging
from typing import List, Tuple

import numpy as np
from scipy import stats

from mivt.exceptions import DomainError
from mivt.models.count_series import CountSeries
from mivt.models.goodness_of_fit import GofCell, MarginalGoodnessOfFit, QuantilePair
from mivt.models.mivt_model import MivtModel

logger = logging.getLogger(__name__)

MIN_EXPECTED = 5.0


def _pool_cells(observed: np.ndarray, expected: np.ndarray) -> List[Tuple[int, int, int, float]]:
    """Merge neighbouring counts until every cell expects at least MIN_EXPECTED."""
    cells = []
    low, obs, exp = 0, 0, 0.0
    for value, (o, e) in enumerate(zip(observed, expected)):
        obs += int(o)
        exp += float(e)
        if exp >= MIN_EXPECTED:
            cells.append((low, value, obs, exp))
            low, obs, exp = value + 1, 0, 0.0
    if not cells:
        return [(0, -1, obs, exp)]
    # leftover mass and the open tail join the last cell
    last_low, _, last_obs, last_exp = cells.pop()
    cells.append((last_low, -1, last_obs + obs, last_exp + exp))
    return cells


def marginal_goodness_of_fit(
    series: CountSeries,
    model: MivtModel,
    component: int | str,
    n_fitted: int = 0,
    n_quantiles: int = 19,
) -> MarginalGoodnessOfFit:
    """
    Compare the empirical marginal distribution of a component with the model's.

    Args:
        series: Observed counts
        model: Fitted model
        component: Component index or label
        n_fitted: Number of estimated parameters subtracted from the degrees of freedom
        n_quantiles: Number of equally spaced probabilities in the quantile table

    Returns:
        Pooled chi-square table, statistic, p-value and quantile pairs

    Raises:
        DomainError: If the model dimension does not match the series
    """
    if model.dimension != series.n_components:
        raise DomainError(f"model has {model.dimension} components, series has {series.n_components}")
    index = series.index_of(component)
    y = series.counts[index]
    trawl = model.trawls[index]
    support = np.arange(int(y.max()) + 1)
    pmf = model.seed.marginal_pmf(index, support, scale=trawl.leb())
    pmf = np.append(pmf, max(0.0, 1.0 - pmf.sum()))
    observed = np.append(np.bincount(y, minlength=support.size), 0)
    expected = pmf * y.size

    cells = _pool_cells(observed, expected)
    obs = np.array([c[2] for c in cells], dtype=float)
    exp = np.array([c[3] for c in cells])
    exp *= obs.sum() / exp.sum()
    dof = max(len(cells) - 1 - n_fitted, 0)
    if dof > 0:
        statistic, p_value = stats.chisquare(obs, exp, ddof=n_fitted)
    else:
        statistic, p_value = float(np.sum((obs - exp) ** 2 / exp)), 1.0
    logger.info("%s: chi2=%.4g on %d dof (p=%.3g)", series.labels[index], statistic, dof, p_value)

    probabilities = np.arange(1, n_quantiles + 1) / (n_quantiles + 1)
    fitted_q = _model_quantiles(model, index, trawl.leb(), probabilities, int(y.max()))
    quantiles = [
        QuantilePair(probability=p, empirical=float(np.quantile(y, p)), fitted=float(q))
        for p, q in zip(probabilities, fitted_q)
    ]
    return MarginalGoodnessOfFit(
        label=series.labels[index],
        chi_square=float(statistic),
        dof=dof,
        p_value=float(p_value),
        cells=[GofCell(low=c[0], high=c[1], observed=c[2], expected=float(e)) for c, e in zip(cells, exp)],
        quantiles=quantiles,
    )


def _model_quantiles(model: MivtModel, index: int, scale: float, probabilities: np.ndarray, start: int) -> np.ndarray:
    upper = max(2 * start, 16)
    while True:
        cdf = np.cumsum(model.seed.marginal_pmf(index, np.arange(upper + 1), scale=scale))
        if cdf[-1] >= probabilities[-1] or upper > 1 << 24:
            return np.minimum(np.searchsorted(cdf, probabilities), upper)
        upper *= 2
