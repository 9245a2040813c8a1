"""
Two-stage equation-by-equation moment fit: trawls, then marginals, then dependence.
"""

import logging
from typing import Callable, Optional, TypeVar

from pydantic import ValidationError

from mivt.enums import SeedFamily
from mivt.exceptions import MivtError, ModelMismatchError, StageError
from mivt.models.count_series import CountSeries
from mivt.models.fit_report import DependenceFit, FitMetadata, FitReport, MarginalFit, TrawlFit
from mivt.models.mivt_model import MivtModel
from mivt.models.options import FitOptions, ModelTemplate
from mivt.seeds import NBCommonFactorSeed, NBCommonIdioSeed, NBIndependentSeed, PoissonFactorSeed, SeedSpec
from mivt.statistics.moments import sample_acf, sample_cumulants

from .dependence_fit import fit_dependence
from .marginal_fit import fit_marginal
from .trawl_fit import fit_trawl

logger = logging.getLogger(__name__)

T = TypeVar("T")

# smallest idiosyncratic Poisson rate kept in a fitted one-common-factor seed
MIN_POISSON_RATE = 1e-8


def _stage(name: str, step: Callable[[], T]) -> T:
    try:
        return step()
    except (MivtError, ValidationError) as exc:
        if isinstance(exc, StageError):
            raise
        raise StageError(name, exc) from exc


def build_seed(family: SeedFamily, marginal: MarginalFit, dependence: DependenceFit) -> SeedSpec:
    """
    Assemble the fitted seed law from the stage estimates.

    Raises:
        ModelMismatchError: If a common-factor family ends up without positive dependence
    """
    n = len(marginal.kappa_implied)
    if family is SeedFamily.NB_INDEPENDENT:
        return NBIndependentSeed(kappa=marginal.kappa_implied, beta=marginal.beta)

    if family is SeedFamily.POISSON_FACTOR:
        if n == 1:
            return PoissonFactorSeed(A=[[1]], theta=marginal.kappa_implied)
        common = dependence.theta_common or 0.0
        if common <= 0:
            raise ModelMismatchError("no positive cross-covariance to identify the common Poisson factor")
        idiosyncratic = [max(rate - common, MIN_POISSON_RATE) for rate in marginal.kappa_implied]
        return PoissonFactorSeed.one_common_factor(common=common, idiosyncratic=idiosyncratic)

    kappa = dependence.kappa or 0.0
    if kappa <= 0:
        raise ModelMismatchError(
            f"no positive cross-covariance to identify kappa of the {family} seed; "
            f"consider {SeedFamily.NB_INDEPENDENT}"
        )
    if family is SeedFamily.NB_COMMON:
        return NBCommonFactorSeed(kappa=kappa, alpha=marginal.alpha)
    kappa_idio = [max(implied - kappa, 0.0) for implied in marginal.kappa_implied]
    return NBCommonIdioSeed(kappa=kappa, alpha=marginal.alpha, kappa_idio=kappa_idio)


def fit(series: CountSeries, template: ModelTemplate, options: Optional[FitOptions] = None) -> FitReport:
    """
    Fit a MIVT model to a count series.

    Stage ``trawl`` matches each component's sample ACF, stage ``marginal`` turns the
    sample mean and variance into seed moments using the fitted leb(A_i), and stage
    ``dependence`` estimates the common-factor parameter from lag-0 cross-covariances.

    Args:
        series: Observed counts
        template: Trawl family of each component and the seed family
        options: Fit options; defaults to FitOptions()

    Returns:
        FitReport with the fitted model and every intermediate estimate

    Raises:
        StageError: Wrapping the failure of a stage, labelled trawl / marginal /
            dependence / model
    """
    options = options or FitOptions()
    if template.dimension != series.n_components:
        raise StageError(
            "trawl",
            ModelMismatchError(f"template has {template.dimension} trawls, series has {series.n_components} components"),
        )
    lags = min(options.lags, series.length - 3)
    logger.info("fitting %s / %s to %d x %d series with %d lags",
                [str(f) for f in template.trawls], template.seed, series.n_components, series.length, lags)

    def trawl_stage() -> list[TrawlFit]:
        fits = []
        for i, (label, family) in enumerate(zip(series.labels, template.trawls)):
            acf = sample_acf(series, i, lags)
            estimate = fit_trawl(acf, family, series.delta, options.n_starts, options.max_iter,
                                 options.log_regression_start)
            fits.append(TrawlFit(label=label, trawl=estimate.trawl, residual=estimate.residual,
                                 leb=estimate.trawl.leb()))
        return fits

    trawl_fits = _stage("trawl", trawl_stage)
    trawls = [f.trawl for f in trawl_fits]

    def marginal_stage() -> MarginalFit:
        moments = [sample_cumulants(series, i, order=2) for i in range(series.n_components)]
        return fit_marginal([m[0] for m in moments], [m[1] for m in moments],
                            [f.leb for f in trawl_fits], template.seed, series.labels)

    marginal = _stage("marginal", marginal_stage)
    dependence = _stage(
        "dependence", lambda: fit_dependence(series, trawls, marginal, template.seed, options.eps_quad)
    )
    model = _stage("model", lambda: MivtModel(trawls=trawls, seed=build_seed(template.seed, marginal, dependence)))

    diagnostics = {
        "trawl_residuals": [f.residual for f in trawl_fits],
        "leb": [f.leb for f in trawl_fits],
        "r0": dependence.r0,
        "kappa_implied": marginal.kappa_implied,
        "pair_estimates": dependence.pair_estimates,
        "dependence_spread": dependence.spread,
        "floored": dependence.floored,
    }
    metadata = FitMetadata(
        labels=series.labels,
        trawl_families=template.trawls,
        seed_family=template.seed,
        lags=lags,
        length=series.length,
        delta=series.delta,
    )
    return FitReport(model=model, trawl=trawl_fits, marginal=marginal, dependence=dependence,
                     diagnostics=diagnostics, metadata=metadata)
