"""
MIVT Service

Main service class implementing the file-level use cases of the library: binning
event files, simulating models, fitting, bootstrapping and reporting. It orchestrates
the repositories and the numerical packages; the command-line front end is a thin
layer over it.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd

from mivt.binning import bin_events
from mivt.enums import SeedFamily, TrawlFamily
from mivt.inference import McStudyResult, bootstrap, fit, mc_study
from mivt.interfaces import CountSeriesRepository, EventRepository
from mivt.models import (
    BootstrapOptions,
    CountSeries,
    FitOptions,
    FitReport,
    MivtModel,
    ModelTemplate,
    MomentSummary,
    SimConfig,
)
from mivt.models.goodness_of_fit import MarginalGoodnessOfFit
from mivt.simulation import simulate_mivt
from mivt.statistics import marginal_goodness_of_fit, sample_acf, summarize

logger = logging.getLogger(__name__)

SCHEMAS = {
    "model": MivtModel,
    "sim-config": SimConfig,
    "fit-report": FitReport,
    "moment-summary": MomentSummary,
    "gof": MarginalGoodnessOfFit,
}


class MivtService:
    """
    Main service class for MIVT workflows.

    **Use Cases Implemented:**
    - Bin event files into a count series
    - Simulate a model to a count series
    - Fit a model template to a count series, optionally with bootstrap intervals
    - Export empirical (and fitted) autocorrelations
    - Run a Monte Carlo study of the estimator
    - Summarise a series and check the fitted marginal law

    **Dependencies:**
    - Fit options for every fit and refit
    - Bootstrap options for the bootstrap and the Monte Carlo study
    """

    def __init__(self, fit_options: Optional[FitOptions] = None,
                 bootstrap_options: Optional[BootstrapOptions] = None):
        """
        Initialize the service.

        Args:
            fit_options: Options of the moment fit
            bootstrap_options: Replicate count, level and worker count
        """
        self.fit_options = fit_options or FitOptions()
        self.bootstrap_options = bootstrap_options or BootstrapOptions()

    @staticmethod
    def load_model(path: str | Path) -> MivtModel:
        """Parse a model JSON file {"trawls": [...], "seed": {...}}."""
        return MivtModel.model_validate_json(Path(path).read_text())

    @staticmethod
    def load_report(path: str | Path) -> FitReport:
        return FitReport.model_validate_json(Path(path).read_text())

    def bin(
        self,
        sources: Sequence[EventRepository],
        delta: float,
        start: float,
        end: float,
        output: CountSeriesRepository,
    ) -> CountSeries:
        """
        Bin event sources and store the counts.

        Args:
            sources: One event source per component
            delta: Bin width in seconds
            start: Window start
            end: Window end
            output: Destination of the count series

        Returns:
            The binned series
        """
        series = bin_events([s.load_timestamps() for s in sources], delta, start, end,
                            labels=[s.label for s in sources])
        output.save_series(series)
        logger.info("binned %d components into %d bins", series.n_components, series.length)
        return series

    def simulate(self, model: MivtModel, cfg: SimConfig, output: CountSeriesRepository,
                 labels: Optional[List[str]] = None) -> CountSeries:
        """Simulate a model and store the path."""
        series = simulate_mivt(model, cfg, labels)
        output.save_series(series)
        return series

    def fit(self, source: CountSeriesRepository, trawls: Sequence[TrawlFamily], seed: SeedFamily) -> FitReport:
        """
        Fit a model template to a stored series.

        Args:
            source: Repository holding the series
            trawls: Trawl family per component
            seed: Seed family

        Returns:
            The fit report
        """
        series = source.load_series()
        return fit(series, ModelTemplate(trawls=list(trawls), seed=seed), self.fit_options)

    def bootstrap(self, report: FitReport, seed: int) -> FitReport:
        """Attach parametric bootstrap intervals to a fit."""
        fit_options = self.fit_options.model_copy(update={"lags": report.metadata.lags})
        return bootstrap(report, seed, self.bootstrap_options, fit_options)

    def acf_table(self, source: CountSeriesRepository, component: int | str, max_lag: int,
                  report: Optional[FitReport] = None) -> pd.DataFrame:
        """
        Empirical ACF of one component as a table with columns ``lag, r``.

        With a fit report the table gains ``r_fitted``, the fitted trawl ACF at lag * Delta.
        """
        series = source.load_series()
        index = series.index_of(component)
        lags = list(range(1, max_lag + 1))
        table = pd.DataFrame({"lag": lags, "r": sample_acf(series, index, max_lag)})
        if report is not None:
            trawl = report.model.trawls[index]
            table["r_fitted"] = trawl.acf([lag * series.delta for lag in lags])
        return table

    def mc_study(self, model: MivtModel, reps: int, n_obs: int, delta: float, seed: int) -> McStudyResult:
        return mc_study(model, reps, n_obs, seed, delta, self.fit_options, self.bootstrap_options)

    def summarize(self, source: CountSeriesRepository) -> MomentSummary:
        return summarize(source.load_series())

    def goodness_of_fit(self, source: CountSeriesRepository, report: FitReport,
                        component: int | str) -> MarginalGoodnessOfFit:
        """Chi-square and quantile comparison of a component against its fitted marginal law."""
        series = source.load_series()
        index = series.index_of(component)
        n_fitted = len(report.model.trawls[index].parameters()) + 1
        return marginal_goodness_of_fit(series, report.model, index, n_fitted=n_fitted)

    @staticmethod
    def schemas() -> Dict[str, dict]:
        """JSON schemas of every document the command line reads or writes."""
        return {name: model.model_json_schema() for name, model in SCHEMAS.items()}
