from .bootstrap import bootstrap, percentile_intervals
from .dependence_fit import estimate_dependence, fit_dependence
from .marginal_fit import fit_marginal
from .mc_study import McStudyResult, mc_study, summarize_estimates
from .replicates import run_replicates, template_of
from .trawl_fit import TrawlEstimate, fit_trawl, log_regression_rate
from .two_stage import build_seed, fit

__all__ = [
    "bootstrap",
    "percentile_intervals",
    "estimate_dependence",
    "fit_dependence",
    "fit_marginal",
    "McStudyResult",
    "mc_study",
    "summarize_estimates",
    "run_replicates",
    "template_of",
    "TrawlEstimate",
    "fit_trawl",
    "log_regression_rate",
    "build_seed",
    "fit",
]
