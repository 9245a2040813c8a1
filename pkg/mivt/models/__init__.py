from .count_series import CountSeries
from .mivt_model import MivtModel
from .sim_config import SimConfig
from .moment_summary import ComponentSummary, MomentSummary
from .options import BootstrapOptions, FitOptions, ModelTemplate
from .fit_report import ConfidenceInterval, DependenceFit, FitMetadata, FitReport, MarginalFit, TrawlFit

__all__ = [
    "CountSeries",
    "MivtModel",
    "SimConfig",
    "ComponentSummary",
    "MomentSummary",
    "BootstrapOptions",
    "FitOptions",
    "ModelTemplate",
    "ConfidenceInterval",
    "DependenceFit",
    "FitMetadata",
    "FitReport",
    "MarginalFit",
    "TrawlFit",
]
