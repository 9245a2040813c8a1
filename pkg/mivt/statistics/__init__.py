from .goodness_of_fit import marginal_goodness_of_fit
from .moments import sample_acf, sample_autocovariance, sample_ccov, sample_cumulants, summarize

__all__ = [
    "marginal_goodness_of_fit",
    "sample_acf",
    "sample_autocovariance",
    "sample_ccov",
    "sample_cumulants",
    "summarize",
]
