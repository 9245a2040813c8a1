from .bessel import bessel_k, bessel_k_ratio, log_bessel_k
from .quadrature import DEFAULT_EPS_QUAD, trawl_overlap

__all__ = [
    "bessel_k",
    "bessel_k_ratio",
    "log_bessel_k",
    "DEFAULT_EPS_QUAD",
    "trawl_overlap",
]
