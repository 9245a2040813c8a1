"""
Modified Bessel function of the third kind.

Thin validated layer over the AMOS routines exposed by ``scipy.special``. Ratios are
formed from the exponentially scaled ``kve`` so that the GIG trawl family stays finite
for arguments where ``kv`` itself under- or overflows.
"""

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from mivt.exceptions import BesselRangeError, DomainError


def bessel_k(nu: float, x: float) -> float:
    """
    Evaluate K_nu(x) for real order nu and x > 0.

    Args:
        nu: Real order; K is symmetric in nu.
        x: Positive argument.

    Returns:
        K_nu(x) as a positive float.

    Raises:
        DomainError: If x is not strictly positive.
        BesselRangeError: If the value overflows or underflows double precision.
    """
    if not x > 0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    value = float(special.kv(abs(nu), x))
    if not np.isfinite(value):
        raise BesselRangeError(f"K_{nu}({x}) overflows double precision")
    if value == 0.0:
        raise BesselRangeError(f"K_{nu}({x}) underflows double precision")
    return value


def log_bessel_k(nu: float, x: ArrayLike) -> np.ndarray:
    """log K_nu(x), computed from the scaled function to avoid underflow."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("log_bessel_k requires x > 0")
    scaled = special.kve(abs(nu), x)
    if np.any(~np.isfinite(scaled)) or np.any(scaled == 0.0):
        raise BesselRangeError(f"K_{nu} is out of range on the requested arguments")
    return np.log(scaled) - x


def bessel_k_ratio(nu: float, numerator_x: ArrayLike, denominator_x: float) -> np.ndarray:
    """K_nu(numerator_x) / K_nu(denominator_x), elementwise in ``numerator_x``."""
    return np.exp(log_bessel_k(nu, numerator_x) - log_bessel_k(nu, denominator_x))
