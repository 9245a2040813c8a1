"""
Simulation and moment-based inference for multivariate integer-valued trawl processes.
"""

from .models import CountSeries, FitReport, MivtModel, SimConfig
from .service import MivtService

__all__ = ["CountSeries", "FitReport", "MivtModel", "SimConfig", "MivtService"]
