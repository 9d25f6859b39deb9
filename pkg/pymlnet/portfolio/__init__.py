"""Initialization."""

__all__ = [
    "combinations",
    "combination_label",
    "layer_codes",
    "legend",
    "CoverageResult",
    "JaccardResult",
    "NetworkPortfolio",
]

from .combinations import combination_label, combinations, layer_codes, legend
from .coverage import CoverageResult, JaccardResult, NetworkPortfolio
