"""Initialization."""

__all__ = [
    "LengthVector",
    "Label",
    "ParetoFront",
    "MLPath",
    "dominates",
    "pareto_filter",
    "ParetoPathEngine",
    "SourceLabels",
    "DEFAULT_PATH_CAP",
]

from .length_vector import Label, LengthVector, MLPath, ParetoFront, dominates, pareto_filter
from .pareto import DEFAULT_PATH_CAP, ParetoPathEngine, SourceLabels
