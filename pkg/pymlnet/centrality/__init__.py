"""Initialization."""

__all__ = [
    "BetweennessScore",
    "MultilayerBetweenness",
    "classic_betweenness",
    "ml_betweenness_all",
    "RankDelta",
    "RankCorrelation",
    "rank_positions",
    "rank_deltas",
    "rank_delta_report",
    "rank_correlation",
]

from .betweenness import BetweennessScore, MultilayerBetweenness, classic_betweenness, ml_betweenness_all
from .ranking import RankCorrelation, RankDelta, rank_correlation, rank_delta_report, rank_deltas, rank_positions
