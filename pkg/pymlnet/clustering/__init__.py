"""Initialization."""

__all__ = [
    "CommunityAssignment",
    "ClusterabilityRow",
    "Clusterability",
    "newman_modularity",
    "louvain",
    "clusterability_sweep",
    "most_clusterable",
]

from .louvain import (
    Clusterability,
    ClusterabilityRow,
    CommunityAssignment,
    clusterability_sweep,
    louvain,
    most_clusterable,
    newman_modularity,
)
