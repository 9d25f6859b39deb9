"""Multi-layer network core.

This module contains the graph data model and its descriptive statistics:
- actors, layers and layer combinations
- per-layer symmetric adjacency with idempotent edge insertion
- flattening of a combination into a single-layer graph
- per-layer and flattened statistics
"""

__all__ = [
    "ActorId",
    "LayerId",
    "LayerSet",
    "FlattenedGraph",
    "MultilayerNetwork",
    "DEFAULT_LAYER_CAP",
    "LayerStats",
    "FlattenStats",
    "connected_components",
    "layer_stats",
    "flatten_stats",
]

from .model import DEFAULT_LAYER_CAP, ActorId, FlattenedGraph, LayerId, LayerSet, MultilayerNetwork
from .stats import FlattenStats, LayerStats, connected_components, flatten_stats, layer_stats
