"""PyMLNet - multi-layer social network analysis.

This package models a social network as several layers (relation types) over
one set of actors and provides:
- Pareto-optimal multi-layer shortest paths with exact path counts
- multi-layer and classic betweenness, and how their rankings differ
- coverage and Jaccard similarity over all combinations of layers
- Louvain clusterability of every combination of layers
- an edge-list reader and writer, and the ``pymlnet`` command line

The main entry points are ``MultilayerNetwork`` and ``load``.
"""

__all__ = [
    "MultilayerNetwork",
    "LayerSet",
    "load",
    "load_fixture",
    "save",
    "ParetoPathEngine",
    "MultilayerBetweenness",
    "NetworkPortfolio",
    "Clusterability",
    "MLNetError",
]

from .centrality import MultilayerBetweenness
from .clustering import Clusterability
from .io import load, load_fixture, save
from .mlnet import LayerSet, MultilayerNetwork
from .mlnet.exceptions import MLNetError
from .paths import ParetoPathEngine
from .portfolio import NetworkPortfolio
