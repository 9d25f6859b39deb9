"""Descriptive statistics of layers and flattened combinations.

Per-layer statistics are computed over the *active* actors of the layer
(degree at least one): both the component count and the average degree.
Statistics of a flattened combination divide by *all* actors instead.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .exceptions import EmptyLayerSetError
from .model import FlattenedGraph, LayerId, LayerSet, MultilayerNetwork

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayerStats:
    layer: LayerId
    edge_count: int
    component_count: int
    avg_degree_active: Fraction
    active_actor_count: int


@dataclass(frozen=True)
class FlattenStats:
    """Summary of a flattened combination of layers.

    Attributes:
        layers: The flattened combination.
        actor_count: Number of actors in the network.
        edge_count: Distinct undirected edges of the union.
        directed_edge_count: ``2 * edge_count``, the convention counting each tie in both directions.
        layer_edge_sum: Sum of the member layers' edge counts (edges shared by layers counted once per layer).
        active_actor_count: Actors with at least one edge in the union.
        avg_degree_all: ``2 * edge_count / actor_count``, over all actors.
        diameter: Largest eccentricity within the largest connected component (0 without edges).
        component_count: Connected components among the active actors.
    """

    layers: LayerSet
    actor_count: int
    edge_count: int
    directed_edge_count: int
    layer_edge_sum: int
    active_actor_count: int
    avg_degree_all: Fraction
    diameter: int
    component_count: int


def connected_components(graph: FlattenedGraph | nx.Graph, active_only: bool = False) -> tuple[tuple[int, ...], ...]:
    """Partition the actors of a graph into connected components.

    Args:
        graph: A flattened graph or a plain networkx graph over actor indices.
        active_only: Drop actors without edges before partitioning.

    Returns:
        Components as sorted tuples of actor indices, ordered by their smallest member.
    """
    g = graph.graph if isinstance(graph, FlattenedGraph) else graph
    if active_only:
        g = g.subgraph([n for n in g.nodes if g.degree(n) > 0])
    return tuple(sorted((tuple(sorted(c)) for c in nx.connected_components(g)), key=lambda c: c[0]))


def layer_stats(network: MultilayerNetwork, layer: LayerId | str | int) -> LayerStats:
    """Edge count, components and average degree of one layer over its active actors.

    An empty layer yields zero for every field.
    """
    layer_id = network.layer(layer)
    flat = network.flatten(LayerSet((layer_id,)))

    edge_count = flat.edge_count
    active = len(flat.active_actors())
    components = connected_components(flat, active_only=True)
    avg = Fraction(2 * edge_count, active) if active else Fraction(0)

    logger.debug("layer %s: %d edges, %d active actors", layer_id.name, edge_count, active)
    return LayerStats(
        layer=layer_id,
        edge_count=edge_count,
        component_count=len(components),
        avg_degree_active=avg,
        active_actor_count=active,
    )


def flatten_stats(network: MultilayerNetwork, layers: LayerSet) -> FlattenStats:
    """Summarize the flattened combination ``layers``.

    Raises:
        EmptyLayerSetError: If ``layers`` is empty.
    """
    if not layers:
        raise EmptyLayerSetError("flatten_stats")
    flat = network.flatten(layers)

    edge_count = flat.edge_count
    actor_count = network.num_actors
    components = connected_components(flat, active_only=True)

    diameter = 0
    if components:
        # Ties on size go to the component holding the smallest actor index.
        largest = max(components, key=len)
        diameter = nx.diameter(flat.graph.subgraph(largest)) if len(largest) > 1 else 0

    return FlattenStats(
        layers=layers,
        actor_count=actor_count,
        edge_count=edge_count,
        directed_edge_count=2 * edge_count,
        layer_edge_sum=sum(network.edge_count(layer) for layer in layers),
        active_actor_count=len(flat.active_actors()),
        avg_degree_all=Fraction(2 * edge_count, actor_count) if actor_count else Fraction(0),
        diameter=diameter,
        component_count=len(components),
    )
