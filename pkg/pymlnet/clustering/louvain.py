"""Modularity-based community detection and the clusterability sweep.

Each combination of layers is flattened and clustered with multilevel
(Louvain) modularity optimization at resolution 1 on the unweighted graph.
Isolated actors are left out of the modularity graph and reported as
unassigned. The node visit order is drawn from ``seed``, so a run is
reproducible for a fixed seed and input.
"""

import logging
from collections import Counter
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import networkx as nx

from ..mlnet.exceptions import ModularityUndefinedError
from ..mlnet.model import ActorId, FlattenedGraph, LayerSet, MultilayerNetwork
from ..portfolio.combinations import combinations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommunityAssignment:
    """A partition of the active actors of a flattened graph.

    Attributes:
        membership: Actor -> community index; indices are dense from 0, ordered by smallest member.
        modularity: Newman modularity Q of the partition, exact.
        cluster_count: Number of communities.
        unassigned: Isolated actors, outside the modularity graph.
    """

    membership: Mapping[ActorId, int]
    modularity: Fraction
    cluster_count: int
    unassigned: tuple[ActorId, ...]

    def communities(self) -> list[tuple[ActorId, ...]]:
        groups: dict[int, list[ActorId]] = {}
        for actor, community in sorted(self.membership.items()):
            groups.setdefault(community, []).append(actor)
        return [tuple(groups[c]) for c in sorted(groups)]


@dataclass(frozen=True)
class ClusterabilityRow:
    combination: LayerSet
    cluster_count: int
    modularity: Fraction | None


def newman_modularity(graph: nx.Graph, membership: Mapping[int, int]) -> Fraction:
    """``Q = sum_c [ m_c / m - (d_c / 2m)**2 ]`` for an unweighted graph.

    ``m_c`` is the number of edges inside community ``c`` and ``d_c`` the degree sum of its members.

    Raises:
        ModularityUndefinedError: If the graph has no edges.
    """
    m = graph.number_of_edges()
    if m == 0:
        raise ModularityUndefinedError()

    internal: Counter[int] = Counter()
    degree_sum: Counter[int] = Counter()
    for u, v in graph.edges():
        if membership[u] == membership[v]:
            internal[membership[u]] += 1
    for node, degree in graph.degree():
        degree_sum[membership[node]] += degree

    return sum((Fraction(internal[c], m) - Fraction(degree_sum[c], 2 * m) ** 2 for c in degree_sum), Fraction(0))


def louvain(flat: FlattenedGraph, seed: int = 0) -> CommunityAssignment:
    """Multilevel modularity optimization of a flattened graph.

    Raises:
        ModularityUndefinedError: If the graph has no edges.
    """
    if flat.edge_count == 0:
        raise ModularityUndefinedError()

    active = flat.active_actors()
    graph = flat.graph.subgraph(a.index for a in active)
    communities = nx.community.louvain_communities(graph, resolution=1, seed=seed)

    ordered = sorted((sorted(c) for c in communities), key=lambda c: c[0])
    by_index = {node: i for i, community in enumerate(ordered) for node in community}
    q = newman_modularity(graph, by_index)
    if q < 0:
        # The all-in-one partition has Q = 0.
        by_index = dict.fromkeys(graph.nodes, 0)
        q = newman_modularity(graph, by_index)

    actors = flat.actors
    membership = {actors[i]: c for i, c in sorted(by_index.items())}
    return CommunityAssignment(
        membership=membership,
        modularity=q,
        cluster_count=len(set(by_index.values())),
        unassigned=tuple(a for a in actors if a.index not in by_index),
    )


class Clusterability:
    """Louvain clustering of every combination of layers.

    Args:
        network (MultilayerNetwork): The network; it is frozen on entry.
        options (dict[str, Any] | None): Options. Default is None.

    Attributes:
        seed (int): Louvain node-order seed. Default is 0.
        max_workers (int): Thread-pool width over combinations. Default is 1.
    """

    def __init__(self, network: MultilayerNetwork, options: dict[str, Any] | None = None) -> None:
        if options is None:
            options = {}
        self.seed = options.get("seed", 0)
        self.max_workers = options.get("max_workers", 1)

        self.network = network.freeze()

    def row(self, combination: LayerSet) -> ClusterabilityRow:
        flat = self.network.flatten(combination)
        if flat.edge_count == 0:
            logger.debug("combination %s has no edges; modularity left empty", combination)
            return ClusterabilityRow(combination, 0, None)
        assignment = louvain(flat, self.seed)
        return ClusterabilityRow(combination, assignment.cluster_count, assignment.modularity)

    def sweep(self) -> list[ClusterabilityRow]:
        """One row per nonempty combination, in combination order."""
        combos = combinations(self.network)
        logger.info("clustering %d combinations of %d layers", len(combos), self.network.num_layers)
        if self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                return list(pool.map(self.row, combos))
        return [self.row(combo) for combo in combos]


def clusterability_sweep(
    network: MultilayerNetwork, seed: int = 0, options: dict[str, Any] | None = None
) -> list[ClusterabilityRow]:
    options = {**(options or {}), "seed": seed}
    return Clusterability(network, options).sweep()


def most_clusterable(rows: list[ClusterabilityRow]) -> ClusterabilityRow | None:
    """The row with the highest modularity; ties go to the earlier row."""
    best = None
    for row in rows:
        if row.modularity is not None and (best is None or row.modularity > best.modularity):
            best = row
    return best
