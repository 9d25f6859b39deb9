"""Multi-layer and classic betweenness centrality.

Multi-layer betweenness of an actor is the raw number of efficient
(Pareto-optimal) paths, over all unordered actor pairs, that have the actor
as an interior node. It is accumulated per source on the label graph of the
label-setting run, the same way Brandes accumulates dependencies on the
shortest-path DAG: the settled labels form a DAG whose root-to-label paths
are exactly the efficient paths from the source.

Classic betweenness is Brandes' algorithm on a flattened graph, in two
flavours: ``fractional`` (Freeman pair fractions) and ``count`` (raw number of
shortest paths through the actor). On a one-layer network multi-layer
betweenness equals the ``count`` flavour.
"""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..mlnet.exceptions import OptionsError
from ..mlnet.model import ActorId, FlattenedGraph, MultilayerNetwork
from ..paths.pareto import LabelKey, ParetoPathEngine

logger = logging.getLogger(__name__)

CLASSIC_MODES = ("fractional", "count")


@dataclass(frozen=True)
class BetweennessScore:
    actor: ActorId
    ml_count: int
    classic_fractional: Fraction
    classic_count: int


def _brandes(flat: FlattenedGraph) -> tuple[dict[int, Fraction], dict[int, int]]:
    """Unordered-pair betweenness of every node, as pair fractions and as raw path counts."""
    graph = flat.graph
    nodes = sorted(graph.nodes)
    neighbors = {u: sorted(graph.adj[u]) for u in nodes}
    fractional = dict.fromkeys(nodes, Fraction(0))
    counts = dict.fromkeys(nodes, 0)

    for s in nodes:
        stack: list[int] = []
        predecessors: dict[int, list[int]] = {v: [] for v in nodes}
        sigma = dict.fromkeys(nodes, 0)
        sigma[s] = 1
        distance = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in neighbors[v]:
                if w not in distance:
                    distance[w] = distance[v] + 1
                    queue.append(w)
                if distance[w] == distance[v] + 1:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)

        # delta: Brandes dependency; omega: number of geodesic continuations below a node.
        delta = dict.fromkeys(nodes, Fraction(0))
        omega = dict.fromkeys(nodes, 0)
        while stack:
            w = stack.pop()
            for v in predecessors[w]:
                delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
                omega[v] += 1 + omega[w]
            if w != s:
                fractional[w] += delta[w]
                counts[w] += sigma[w] * omega[w]

    # Every unordered pair was visited from both ends.
    return {v: x / 2 for v, x in fractional.items()}, {v: x // 2 for v, x in counts.items()}


def classic_betweenness(flat: FlattenedGraph, mode: str = "fractional") -> dict[ActorId, Fraction | int]:
    """Brandes betweenness on a flattened graph.

    Args:
        flat: The flattened graph.
        mode: ``fractional`` returns ``sum_{s<t} sigma_st(v) / sigma_st``;
            ``count`` returns ``sum_{s<t} sigma_st(v)``. Endpoints are excluded and
            disconnected pairs contribute nothing.

    Raises:
        OptionsError: For an unknown mode.
    """
    if mode not in CLASSIC_MODES:
        raise OptionsError(f"unknown classic betweenness mode `{mode}`, expected one of {CLASSIC_MODES}")
    fractional, counts = _brandes(flat)
    scores = fractional if mode == "fractional" else counts
    return {actor: scores[actor.index] for actor in flat.actors}


class MultilayerBetweenness:
    """Multi-layer betweenness over a frozen network.

    Args:
        network (MultilayerNetwork): The network; it is frozen on entry.
        options (dict[str, Any] | None): Options. Default is None.

    Attributes:
        max_workers (int): Thread-pool width for per-source label runs. Default is 1.
        engine (ParetoPathEngine): The label-setting engine.
    """

    def __init__(self, network: MultilayerNetwork, options: dict[str, Any] | None = None) -> None:
        if options is None:
            options = {}
        self.max_workers = options.get("max_workers", 1)

        self.network = network.freeze()
        self.engine = ParetoPathEngine(network, options)
        self._ml_counts: dict[ActorId, int] | None = None

    def _source_contribution(self, source: int) -> list[int]:
        """Efficient paths from ``source`` through each interior actor, over all targets."""
        labels = self.engine.source_labels(source)
        contribution = [0] * self.network.num_actors

        # omega(label): number of label-DAG paths leaving the label, i.e. efficient continuations to any target.
        omega: dict[LabelKey, int] = {}
        for key in reversed(labels.order):
            v, vec = key
            below = omega.get(key, 0)
            if v != labels.source:
                contribution[v] += labels.fronts[v][vec] * below
            for u, parent_vec, _ in labels.parents[key]:
                parent = (u, parent_vec)
                omega[parent] = omega.get(parent, 0) + 1 + below
        return contribution

    def ml_betweenness_all(self) -> dict[ActorId, int]:
        """Number of efficient paths, over unordered actor pairs, with each actor interior."""
        if self._ml_counts is not None:
            return dict(self._ml_counts)

        n = self.network.num_actors
        sources = range(n)
        if self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                contributions = list(pool.map(self._source_contribution, sources))
        else:
            contributions = [self._source_contribution(s) for s in sources]

        totals = [sum(c[v] for c in contributions) for v in range(n)]
        self._ml_counts = {actor: totals[actor.index] // 2 for actor in self.network.actors}
        logger.info("multi-layer betweenness computed for %d actors", n)
        return dict(self._ml_counts)

    def pair_contribution(self, s: ActorId | str | int, t: ActorId | str | int, v: ActorId | str | int) -> int:
        """Efficient ``s``-``t`` paths with ``v`` interior, by concatenating fronts at ``v``.

        Counts ``count(d1) * count(d2)`` over ``d1`` in front(s, v) and ``d2`` in front(v, t)
        whose sum lies on front(s, t).
        """
        source, target, via = (self.network.actor(x) for x in (s, t, v))
        if via in (source, target) or source == target:
            return 0

        from_source = self.engine.source_labels(source).fronts
        from_via = self.engine.source_labels(via).fronts
        front_st = from_source[target.index]

        total = 0
        for d1, c1 in from_source[via.index].items():
            for d2, c2 in from_via[target.index].items():
                if tuple(a + b for a, b in zip(d1, d2, strict=True)) in front_st:
                    total += c1 * c2
        return total

    def betweenness_scores(self) -> list[BetweennessScore]:
        """Multi-layer count and both classic flavours on the all-layer flattening, per actor."""
        ml_counts = self.ml_betweenness_all()
        fractional, counts = _brandes(self.network.flatten(self.network.all_layers()))
        return [
            BetweennessScore(
                actor=actor,
                ml_count=ml_counts[actor],
                classic_fractional=fractional[actor.index],
                classic_count=counts[actor.index],
            )
            for actor in self.network.actors
        ]


def ml_betweenness_all(network: MultilayerNetwork, options: dict[str, Any] | None = None) -> dict[ActorId, int]:
    return MultilayerBetweenness(network, options).ml_betweenness_all()
