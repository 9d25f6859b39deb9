"""Pareto-optimal multi-layer shortest paths.

The multi-layer distance between two actors is not a number but a set of
mutually incomparable length vectors, each realized by one or more
layer-annotated paths. Layer switches are free at every node, and two paths
with the same node sequence but different layers are distinct paths.

Fronts are computed by multi-objective label setting with unit costs:
labels are settled level by level in nondecreasing total length; at each
actor only non-dominated vectors survive, and labels reaching an actor with
the same vector merge by summing their path counts. Every prefix of an
efficient path is efficient and every efficient path is simple, so the
merged counts are exact counts of simple efficient paths.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from ..mlnet.exceptions import OptionsError, PathCapExceededError, SameEndpointError
from ..mlnet.model import ActorId, MultilayerNetwork
from .length_vector import MLPath, ParetoFront, dominates

logger = logging.getLogger(__name__)

DEFAULT_PATH_CAP = 10**6

Vector = tuple[int, ...]
LabelKey = tuple[int, Vector]


@dataclass
class SourceLabels:
    """Settled labels of one label-setting run.

    Attributes:
        source: Source actor index.
        fronts: Per actor index, the settled ``vector -> path count`` map (the Pareto front from ``source``).
        parents: Per settled label, the ``(actor, vector, layer)`` labels it was extended from.
        order: Settled labels in processing order (nondecreasing total), the source label first.
    """

    source: int
    fronts: list[dict[Vector, int]]
    parents: dict[LabelKey, list[tuple[int, Vector, int]]]
    order: list[LabelKey]


class ParetoPathEngine:
    """Pareto fronts and efficient paths over a frozen multi-layer network.

    Args:
        network (MultilayerNetwork): The network; it is frozen on entry.
        options (dict[str, Any] | None): Options. Default is None.

    Attributes:
        path_cap (int): Default cap for ``enumerate_efficient_paths``. Default is 10**6.
    """

    def __init__(self, network: MultilayerNetwork, options: dict[str, Any] | None = None) -> None:
        if options is None:
            options = {}
        self.path_cap = options.get("path_cap", DEFAULT_PATH_CAP)

        self.network = network.freeze()
        self._adjacency = network.multi_adjacency()
        self._zero: Vector = (0,) * network.num_layers

    def source_labels(self, source: ActorId | str | int) -> SourceLabels:
        """Run label setting from ``source`` towards every other actor."""
        s = self.network.actor(source).index
        adjacency = self._adjacency

        fronts: list[dict[Vector, int]] = [{} for _ in range(self.network.num_actors)]
        fronts[s][self._zero] = 1
        parents: dict[LabelKey, list[tuple[int, Vector, int]]] = {(s, self._zero): []}
        order: list[LabelKey] = [(s, self._zero)]

        level = [(s, self._zero)]
        while level:
            candidates: dict[int, dict[Vector, int]] = {}
            arcs: dict[LabelKey, list[tuple[int, Vector, int]]] = {}
            for u, vec in level:
                count = fronts[u][vec]
                for v, layer in adjacency[u]:
                    new = (*vec[:layer], vec[layer] + 1, *vec[layer + 1 :])
                    bucket = candidates.setdefault(v, {})
                    bucket[new] = bucket.get(new, 0) + count
                    arcs.setdefault((v, new), []).append((u, vec, layer))

            level = []
            for v in sorted(candidates):
                settled = fronts[v]
                # Settled labels have a smaller total; same-level vectors cannot dominate each other.
                survivors = [
                    (vec, count)
                    for vec, count in sorted(candidates[v].items())
                    if not any(dominates(old, vec) for old in settled)
                ]
                for vec, count in survivors:
                    settled[vec] = count
                    parents[(v, vec)] = arcs[(v, vec)]
                    order.append((v, vec))
                    level.append((v, vec))

        logger.debug("source %d: %d settled labels", s, len(order))
        return SourceLabels(source=s, fronts=fronts, parents=parents, order=order)

    def fronts_from(self, source: ActorId | str | int) -> dict[ActorId, ParetoFront]:
        """Pareto fronts from ``source`` to every other actor (empty when unreachable)."""
        labels = self.source_labels(source)
        return {
            actor: ParetoFront.from_counts(labels.fronts[actor.index])
            for actor in self.network.actors
            if actor.index != labels.source
        }

    def pareto_front(self, s: ActorId | str | int, t: ActorId | str | int) -> ParetoFront:
        """Non-dominated length vectors from ``s`` to ``t`` with exact path counts.

        Raises:
            SameEndpointError: If ``s`` and ``t`` are the same actor.
        """
        source, target = self.network.actor(s), self.network.actor(t)
        if source == target:
            raise SameEndpointError(source.label)
        return ParetoFront.from_counts(self.source_labels(source).fronts[target.index])

    def enumerate_efficient_paths(
        self, s: ActorId | str | int, t: ActorId | str | int, cap: int | None = None
    ) -> list[MLPath]:
        """Materialize every path whose vector lies on the Pareto front of ``s`` and ``t``.

        Args:
            s: Source actor.
            t: Target actor.
            cap: Maximum number of paths; defaults to ``path_cap``.

        Returns:
            Paths grouped by front vector (front order), each group in a deterministic order.

        Raises:
            SameEndpointError: If ``s`` and ``t`` are the same actor.
            PathCapExceededError: If the number of efficient paths exceeds ``cap``.
        """
        if cap is None:
            cap = self.path_cap
        if cap < 1:
            raise OptionsError(f"path cap must be at least 1, got {cap}")

        source, target = self.network.actor(s), self.network.actor(t)
        if source == target:
            raise SameEndpointError(source.label)

        labels = self.source_labels(source)
        front = labels.fronts[target.index]
        if (count := sum(front.values())) > cap:
            raise PathCapExceededError(count, cap)

        actors, layers = self.network.actors, self.network.layers
        paths = []
        for vec in sorted(front, reverse=True):
            for nodes, steps in self._walk_back(labels, (target.index, vec)):
                paths.append(MLPath(tuple(actors[i] for i in nodes), tuple(layers[j] for j in steps)))
        return paths

    def _walk_back(self, labels: SourceLabels, key: LabelKey) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        node, _ = key
        if node == labels.source:
            yield (node,), ()
            return
        for u, parent_vec, layer in labels.parents[key]:
            for nodes, steps in self._walk_back(labels, (u, parent_vec)):
                yield (*nodes, node), (*steps, layer)
