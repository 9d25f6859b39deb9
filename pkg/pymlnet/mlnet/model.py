"""Multi-layer network data model.

A multi-layer network (the super-sociomatrix) is a fixed set of actors with
one undirected simple graph per layer over that set. Construction is
single-writer; ``freeze`` ends it, after which the network is immutable and
can be shared by concurrent read-only analyses.

Classes:
    ActorId: Dense actor index with a unique display label.
    LayerId: Dense layer index with a unique display name.
    LayerSet: A subset of layers, i.e. one element of the power-sociomatrix.
    FlattenedGraph: The union of the edge sets of a combination of layers.
    MultilayerNetwork: Actors, layers and per-layer symmetric adjacency.
"""

import logging
import threading
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import networkx as nx

from .exceptions import (
    EmptyLayerSetError,
    LayerCapError,
    NetworkFrozenError,
    SelfLoopError,
    UnknownActorError,
    UnknownLayerError,
)

logger = logging.getLogger(__name__)

DEFAULT_LAYER_CAP = 16

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class ActorId:
    index: int
    label: str = field(compare=False)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, order=True)
class LayerId:
    index: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class LayerSet:
    """A set of layers, stored sorted by layer index.

    Attributes:
        layers: Member layers in ascending index order.
    """

    layers: tuple[LayerId, ...]

    @classmethod
    def of(cls, layers: Iterable[LayerId]) -> "LayerSet":
        return cls(tuple(sorted(set(layers))))

    @property
    def mask(self) -> int:
        """Bit-indexed representation: bit ``i`` is set iff layer ``i`` is a member."""
        mask = 0
        for layer in self.layers:
            mask |= 1 << layer.index
        return mask

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(layer.index for layer in self.layers)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(layer.name for layer in self.layers)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order by cardinality, then lexicographically by layer index."""
        return len(self.layers), self.indices

    def union(self, other: "LayerSet") -> "LayerSet":
        return LayerSet.of((*self.layers, *other.layers))

    def isdisjoint(self, other: "LayerSet") -> bool:
        return not self.mask & other.mask

    def issubset(self, other: "LayerSet") -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, layer: object) -> bool:
        return layer in self.layers

    def __iter__(self) -> Iterator[LayerId]:
        return iter(self.layers)

    def __len__(self) -> int:
        return len(self.layers)

    def __bool__(self) -> bool:
        return bool(self.layers)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names) + "}"


@dataclass(frozen=True)
class FlattenedGraph:
    """A combination of layers merged into a single-layer graph.

    Attributes:
        graph: Undirected ``networkx.Graph`` over every actor index (isolated actors included);
            each node carries its ``label``.
        layers: The originating combination.
        actors: Every actor of the network, in index order.
    """

    graph: nx.Graph
    layers: LayerSet
    actors: tuple[ActorId, ...]

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.graph.edges())

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def active_actors(self) -> tuple[ActorId, ...]:
        """Actors with degree at least one in this graph."""
        return tuple(a for a in self.actors if self.graph.degree(a.index) > 0)


class MultilayerNetwork:
    """A fixed actor set with one undirected simple graph per layer.

    Args:
        actors (Iterable[str]): Initial actor labels, in index order.
        layers (Iterable[str]): Initial layer names, in index order.
        layer_cap (int): Maximum number of layers. Default is 16.

    Attributes:
        layer_cap (int): Maximum number of layers.
        frozen (bool): Whether construction has ended.
    """

    def __init__(
        self, actors: Iterable[str] = (), layers: Iterable[str] = (), layer_cap: int = DEFAULT_LAYER_CAP
    ) -> None:
        self.layer_cap = layer_cap
        self.frozen = False

        self._actors: list[ActorId] = []
        self._actors_by_label: dict[str, ActorId] = {}
        self._layers: list[LayerId] = []
        self._layers_by_name: dict[str, LayerId] = {}
        # adjacency[layer][actor] -> neighbor indices
        self._adjacency: list[list[set[int]]] = []
        self._edge_counts: list[int] = []

        self._lock = threading.Lock()
        self._edge_set_cache: dict[int, frozenset[Edge]] = {}
        self._multi_adjacency: tuple[tuple[tuple[int, int], ...], ...] | None = None

        for label in actors:
            self.add_actor(label)
        for name in layers:
            self.add_layer(name)

    # ------------------------------------------------------------------ construction
    def add_actor(self, label: str) -> ActorId:
        """Add an actor, or return the existing one with the same label."""
        if (actor := self._actors_by_label.get(label)) is not None:
            return actor
        self._check_mutable()
        if not isinstance(label, str) or not label.strip():
            raise ValueError(f"actor labels must be non-empty strings, got {label!r}")

        actor = ActorId(len(self._actors), label)
        self._actors.append(actor)
        self._actors_by_label[label] = actor
        for adjacency in self._adjacency:
            adjacency.append(set())
        return actor

    def add_layer(self, name: str) -> LayerId:
        """Add a layer, or return the existing one with the same name."""
        if (layer := self._layers_by_name.get(name)) is not None:
            return layer
        self._check_mutable()
        if not isinstance(name, str) or not name.strip():
            raise ValueError(f"layer names must be non-empty strings, got {name!r}")
        if len(self._layers) + 1 > self.layer_cap:
            raise LayerCapError(len(self._layers) + 1, self.layer_cap)

        layer = LayerId(len(self._layers), name)
        self._layers.append(layer)
        self._layers_by_name[name] = layer
        self._adjacency.append([set() for _ in self._actors])
        self._edge_counts.append(0)
        return layer

    def add_edge(self, layer: LayerId | str | int, u: ActorId | str | int, v: ActorId | str | int) -> None:
        """Add the undirected edge ``u - v`` to ``layer``.

        Re-adding an existing edge (in either direction) is a no-op.

        Raises:
            SelfLoopError: If ``u`` and ``v`` are the same actor.
            UnknownActorError, UnknownLayerError: If a reference cannot be resolved.
            NetworkFrozenError: If the network is frozen.
        """
        self._check_mutable()
        layer_id, a, b = self.layer(layer), self.actor(u), self.actor(v)
        if a == b:
            raise SelfLoopError(layer_id.name, a.label)

        adjacency = self._adjacency[layer_id.index]
        if b.index in adjacency[a.index]:
            logger.debug("duplicate edge %s-%s in layer %s ignored", a.label, b.label, layer_id.name)
            return
        adjacency[a.index].add(b.index)
        adjacency[b.index].add(a.index)
        self._edge_counts[layer_id.index] += 1

    def freeze(self) -> "MultilayerNetwork":
        """End construction. Idempotent; returns the network itself."""
        self.frozen = True
        return self

    def _check_mutable(self) -> None:
        if self.frozen:
            raise NetworkFrozenError()

    # ------------------------------------------------------------------ lookups
    @property
    def actors(self) -> tuple[ActorId, ...]:
        return tuple(self._actors)

    @property
    def layers(self) -> tuple[LayerId, ...]:
        return tuple(self._layers)

    @property
    def num_actors(self) -> int:
        return len(self._actors)

    @property
    def num_layers(self) -> int:
        return len(self._layers)

    def actor(self, ref: ActorId | str | int) -> ActorId:
        """Resolve an actor by ``ActorId``, index or label."""
        if isinstance(ref, ActorId):
            if 0 <= ref.index < len(self._actors) and self._actors[ref.index].label == ref.label:
                return self._actors[ref.index]
        elif isinstance(ref, str):
            if ref in self._actors_by_label:
                return self._actors_by_label[ref]
        elif isinstance(ref, int) and 0 <= ref < len(self._actors):
            return self._actors[ref]
        raise UnknownActorError(ref)

    def layer(self, ref: LayerId | str | int) -> LayerId:
        """Resolve a layer by ``LayerId``, index or name."""
        if isinstance(ref, LayerId):
            if 0 <= ref.index < len(self._layers) and self._layers[ref.index].name == ref.name:
                return self._layers[ref.index]
        elif isinstance(ref, str):
            if ref in self._layers_by_name:
                return self._layers_by_name[ref]
        elif isinstance(ref, int) and 0 <= ref < len(self._layers):
            return self._layers[ref]
        raise UnknownLayerError(ref)

    def layer_set(self, refs: Iterable[LayerId | str | int]) -> LayerSet:
        return LayerSet.of(self.layer(r) for r in refs)

    def all_layers(self) -> LayerSet:
        """The super-sociomatrix as a combination."""
        return LayerSet(tuple(self._layers))

    # ------------------------------------------------------------------ adjacency
    def neighbors(self, layer: LayerId | str | int, actor: ActorId | str | int) -> frozenset[ActorId]:
        layer_id, a = self.layer(layer), self.actor(actor)
        return frozenset(self._actors[i] for i in self._adjacency[layer_id.index][a.index])

    def neighbor_indices(self, layer_index: int, actor_index: int) -> frozenset[int]:
        return frozenset(self._adjacency[layer_index][actor_index])

    def degree(self, layer: LayerId | str | int, actor: ActorId | str | int) -> int:
        return len(self._adjacency[self.layer(layer).index][self.actor(actor).index])

    def edge_count(self, layer: LayerId | str | int) -> int:
        return self._edge_counts[self.layer(layer).index]

    def edges(self, layer: LayerId | str | int) -> tuple[Edge, ...]:
        """Edges of one layer as ``(u, v)`` index pairs with ``u < v``, sorted."""
        adjacency = self._adjacency[self.layer(layer).index]
        return tuple((u, v) for u in range(len(adjacency)) for v in sorted(adjacency[u]) if u < v)

    def edge_set(self, layers: LayerSet) -> frozenset[Edge]:
        """Union of the member layers' edge sets (cached once the network is frozen)."""
        if not layers:
            raise EmptyLayerSetError("edge_set")
        for layer in layers:
            self.layer(layer)

        mask = layers.mask
        if self.frozen and (cached := self._edge_set_cache.get(mask)) is not None:
            return cached

        edges: set[Edge] = set()
        for layer in layers:
            edges.update(self.edges(layer))
        result = frozenset(edges)

        if self.frozen:
            with self._lock:
                self._edge_set_cache[mask] = result
        return result

    def multi_adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per actor, every ``(neighbor, layer)`` pair, sorted; one entry per layer an edge belongs to."""
        if self._multi_adjacency is not None:
            return self._multi_adjacency

        result = tuple(
            tuple(sorted((v, layer) for layer in range(len(self._layers)) for v in self._adjacency[layer][u]))
            for u in range(len(self._actors))
        )
        if self.frozen:
            self._multi_adjacency = result
        return result

    # ------------------------------------------------------------------ flattening
    def flatten(self, layers: LayerSet) -> FlattenedGraph:
        """Merge a nonempty combination of layers into a single-layer graph.

        Raises:
            EmptyLayerSetError: If ``layers`` is empty.
        """
        if not layers:
            raise EmptyLayerSetError("flatten")

        graph = nx.Graph()
        graph.add_nodes_from((a.index, {"label": a.label}) for a in self._actors)
        graph.add_edges_from(sorted(self.edge_set(layers)))
        return FlattenedGraph(graph=graph, layers=layers, actors=self.actors)

    def __eq__(self, other: object) -> bool:
        # Equal iff same actor labels, layer names and per-layer edges, all in the same index order.
        if not isinstance(other, MultilayerNetwork):
            return NotImplemented
        return (
            [a.label for a in self._actors] == [a.label for a in other._actors]
            and [la.name for la in self._layers] == [la.name for la in other._layers]
            and all(self.edges(la) == other.edges(la) for la in self._layers)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"MultilayerNetwork(actors={self.num_actors}, layers={[la.name for la in self._layers]}, "
            f"edges={self._edge_counts}, frozen={self.frozen})"
        )
