from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ..mlnet.exceptions import DimensionMismatchError
from ..mlnet.model import ActorId, LayerId


@dataclass(frozen=True, order=True)
class LengthVector:
    """Per-layer edge counts of a path: the multi-layer path cost.

    Attributes:
        counts: One nonnegative count per layer, in layer index order.
    """

    counts: tuple[int, ...]

    @classmethod
    def zero(cls, num_layers: int) -> "LengthVector":
        return cls((0,) * num_layers)

    def total(self) -> int:
        return sum(self.counts)

    def step(self, layer_index: int) -> "LengthVector":
        """The vector after traversing one more edge of layer ``layer_index``."""
        counts = list(self.counts)
        counts[layer_index] += 1
        return LengthVector(tuple(counts))

    def __add__(self, other: "LengthVector") -> "LengthVector":
        if len(self.counts) != len(other.counts):
            raise DimensionMismatchError(len(self.counts), len(other.counts))
        return LengthVector(tuple(a + b for a, b in zip(self.counts, other.counts, strict=True)))

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, index: int) -> int:
        return self.counts[index]

    def describe(self, layers: Iterable[LayerId] | None = None) -> str:
        """``(FB:1,Lunch:1)`` with layer names, ``(1,1)`` without."""
        if layers is None:
            return "(" + ",".join(str(c) for c in self.counts) + ")"
        return "(" + ",".join(f"{la.name}:{c}" for la, c in zip(layers, self.counts, strict=True)) + ")"


def dominates(a: LengthVector | tuple[int, ...], b: LengthVector | tuple[int, ...]) -> bool:
    """Whether ``a`` dominates ``b``: componentwise ``a <= b`` and ``a != b``.

    Raises:
        DimensionMismatchError: If the vectors have different lengths.
    """
    a = a.counts if isinstance(a, LengthVector) else a
    b = b.counts if isinstance(b, LengthVector) else b
    if len(a) != len(b):
        raise DimensionMismatchError(len(a), len(b))
    return a != b and all(x <= y for x, y in zip(a, b, strict=True))


def pareto_filter(vectors: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Keep the vectors not dominated by any other vector of the collection."""
    candidates = set(vectors)
    return {v for v in candidates if not any(dominates(w, v) for w in candidates)}


@dataclass(frozen=True)
class Label:
    """A length vector with the number of distinct paths from the source realizing it."""

    vector: LengthVector
    path_count: int


@dataclass(frozen=True)
class ParetoFront:
    """Mutually incomparable length vectors between two actors.

    Attributes:
        labels: One label per vector, sorted by descending vector (layer 0 first).
    """

    labels: tuple[Label, ...]

    @classmethod
    def from_counts(cls, counts: dict[tuple[int, ...], int]) -> "ParetoFront":
        return cls(tuple(Label(LengthVector(v), c) for v, c in sorted(counts.items(), reverse=True)))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {label.vector.counts: label.path_count for label in self.labels}

    def path_count(self) -> int:
        """Number of efficient paths over all vectors."""
        return sum(label.path_count for label in self.labels)

    def vectors(self) -> tuple[LengthVector, ...]:
        return tuple(label.vector for label in self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __bool__(self) -> bool:
        return bool(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)


@dataclass(frozen=True)
class MLPath:
    """A layer-annotated simple path.

    Attributes:
        nodes: Actors along the path, source first.
        steps: The layer of each traversed edge; ``len(steps) == len(nodes) - 1``.
    """

    nodes: tuple[ActorId, ...]
    steps: tuple[LayerId, ...]

    def vector(self, num_layers: int) -> LengthVector:
        counts = [0] * num_layers
        for layer in self.steps:
            counts[layer.index] += 1
        return LengthVector(tuple(counts))

    def describe(self) -> str:
        """E.g. ``A -Lunch-> C -FB-> D``."""
        parts = [self.nodes[0].label]
        for layer, node in zip(self.steps, self.nodes[1:], strict=True):
            parts.append(f"-{layer.name}-> {node.label}")
        return " ".join(parts)

    def __len__(self) -> int:
        return len(self.steps)
