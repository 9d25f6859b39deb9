"""Network portfolio analytics: coverage and Jaccard similarity of layer combinations.

Coverage of a target layer by a combination of other layers is the
conditional probability that an edge of the target also appears in the
flattened combination. Jaccard similarity compares the flattened edge sets of
two combinations. All searches are exhaustive over the power-sociomatrix and
resolve ties by smaller cardinality, then by lexicographic layer order.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..mlnet.exceptions import (
    EmptyLayerSetError,
    TargetInCombinationError,
    UndefinedConditionalError,
    UndefinedJaccardError,
)
from ..mlnet.model import LayerId, LayerSet, MultilayerNetwork
from .combinations import combinations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageResult:
    target: LayerId
    combination: LayerSet
    probability: Fraction


@dataclass(frozen=True)
class JaccardResult:
    left: LayerSet
    right: LayerSet
    index: Fraction


class NetworkPortfolio:
    """Coverage and similarity searches over all layer combinations.

    Args:
        network (MultilayerNetwork): The network; it is frozen on entry.
        options (dict[str, Any] | None): Options. Default is None.
    """

    def __init__(self, network: MultilayerNetwork, options: dict[str, Any] | None = None) -> None:
        self.options = options if options is not None else {}
        self.network = network.freeze()

    # ------------------------------------------------------------------ coverage
    def coverage(self, target: LayerId | str | int, combination: LayerSet) -> CoverageResult:
        """Probability that an edge of ``target`` is also an edge of the flattened ``combination``.

        Raises:
            EmptyLayerSetError: If ``combination`` is empty.
            TargetInCombinationError: If ``target`` belongs to ``combination``.
            UndefinedConditionalError: If ``target`` has no edges.
        """
        target_id = self.network.layer(target)
        if not combination:
            raise EmptyLayerSetError("coverage")
        if target_id in combination:
            raise TargetInCombinationError(target_id.name)

        target_edges = self.network.edge_set(LayerSet((target_id,)))
        if not target_edges:
            raise UndefinedConditionalError(target_id.name)

        covered = target_edges & self.network.edge_set(combination)
        return CoverageResult(target_id, combination, Fraction(len(covered), len(target_edges)))

    def _covers(self, target: LayerId) -> list[CoverageResult]:
        return [self.coverage(target, combo) for combo in combinations(self.network, exclude=target)]

    def best_cover(self, target: LayerId | str | int) -> CoverageResult | None:
        """The combination of other layers covering ``target`` best (None without other layers)."""
        target_id = self.network.layer(target)
        return _first_max(self._covers(target_id), lambda r: r.probability)

    def cover_frontier(self, target: LayerId | str | int) -> list[CoverageResult]:
        """Rows of a covering table for ``target``.

        The optimum first, then, for each strictly smaller cardinality, the best combination
        of that size as long as it is nested in the previously kept row.
        """
        target_id = self.network.layer(target)
        covers = self._covers(target_id)
        if (best := _first_max(covers, lambda r: r.probability)) is None:
            return []

        rows = [best]
        for size in range(len(best.combination) - 1, 0, -1):
            candidate = _first_max([r for r in covers if len(r.combination) == size], lambda r: r.probability)
            if candidate is not None and candidate.combination.issubset(rows[-1].combination):
                rows.append(candidate)
        return rows

    # ------------------------------------------------------------------ similarity
    def jaccard(self, left: LayerSet, right: LayerSet) -> JaccardResult:
        """``|E_left & E_right| / |E_left | E_right|`` over flattened edge sets.

        Raises:
            EmptyLayerSetError: If either side is empty.
            UndefinedJaccardError: If both flattened edge sets are empty.
        """
        if not left or not right:
            raise EmptyLayerSetError("jaccard")
        a, b = self.network.edge_set(left), self.network.edge_set(right)
        if not (union := a | b):
            raise UndefinedJaccardError()
        return JaccardResult(left, right, Fraction(len(a & b), len(union)))

    def most_similar(self, target: LayerId | str | int) -> JaccardResult | None:
        """The combination of other layers most similar to ``target`` (None without other layers).

        Raises:
            UndefinedJaccardError: If ``target`` has no edges.
        """
        target_id = self.network.layer(target)
        single = LayerSet((target_id,))
        if not self.network.edge_set(single):
            raise UndefinedJaccardError()
        results = [self.jaccard(single, combo) for combo in combinations(self.network, exclude=target_id)]
        return _first_max(results, lambda r: r.index)

    def similarity_table(self) -> list[JaccardResult]:
        """``most_similar`` of every layer with at least one edge, in layer order."""
        rows = []
        for layer in self.network.layers:
            if self.network.edge_count(layer) == 0:
                logger.warning("layer %s has no edges; skipped in the similarity table", layer.name)
                continue
            if (row := self.most_similar(layer)) is not None:
                rows.append(row)
        return rows

    def best_disjoint_pair(self) -> JaccardResult | None:
        """The most similar pair of disjoint nonempty combinations.

        The side with the lexicographically smaller layer indices is returned as ``left``; ties on the
        index go to the lexicographically smallest ``(left, right)``. Pairs whose edge sets are both
        empty are skipped; None when no pair qualifies.

        Only the submasks of each left side's complement are visited, so the search is ``3^L``.
        """
        layers = self.network.layers
        full = (1 << len(layers)) - 1
        edges = self._edge_bits_by_mask()
        keys = [tuple(i for i in range(len(layers)) if mask >> i & 1) for mask in range(full + 1)]

        best: tuple[int, int, int, int] | None = None  # shared, union, left mask, right mask
        for left in range(1, full + 1):
            rest = full & ~left
            right = rest
            while right:
                if keys[left] < keys[right] and (union := (edges[left] | edges[right]).bit_count()):
                    shared = (edges[left] & edges[right]).bit_count()
                    if best is None or _beats(shared, union, (keys[left], keys[right]), best, keys):
                        best = (shared, union, left, right)
                right = (right - 1) & rest

        if best is None:
            return None
        shared, union, left, right = best
        return JaccardResult(
            LayerSet.of(layers[i] for i in keys[left]),
            LayerSet.of(layers[i] for i in keys[right]),
            Fraction(shared, union),
        )

    def _edge_bits_by_mask(self) -> list[int]:
        """Flattened edge set of every layer mask, one bit per distinct edge."""
        bit_of: dict[tuple[int, int], int] = {}
        layer_bits = []
        for layer in self.network.layers:
            bits = 0
            for edge in self.network.edges(layer):
                bits |= 1 << bit_of.setdefault(edge, len(bit_of))
            layer_bits.append(bits)

        by_mask = [0] * (1 << len(layer_bits))
        for mask in range(1, len(by_mask)):
            low = mask & -mask
            by_mask[mask] = by_mask[mask ^ low] | layer_bits[low.bit_length() - 1]
        return by_mask


def _beats(shared: int, union: int, pair_key: tuple, best: tuple[int, int, int, int], keys: list[tuple]) -> bool:
    best_shared, best_union, best_left, best_right = best
    if shared * best_union != best_shared * union:
        return shared * best_union > best_shared * union
    return pair_key < (keys[best_left], keys[best_right])


def _first_max(results: list, key) -> Any:
    """First element with the maximal key; ``results`` is already in tie-break order."""
    best = None
    for result in results:
        if best is None or key(result) > key(best):
            best = result
    return best
