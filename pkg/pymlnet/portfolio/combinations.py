"""Enumeration and labelling of layer combinations (the power-sociomatrix)."""

import itertools
from collections.abc import Mapping

from ..mlnet.model import LayerId, LayerSet, MultilayerNetwork


def combinations(network: MultilayerNetwork, exclude: LayerId | str | int | None = None) -> list[LayerSet]:
    """All nonempty subsets of the layers not excluded.

    Returns:
        ``2**k - 1`` combinations ordered by cardinality, then lexicographically by layer index.
    """
    excluded = network.layer(exclude) if exclude is not None else None
    layers = [layer for layer in network.layers if layer != excluded]
    return [
        LayerSet(members) for size in range(1, len(layers) + 1) for members in itertools.combinations(layers, size)
    ]


def layer_codes(network: MultilayerNetwork, overrides: Mapping[str, str] | None = None) -> dict[str, str] | None:
    """Code of every layer for combination labels.

    The code is the layer's initial (upper case) unless ``overrides`` names one.

    Returns:
        ``layer name -> code``, or None when two layers would share a code.
    """
    overrides = overrides or {}
    codes = {layer.name: overrides.get(layer.name, layer.name[0].upper()) for layer in network.layers}
    if len(set(codes.values())) != len(codes):
        return None
    return codes


def combination_label(
    network: MultilayerNetwork, combination: LayerSet, overrides: Mapping[str, str] | None = None
) -> str:
    """``FPML`` style label in layer order; full names joined by ``+`` when codes collide."""
    codes = layer_codes(network, overrides)
    if codes is None:
        return "+".join(combination.names)
    return "".join(codes[name] for name in combination.names)


def legend(network: MultilayerNetwork, overrides: Mapping[str, str] | None = None) -> list[tuple[str, str]]:
    """``(code, layer name)`` pairs; codes are the full names when initials collide."""
    codes = layer_codes(network, overrides)
    return [(codes[layer.name] if codes else layer.name, layer.name) for layer in network.layers]
