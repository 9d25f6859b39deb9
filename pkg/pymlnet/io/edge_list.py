"""Edge-list ingestion and export.

An edge-list file holds one ``actorA <sep> actorB <sep> layerName`` record per
line, ``<sep>`` being a comma or a tab (detected on the first record and fixed
for the file). Blank lines and lines starting with ``#`` are ignored; ``\\r\\n``
line endings are tolerated. An optional actors file lists one actor label per
line, so that isolated actors are kept.

Records are undirected: ``A,B,x`` and ``B,A,x`` are the same edge, and
duplicates are dropped.
"""

import logging
import os

from pyadvtools import read_list, write_list

from ..mlnet.exceptions import EdgeListFormatError, InputFileError, SelfLoopError
from ..mlnet.model import DEFAULT_LAYER_CAP, MultilayerNetwork

logger = logging.getLogger(__name__)

SEPARATORS = (",", "\t")
FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "fixtures")


def _read_records(file_name: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    file_name = os.path.expandvars(os.path.expanduser(file_name))
    if not os.path.isfile(file_name):
        raise InputFileError(file_name)
    try:
        lines = read_list(file_name, "r")
    except (OSError, UnicodeDecodeError) as e:
        logger.error("cannot read %s: %s", file_name, e)
        raise InputFileError(file_name) from e

    records = []
    for number, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        records.append((number, line))
    return records


def load(edges_path: str, actors_path: str | None = None, layer_cap: int = DEFAULT_LAYER_CAP) -> MultilayerNetwork:
    """Build a frozen network from an edge-list file and an optional actors file.

    Actors are indexed in the order of the actors file, then by first appearance in the edge list;
    layers by first appearance.

    Raises:
        InputFileError: If a file is missing or unreadable.
        EdgeListFormatError: On a malformed record, with its line number.
        LayerCapError: If the file holds more layers than ``layer_cap``.
    """
    network = MultilayerNetwork(layer_cap=layer_cap)

    if actors_path:
        for number, line in _read_records(actors_path):
            label = line.strip()
            if any(sep in label for sep in SEPARATORS):
                raise EdgeListFormatError(actors_path, number, f"separator inside actor label `{label}`")
            network.add_actor(label)

    separator = None
    duplicates = 0
    for number, line in _read_records(edges_path):
        if separator is None:
            separator = "\t" if "\t" in line else ","
            logger.debug("%s: separator %r", edges_path, separator)

        fields = [field.strip() for field in line.split(separator)]
        if len(fields) != 3 or not all(fields):
            raise EdgeListFormatError(
                edges_path, number, f"expected `actorA{separator}actorB{separator}layer`, got `{line}`"
            )
        if any(sep in field for field in fields for sep in SEPARATORS):
            raise EdgeListFormatError(edges_path, number, f"separator inside a label in `{line}`")

        a, b, layer_name = fields
        layer = network.add_layer(layer_name)
        u, v = network.add_actor(a), network.add_actor(b)
        before = network.edge_count(layer)
        try:
            network.add_edge(layer, u, v)
        except SelfLoopError as e:
            raise EdgeListFormatError(edges_path, number, e.message) from e
        duplicates += network.edge_count(layer) == before

    if network.num_layers == 0:
        raise EdgeListFormatError(edges_path, 0, "no edge records")
    if duplicates:
        logger.info("%s: %d duplicate or reverse records merged", edges_path, duplicates)
    logger.info("loaded %r", network)
    return network.freeze()


def load_fixture(name: str, layer_cap: int = DEFAULT_LAYER_CAP) -> MultilayerNetwork:
    """Load a bundled fixture network, e.g. ``toy``."""
    return load(os.path.join(FIXTURES_DIR, f"{name}.csv"), layer_cap=layer_cap)


def _check_labels(network: MultilayerNetwork) -> None:
    for label in [a.label for a in network.actors] + [la.name for la in network.layers]:
        if any(sep in label for sep in SEPARATORS):
            raise ValueError(f"label `{label}` contains a separator and cannot be exported")


def export_edge_list(network: MultilayerNetwork) -> list[str]:
    """Edge records in layer order, then by ``(u, v)`` actor index.

    Raises:
        ValueError: If a label contains a separator, which the format cannot carry.
    """
    _check_labels(network)
    sep = ","
    actors = network.actors
    data_list = [f"# actor_a{sep}actor_b{sep}layer\n"]
    for layer in network.layers:
        for u, v in network.edges(layer):
            data_list.append(f"{actors[u].label}{sep}{actors[v].label}{sep}{layer.name}\n")
    return data_list


def export_actor_list(network: MultilayerNetwork) -> list[str]:
    _check_labels(network)
    return [f"{actor.label}\n" for actor in network.actors]


def save(network: MultilayerNetwork, edges_path: str, actors_path: str | None = None) -> None:
    """Write the edge list (and the actor list) so that ``load`` rebuilds an equal network."""
    edges_path = os.path.expandvars(os.path.expanduser(edges_path))
    write_list(export_edge_list(network), edges_path, "w", None, False)
    if actors_path:
        actors_path = os.path.expandvars(os.path.expanduser(actors_path))
        write_list(export_actor_list(network), actors_path, "w", None, False)
