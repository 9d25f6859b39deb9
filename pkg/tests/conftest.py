import random
from collections import defaultdict
from collections.abc import Iterable, Iterator

import pytest

from pymlnet.io import load_fixture
from pymlnet.mlnet import MultilayerNetwork
from pymlnet.paths import pareto_filter


def build_network(
    edges: Iterable[tuple[str, str, str]], actors: Iterable[str] = (), layers: Iterable[str] = ()
) -> MultilayerNetwork:
    """Network from ``(a, b, layer)`` records; ``actors`` and ``layers`` fix the index order first."""
    network = MultilayerNetwork(actors=actors, layers=layers)
    for a, b, layer in edges:
        network.add_layer(layer)
        network.add_actor(a)
        network.add_actor(b)
        network.add_edge(layer, a, b)
    return network.freeze()


def random_network(rng: random.Random, n: int, num_layers: int, p: float) -> MultilayerNetwork:
    network = MultilayerNetwork(actors=[f"a{i}" for i in range(n)], layers=[f"L{j}" for j in range(num_layers)])
    for layer in range(num_layers):
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    network.add_edge(layer, u, v)
    return network.freeze()


def random_instances(count: int, seed: int, max_actors: int = 8, max_layers: int = 3, p: float = 0.3):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_network(rng, rng.randint(2, max_actors), rng.randint(1, max_layers), p)


def simple_layer_paths(network: MultilayerNetwork, source: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every simple path leaving ``source``, once per choice of layer on each hop."""
    adjacency = network.multi_adjacency()

    def _extend(nodes: tuple[int, ...], steps: tuple[int, ...]):
        for v, layer in adjacency[nodes[-1]]:
            if v in nodes:
                continue
            path = ((*nodes, v), (*steps, layer))
            yield path
            yield from _extend(*path)

    yield from _extend((source,), ())


def _vector(steps: tuple[int, ...], num_layers: int) -> tuple[int, ...]:
    counts = [0] * num_layers
    for layer in steps:
        counts[layer] += 1
    return tuple(counts)


def oracle_fronts(network: MultilayerNetwork, source: int) -> dict[int, dict[tuple[int, ...], int]]:
    """Brute-force Pareto fronts from ``source``: enumerate, then keep the non-dominated vectors."""
    counts: dict[int, dict[tuple[int, ...], int]] = defaultdict(lambda: defaultdict(int))
    for nodes, steps in simple_layer_paths(network, source):
        counts[nodes[-1]][_vector(steps, network.num_layers)] += 1

    fronts = {}
    for target, by_vector in counts.items():
        keep = pareto_filter(by_vector)
        fronts[target] = {vec: c for vec, c in by_vector.items() if vec in keep}
    return fronts


def oracle_ml_betweenness(network: MultilayerNetwork) -> list[int]:
    """Interior-actor counts over the efficient paths of every unordered pair."""
    totals = [0] * network.num_actors
    for s in range(network.num_actors):
        fronts = oracle_fronts(network, s)
        for nodes, steps in simple_layer_paths(network, s):
            t = nodes[-1]
            if t <= s or _vector(steps, network.num_layers) not in fronts[t]:
                continue
            for v in nodes[1:-1]:
                totals[v] += 1
    return totals


@pytest.fixture
def toy() -> MultilayerNetwork:
    return load_fixture("toy")


@pytest.fixture
def department_like() -> MultilayerNetwork:
    """Five small layers with known overlaps, used by the portfolio and clustering tests."""
    return build_network(
        [
            ("a", "b", "Work"),
            ("b", "c", "Work"),
            ("c", "d", "Work"),
            ("a", "b", "Leisure"),
            ("d", "e", "Leisure"),
            ("a", "b", "Coauthor"),
            ("b", "c", "Coauthor"),
            ("a", "c", "Lunch"),
            ("d", "e", "Lunch"),
            ("e", "f", "FB"),
        ],
        actors=["a", "b", "c", "d", "e", "f"],
        layers=["Work", "Leisure", "Coauthor", "Lunch", "FB"],
    )
