import itertools
import random

import networkx as nx
import pytest
from conftest import build_network, oracle_fronts, random_instances, random_network

from pymlnet.mlnet.exceptions import DimensionMismatchError, OptionsError, PathCapExceededError, SameEndpointError
from pymlnet.paths import LengthVector, ParetoPathEngine, dominates, pareto_filter


class TestDominance:
    def test_examples(self):
        assert dominates((1, 0), (1, 1))
        assert not dominates((1, 1), (1, 1))
        assert not dominates((2, 0), (0, 2))
        assert not dominates((0, 2), (2, 0))

    def test_partial_order_laws(self):
        vectors = list(itertools.product(range(3), repeat=3))
        for a in vectors:
            assert not dominates(a, a)
        for a, b in itertools.product(vectors, repeat=2):
            if dominates(a, b):
                assert not dominates(b, a)
                assert sum(a) < sum(b)
        for a, b, c in itertools.product(vectors[:12], repeat=3):
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            dominates((1,), (1, 2))
        with pytest.raises(DimensionMismatchError):
            LengthVector((1, 0)) + LengthVector((1,))

    def test_pareto_filter(self):
        assert pareto_filter([(2, 0), (1, 1), (0, 2), (2, 1), (1, 1)]) == {(2, 0), (1, 1), (0, 2)}

    def test_length_vector_helpers(self, toy):
        vector = LengthVector.zero(2).step(0).step(1).step(1)
        assert vector.counts == (1, 2)
        assert vector.total() == 3
        assert vector.describe() == "(1,2)"
        assert vector.describe(toy.layers) == "(FB:1,Lunch:2)"


class TestToyFront:
    def test_front_between_a_and_d(self, toy):
        front = ParetoPathEngine(toy).pareto_front("A", "D")
        assert front.as_dict() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
        assert [v.counts for v in front.vectors()] == [(2, 0), (1, 1), (0, 2)]
        assert front.path_count() == 4

    def test_efficient_paths_between_a_and_d(self, toy):
        paths = ParetoPathEngine(toy).enumerate_efficient_paths("A", "D")
        described = sorted(path.describe() for path in paths)
        assert described == [
            "A -FB-> B -FB-> D",
            "A -FB-> B -Lunch-> D",
            "A -Lunch-> C -FB-> D",
            "A -Lunch-> C -Lunch-> D",
        ]
        for path in paths:
            assert len(path) == 2
            assert path.vector(2).total() == 2

    def test_adjacent_actors(self, toy):
        # The all-Lunch detour A-C-D-B is not dominated by the direct FB edge.
        assert ParetoPathEngine(toy).pareto_front("A", "B").as_dict() == {(1, 0): 1, (0, 3): 1}

    def test_same_endpoint(self, toy):
        engine = ParetoPathEngine(toy)
        with pytest.raises(SameEndpointError):
            engine.pareto_front("A", "A")
        with pytest.raises(SameEndpointError):
            engine.enumerate_efficient_paths("A", "A")

    def test_path_cap(self, toy):
        engine = ParetoPathEngine(toy, {"path_cap": 3})
        with pytest.raises(PathCapExceededError) as info:
            engine.enumerate_efficient_paths("A", "D")
        assert (info.value.count, info.value.cap) == (4, 3)
        assert len(engine.enumerate_efficient_paths("A", "D", cap=4)) == 4
        with pytest.raises(OptionsError):
            engine.enumerate_efficient_paths("A", "D", cap=0)

    def test_fronts_from(self, toy):
        fronts = ParetoPathEngine(toy).fronts_from("A")
        assert sorted(a.label for a in fronts) == ["B", "C", "D"]
        assert fronts[toy.actor("C")].as_dict() == {(0, 1): 1, (3, 0): 1}


class TestEdgeCases:
    def test_unreachable_target(self):
        network = build_network([("A", "B", "x"), ("C", "D", "x")])
        engine = ParetoPathEngine(network)
        assert not engine.pareto_front("A", "D")
        assert engine.enumerate_efficient_paths("A", "D") == []

    def test_single_layer_reduces_to_geodesics(self):
        # A 4-cycle: two geodesics between opposite corners.
        network = build_network([("A", "B", "x"), ("B", "C", "x"), ("C", "D", "x"), ("D", "A", "x")])
        assert ParetoPathEngine(network).pareto_front("A", "C").as_dict() == {(2,): 2}

    def test_longer_path_survives_when_it_uses_another_layer(self):
        network = build_network([("A", "B", "x"), ("A", "C", "y"), ("C", "B", "y")])
        front = ParetoPathEngine(network).pareto_front("A", "B")
        assert front.as_dict() == {(1, 0): 1, (0, 2): 1}

    def test_edge_in_two_layers_gives_two_paths(self):
        network = build_network([("A", "B", "x"), ("A", "B", "y")])
        paths = ParetoPathEngine(network).enumerate_efficient_paths("A", "B")
        assert sorted(p.describe() for p in paths) == ["A -x-> B", "A -y-> B"]

    def test_identical_layers_reduce_to_bfs_distance(self):
        rng = random.Random(11)
        for _ in range(20):
            single = random_network(rng, 9, 1, 0.3)
            edges = [(f"a{u}", f"a{v}", layer) for u, v in single.edges(0) for layer in "xyz"]
            network = build_network(edges, actors=[a.label for a in single.actors], layers="xyz")
            engine = ParetoPathEngine(network)
            for s in range(network.num_actors):
                distances = nx.single_source_shortest_path_length(single.flatten(single.all_layers()).graph, s)
                for t, front in engine.fronts_from(s).items():
                    totals = {sum(vector) for vector in front.as_dict()}
                    assert totals == ({distances[t.index]} if t.index in distances else set())


@pytest.mark.slow
def test_fronts_match_brute_force_enumeration():
    for network in random_instances(500, seed=20240611):
        engine = ParetoPathEngine(network)
        for s in range(network.num_actors):
            expected = oracle_fronts(network, s)
            labels = engine.source_labels(s)
            for t in range(network.num_actors):
                if t != s:
                    assert labels.fronts[t] == expected.get(t, {}), (network, s, t)


@pytest.mark.slow
def test_enumerated_paths_match_front_counts():
    for network in random_instances(100, seed=7):
        engine = ParetoPathEngine(network)
        for s, t in itertools.permutations(range(network.num_actors), 2):
            front = engine.pareto_front(s, t)
            paths = engine.enumerate_efficient_paths(s, t)
            assert len(paths) == front.path_count()
            assert len({(p.nodes, p.steps) for p in paths}) == len(paths)
            for path in paths:
                assert len(set(path.nodes)) == len(path.nodes)
                assert path.vector(network.num_layers).counts in front.as_dict()
