import copy
from fractions import Fraction

import pytest
from conftest import build_network

from pymlnet.mlnet import LayerSet, MultilayerNetwork, connected_components, flatten_stats, layer_stats
from pymlnet.mlnet.exceptions import (
    EmptyLayerSetError,
    LayerCapError,
    MLNetError,
    NetworkFrozenError,
    SelfLoopError,
    UnknownActorError,
    UnknownLayerError,
)


class TestConstruction:
    def test_add_edge_is_symmetric_and_idempotent(self):
        network = MultilayerNetwork(actors=["A", "B"], layers=["x"])
        network.add_edge("x", "A", "B")
        network.add_edge("x", "B", "A")
        network.add_edge("x", "A", "B")

        assert network.edge_count("x") == 1
        assert network.edges("x") == ((0, 1),)
        assert network.neighbors("x", "B") == frozenset({network.actor("A")})

    def test_self_loop_rejected(self):
        network = MultilayerNetwork(actors=["A"], layers=["x"])
        with pytest.raises(SelfLoopError) as info:
            network.add_edge("x", "A", "A")
        assert info.value.category == "self-loop"

    def test_unknown_references(self):
        network = MultilayerNetwork(actors=["A", "B"], layers=["x"])
        with pytest.raises(UnknownActorError):
            network.add_edge("x", "A", "Z")
        with pytest.raises(UnknownLayerError):
            network.add_edge("y", "A", "B")
        with pytest.raises(UnknownActorError):
            network.actor(5)

    def test_layer_cap(self):
        network = MultilayerNetwork(layers=["a", "b"], layer_cap=2)
        with pytest.raises(LayerCapError) as info:
            network.add_layer("c")
        assert info.value.category == "config"
        assert info.value.num_layers == 3

    def test_frozen_network_rejects_mutation(self):
        network = MultilayerNetwork(actors=["A", "B"], layers=["x"]).freeze()
        with pytest.raises(NetworkFrozenError):
            network.add_edge("x", "A", "B")
        with pytest.raises(NetworkFrozenError):
            network.add_actor("C")
        # Existing labels still resolve.
        assert network.add_actor("A").index == 0

    def test_resolution_by_id_index_and_label(self, toy):
        d = toy.actor("D")
        assert toy.actor(d) is d
        assert toy.actor(d.index) is d
        assert toy.layer(0).name == "FB"
        assert toy.layer_set(["Lunch", "FB"]).names == ("FB", "Lunch")

    def test_isolated_actor_kept(self):
        network = MultilayerNetwork(actors=["A", "B", "lonely"], layers=["x"])
        network.add_edge("x", "A", "B")
        assert network.num_actors == 3
        assert network.degree("x", "lonely") == 0

    def test_equality_compares_structure(self, toy):
        other = build_network(
            [
                ("A", "B", "FB"),
                ("A", "C", "Lunch"),
                ("B", "D", "FB"),
                ("B", "D", "Lunch"),
                ("C", "D", "FB"),
                ("C", "D", "Lunch"),
            ]
        )
        assert other == toy
        assert build_network([("A", "B", "FB")]) != toy

    def test_errors_copy_as_themselves(self):
        error = SelfLoopError("x", "A")
        assert copy.copy(error) is error
        assert copy.deepcopy(error) is error
        assert isinstance(error, MLNetError)


class TestLayerSet:
    def test_of_sorts_and_deduplicates(self, toy):
        fb, lunch = toy.layers
        combo = LayerSet.of([lunch, fb, lunch])
        assert combo.layers == (fb, lunch)
        assert combo.mask == 0b11
        assert str(combo) == "{FB, Lunch}"

    def test_set_relations(self, toy):
        fb, lunch = toy.layers
        only_fb, only_lunch = LayerSet((fb,)), LayerSet((lunch,))
        assert only_fb.isdisjoint(only_lunch)
        assert only_fb.issubset(toy.all_layers())
        assert not toy.all_layers().issubset(only_fb)
        assert only_fb.union(only_lunch) == toy.all_layers()
        assert only_fb.sort_key() < toy.all_layers().sort_key()


class TestFlatten:
    def test_flatten_is_the_union_of_edge_sets(self, toy):
        fb, lunch = (LayerSet((layer,)) for layer in toy.layers)
        both = toy.flatten(toy.all_layers())
        assert both.edges == toy.flatten(fb).edges | toy.flatten(lunch).edges
        assert toy.flatten(fb).edges == frozenset(toy.edges("FB"))
        assert both.edge_count == 4

    def test_flatten_keeps_every_actor(self):
        network = build_network([("A", "B", "x"), ("C", "D", "y")])
        flat = network.flatten(network.layer_set(["x"]))
        assert flat.graph.number_of_nodes() == 4
        assert [a.label for a in flat.active_actors()] == ["A", "B"]

    def test_empty_combination(self, toy):
        with pytest.raises(EmptyLayerSetError):
            toy.flatten(LayerSet(()))
        with pytest.raises(EmptyLayerSetError):
            flatten_stats(toy, LayerSet(()))


class TestStats:
    def test_layer_stats_on_toy(self, toy):
        fb = layer_stats(toy, "FB")
        assert (fb.edge_count, fb.component_count, fb.active_actor_count) == (3, 1, 4)
        assert fb.avg_degree_active == Fraction(3, 2)

    def test_layer_stats_counts_components_over_active_actors(self):
        network = MultilayerNetwork(actors=["A", "B", "C", "D", "E", "lonely"], layers=["x", "empty"])
        network.add_edge("x", "A", "B")
        network.add_edge("x", "C", "D")
        network.add_edge("x", "D", "E")

        stats = layer_stats(network, "x")
        assert stats.component_count == 2
        assert stats.active_actor_count == 5
        assert stats.avg_degree_active == Fraction(6, 5)

        empty = layer_stats(network, "empty")
        assert (empty.edge_count, empty.component_count, empty.avg_degree_active) == (0, 0, 0)

    def test_flatten_stats_on_toy(self, toy):
        stats = flatten_stats(toy, toy.all_layers())
        assert stats.actor_count == 4
        assert stats.edge_count == 4
        assert stats.directed_edge_count == 8
        assert stats.layer_edge_sum == 6
        assert stats.avg_degree_all == 2
        assert stats.diameter == 2
        assert stats.component_count == 1

    def test_diameter_taken_on_largest_component(self):
        network = build_network([("A", "B", "x"), ("C", "D", "x"), ("D", "E", "x"), ("E", "F", "x")])
        stats = flatten_stats(network, network.all_layers())
        assert stats.component_count == 2
        assert stats.diameter == 3

    def test_connected_components_order(self):
        network = build_network([("C", "D", "x"), ("A", "B", "x")], actors=["A", "B", "C", "D", "E"])
        flat = network.flatten(network.all_layers())
        assert connected_components(flat) == ((0, 1), (2, 3), (4,))
        assert connected_components(flat, active_only=True) == ((0, 1), (2, 3))
