"""
Tests for power graphs and their exponent-progression weights.
"""
import pytest

from src.power_graph_products.models.generalization import Generalization
from src.power_graph_products.models.progression import APPair
from src.power_graph_products.services.graph_service import GraphService
from src.power_graph_products.services.group_service import GroupService
from src.power_graph_products.services.power_graph_service import PowerGraphService
from src.power_graph_products.utils.progressions import ap_contains

groups = GroupService()
power_graphs = PowerGraphService()
graphs = GraphService()


class TestPowerGraph:
    def test_klein_four_is_a_star(self):
        graph = power_graphs.power_graph(groups.direct_product(groups.cyclic(2), groups.cyclic(2)))
        assert graph.edge_count == 3
        assert graph.edges() == [(0, 1), (0, 2), (0, 3)]

    def test_trivial_group(self):
        graph = power_graphs.power_graph(groups.cyclic(1))
        assert graph.vertex_count == 1
        assert graph.edge_count == 0

    def test_cyclic_six(self):
        graph = power_graphs.power_graph(groups.cyclic(6))
        assert graph.edge_count == 13
        assert not graph.adjacent(2, 3)
        assert not graph.adjacent(3, 4)
        assert graph.adjacent(2, 4)

    def test_quaternion(self):
        graph = power_graphs.power_graph(groups.quaternion8())
        assert graph.edge_count == 16
        assert graphs.universal_vertices(graph) == [0, 1]

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_prime_order_is_complete(self, p):
        assert power_graphs.power_graph(groups.cyclic(p)).edge_count == p * (p - 1) // 2

    def test_cyclic_four_is_complete(self):
        assert power_graphs.power_graph(groups.cyclic(4)).edge_count == 6

    def test_identity_is_universal(self, small_groups):
        for group in small_groups:
            graph = power_graphs.power_graph(group)
            if group.order > 1:
                assert group.identity in graphs.universal_vertices(graph)
                assert graphs.has_universal_vertex(graph)

    def test_adjacency_matches_cyclic_subgroups(self, small_groups):
        for group in small_groups:
            graph = power_graphs.power_graph(group)
            subgroups = [power_graphs.cyclic_subgroup(group, a) for a in range(group.order)]
            for a in range(group.order):
                for b in range(group.order):
                    if a == b:
                        continue
                    expected = b in subgroups[a] or a in subgroups[b]
                    assert graph.adjacent(a, b) == expected

    def test_labels_carried(self):
        graph = power_graphs.power_graph(groups.quaternion8())
        assert graph.labels[2] == "i"


class TestDirectedPowerGraph:
    def test_cyclic_four(self):
        arcs = power_graphs.directed_power_graph(groups.cyclic(4))
        assert arcs[1, 2] and arcs[1, 3] and arcs[1, 0]
        assert arcs[2, 0]
        assert not arcs[2, 1]
        assert not arcs.diagonal().any()

    def test_underlying_graph(self, small_groups):
        for group in small_groups:
            arcs = power_graphs.directed_power_graph(group)
            assert ((arcs | arcs.T) == power_graphs.power_graph(group).adjacency).all()


class TestWeights:
    def test_examples(self):
        assert power_graphs.power_weights(groups.cyclic(4))(1, 3) == APPair.of(3, 4)
        assert power_graphs.power_weights(groups.cyclic(6))(2, 3).is_sentinel

    def test_diagonal(self, small_groups):
        for group in small_groups:
            weights = power_graphs.power_weights(group)
            for a in range(group.order):
                assert weights(a, a) == APPair.of(1, group.element_order(a))

    def test_matches_exponent_progression(self, small_groups):
        for group in small_groups:
            weights = power_graphs.power_weights(group)
            for a in range(group.order):
                for b in range(group.order):
                    expected = power_graphs.exponent_progression(group, a, b)
                    assert weights(a, b) == (expected or APPair.sentinel())

    def test_windows_are_progressions(self, small_groups):
        """{m in [1, 3 o(a)] : a^m = b} is {t, t + o, t + 2o} or empty."""
        for group in small_groups:
            weights = power_graphs.power_weights(group)
            for a in range(group.order):
                o = group.element_order(a)
                for b in range(group.order):
                    window = power_graphs.exponent_set_window(group, a, b, 3 * o)
                    t = group.smallest_exponent(a, b)
                    if t is None:
                        assert window == set()
                    else:
                        assert window == {t, t + o, t + 2 * o}
                    assert window == {m for m in range(1, 3 * o + 1) if ap_contains(weights(a, b), m)}

    def test_bundle_graph_agrees(self, small_groups):
        for group in small_groups:
            bundle = power_graphs.bundle(group)
            assert isinstance(bundle.weights, Generalization)
            assert (bundle.graph.adjacency == power_graphs.power_graph(group).adjacency).all()

    def test_dump(self):
        assert power_graphs.power_weights(groups.cyclic(2)).dump(groups.cyclic(2).labels) == "0 0 : (1,1)\n1 0 : (2,2)\n1 1 : (1,2)"

    def test_sentinel_generalization(self):
        weights = Generalization.sentinel(3)
        assert list(weights.non_sentinel()) == []
        assert weights.dump() == ""


class TestExponentWindow:
    def test_cyclic_six(self):
        group = groups.cyclic(6)
        assert power_graphs.exponent_set_window(group, 2, 4, 9) == {2, 5, 8}
        assert power_graphs.exponent_set_window(group, 2, 2, 9) == {1, 4, 7}
        assert power_graphs.exponent_set_window(group, 2, 3, 9) == set()

    @pytest.mark.parametrize("bound", [0, 31])
    def test_bound_range(self, bound):
        with pytest.raises(ValueError):
            power_graphs.exponent_set_window(groups.cyclic(6), 2, 4, bound)

    def test_cyclic_subgroup(self):
        assert power_graphs.cyclic_subgroup(groups.cyclic(6), 2) == frozenset({0, 2, 4})
        assert power_graphs.cyclic_subgroup(groups.cyclic(6), 0) == frozenset({0})
