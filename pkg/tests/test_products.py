"""
Tests for direct, cartesian, normal and generalized graph products.
"""
import pytest

from src.power_graph_products.core.config import settings
from src.power_graph_products.core.exceptions import SizeCapError
from src.power_graph_products.models.generalization import Generalization
from src.power_graph_products.models.graph import SimpleGraph
from src.power_graph_products.models.report import ProductKind, WeightKind
from src.power_graph_products.services.graph_service import GraphService
from src.power_graph_products.services.group_service import GroupService
from src.power_graph_products.services.power_graph_service import PowerGraphService
from src.power_graph_products.services.product_service import ProductService

groups = GroupService()
power_graphs = PowerGraphService()
products = ProductService()
graphs = GraphService()

CLASSICAL = [ProductKind.DIRECT, ProductKind.CARTESIAN, ProductKind.NORMAL]


def random_pairs(rng, count=100, max_vertices=7):
    pairs = []
    for _ in range(count):
        n, m = rng.integers(1, max_vertices + 1, size=2)
        pairs.append((SimpleGraph.random(rng, int(n)), SimpleGraph.random(rng, int(m))))
    return pairs


class TestClassicalProducts:
    def test_edge_trio(self):
        k2 = SimpleGraph.complete(2)
        assert products.direct(k2, k2).edge_count == 2
        assert products.cartesian(k2, k2).edge_count == 4
        assert products.normal(k2, k2).edge_count == 6

    def test_cartesian_of_edges_is_four_cycle(self):
        k2 = SimpleGraph.complete(2)
        square = products.cartesian(k2, k2)
        assert square.degrees().tolist() == [2, 2, 2, 2]
        assert not square.adjacent(0, 3)

    def test_labels(self):
        k2 = SimpleGraph(SimpleGraph.complete(2).adjacency, ["a", "b"])
        product = products.direct(k2, SimpleGraph.edgeless(1))
        assert product.labels == ("(a,0)", "(b,0)")

    def test_edge_count_identities(self, rng):
        for a, b in random_pairs(rng):
            direct = products.direct(a, b)
            cartesian = products.cartesian(a, b)
            normal = products.normal(a, b)
            assert direct.edge_count == 2 * a.edge_count * b.edge_count
            assert cartesian.edge_count == a.vertex_count * b.edge_count + b.vertex_count * a.edge_count
            assert normal.edge_count == direct.edge_count + cartesian.edge_count
            assert (normal.adjacency == (direct.adjacency | cartesian.adjacency)).all()

    def test_commutative_up_to_isomorphism(self, rng):
        for a, b in random_pairs(rng, count=20, max_vertices=5):
            for kind in CLASSICAL:
                assert graphs.are_isomorphic(products.classical(kind, a, b), products.classical(kind, b, a))

    def test_size_cap(self, monkeypatch):
        monkeypatch.setattr(settings.graphs, "MAX_PRODUCT_VERTICES", 10)
        with pytest.raises(SizeCapError):
            products.normal(SimpleGraph.complete(4), SimpleGraph.complete(3))

    def test_generalized_needs_weights(self):
        with pytest.raises(ValueError):
            products.classical(ProductKind.GENERALIZED, SimpleGraph.complete(2), SimpleGraph.complete(2))


class TestGeneralizedProduct:
    def test_all_sentinel_is_edgeless(self, rng):
        for a, b in random_pairs(rng, count=10):
            product = products.generalized(
                a, Generalization.sentinel(a.vertex_count), b, Generalization.sentinel(b.vertex_count)
            )
            assert product.edge_count == 0
            assert product.vertex_count == a.vertex_count * b.vertex_count

    def test_weights_must_cover_vertices(self):
        k2 = SimpleGraph.complete(2)
        with pytest.raises(ValueError):
            products.generalized(k2, Generalization.sentinel(3), k2, Generalization.sentinel(2))

    @pytest.mark.parametrize("kind", CLASSICAL, ids=lambda kind: kind.value)
    def test_classical_as_generalized(self, rng, kind):
        for a, b in random_pairs(rng):
            assert graphs.equal_labeled(products.classical_as_generalized(kind, a, b), products.classical(kind, a, b))

    def test_classical_weight_tables(self):
        k2 = SimpleGraph.complete(2)
        left = products.classical_weights(WeightKind.CARTESIAN_LEFT, k2)
        right = products.classical_weights(WeightKind.CARTESIAN_RIGHT, k2)
        assert left(0, 1).as_tuple() == (1, 0)
        assert right(0, 1).as_tuple() == (2, 0)
        assert left(0, 0).as_tuple() == (1, 1)
        assert products.classical_weights("direct", k2)(1, 1).is_sentinel

    def test_non_adjacent_pairs_get_sentinel(self):
        weights = products.classical_weights(WeightKind.NORMAL, SimpleGraph.edgeless(3))
        assert weights(0, 1).is_sentinel
        assert weights(2, 2).as_tuple() == (1, 1)


class TestPowerGraphProducts:
    @pytest.mark.parametrize("left, right", [
        (groups.cyclic(1), groups.cyclic(1)),
        (groups.cyclic(1), groups.dihedral(3)),
        (groups.cyclic(2), groups.cyclic(2)),
        (groups.cyclic(2), groups.cyclic(3)),
        (groups.cyclic(4), groups.cyclic(6)),
        (groups.dihedral(3), groups.cyclic(2)),
        (groups.quaternion8(), groups.cyclic(2)),
        (groups.symmetric(3), groups.cyclic(3)),
        (groups.direct_product(groups.cyclic(2), groups.cyclic(2)), groups.cyclic(4)),
    ], ids=lambda group: group.name)
    def test_power_graph_of_product(self, left, right):
        """P(G1 x G2) equals the generalized product of the factors' power graphs."""
        b1, b2 = power_graphs.bundle(left), power_graphs.bundle(right)
        product = power_graphs.bundle(groups.direct_product(left, right)).graph
        generalized = products.generalized(b1.graph, b1.weights, b2.graph, b2.weights)
        assert graphs.equal_labeled(product, generalized)
        assert product.labels == generalized.labels

    def test_klein_four_trio(self):
        c2 = power_graphs.bundle(groups.cyclic(2)).graph
        klein = power_graphs.bundle(groups.direct_product(groups.cyclic(2), groups.cyclic(2))).graph
        assert klein.edge_count == 3
        assert products.direct(c2, c2).edge_count == 2
        assert products.cartesian(c2, c2).edge_count == 4
        assert products.normal(c2, c2).edge_count == 6

    def test_trivial_factor(self):
        group = groups.dihedral(4)
        product = power_graphs.bundle(groups.direct_product(groups.cyclic(1), group)).graph
        assert graphs.are_isomorphic(product, power_graphs.bundle(group).graph)

    def test_swapped_factors_isomorphic(self):
        b1, b2 = power_graphs.bundle(groups.cyclic(4)), power_graphs.bundle(groups.dihedral(3))
        forward = products.generalized(b1.graph, b1.weights, b2.graph, b2.weights)
        backward = products.generalized(b2.graph, b2.weights, b1.graph, b1.weights)
        assert graphs.are_isomorphic(forward, backward)
