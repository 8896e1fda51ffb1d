"""
Tests for the graph model, isomorphism testing and graph serialization.
"""
import json

import networkx as nx
import numpy as np
import pytest

from src.power_graph_products.core.config import settings
from src.power_graph_products.core.exceptions import GraphError, GraphParseError, TooLargeError
from src.power_graph_products.models.graph import SimpleGraph
from src.power_graph_products.services.graph_service import GraphService
from src.power_graph_products.services.group_service import GroupService
from src.power_graph_products.services.power_graph_service import PowerGraphService
from src.power_graph_products.utils.export import export_graph, parse_graph_json, to_dot, to_edgelist, to_json
from src.power_graph_products.utils.file_manager import FileManager


groups = GroupService()
power_graphs = PowerGraphService()
graphs = GraphService()


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.vertex_count))
    result.add_edges_from(graph.edges())
    return result


class TestSimpleGraph:
    def test_rejects_loops(self):
        with pytest.raises(GraphError):
            SimpleGraph(np.eye(2, dtype=bool))
        with pytest.raises(GraphError):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            SimpleGraph(np.array([[0, 1], [0, 0]]))

    def test_label_count(self):
        with pytest.raises(GraphError):
            SimpleGraph(np.zeros((2, 2)), ["a"])

    def test_empty_graph(self):
        graph = SimpleGraph.edgeless(0)
        assert graph.vertex_count == 0
        assert graph.edges() == []
        assert not graphs.has_universal_vertex(graph)

    def test_edges_sorted(self):
        graph = SimpleGraph.from_edges(4, [(3, 1), (2, 0), (1, 0)])
        assert graph.edges() == [(0, 1), (0, 2), (1, 3)]
        assert graph.neighbors(1) == [0, 3]
        assert graph.edge_count == 3

    def test_relabel(self):
        path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)], ["a", "b", "c"])
        moved = path.relabel([2, 0, 1])
        assert moved.edges() == [(0, 1), (0, 2)]
        assert moved.labels == ("b", "c", "a")

    def test_relabel_requires_permutation(self):
        with pytest.raises(GraphError):
            SimpleGraph.complete(3).relabel([0, 0, 1])

    def test_random_is_seeded(self):
        first = SimpleGraph.random(np.random.default_rng(5), 8)
        second = SimpleGraph.random(np.random.default_rng(5), 8)
        assert graphs.equal_labeled(first, second)


class TestLabeledComparison:
    def test_edge_difference(self):
        a = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        b = SimpleGraph.from_edges(3, [(0, 1), (0, 2)])
        assert not graphs.equal_labeled(a, b)
        assert graphs.edge_difference(a, b) == ([(1, 2)], [(0, 2)])

    def test_vertex_count_differs(self):
        assert not graphs.equal_labeled(SimpleGraph.edgeless(2), SimpleGraph.edgeless(3))


class TestIsomorphism:
    def test_complete_vs_star(self, make_star):
        assert graphs.find_isomorphism(SimpleGraph.complete(4), make_star(4)) is None

    def test_identical(self):
        graph = power_graphs.power_graph(groups.quaternion8())
        witness = graphs.find_isomorphism(graph, graph)
        assert witness is not None
        assert graphs.is_valid_witness(graph, graph, witness)

    def test_random_relabelings(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 13))
            graph = SimpleGraph.random(rng, n, float(rng.uniform(0.2, 0.8)))
            perm = rng.permutation(n)
            moved = graph.relabel(perm)
            witness = graphs.find_isomorphism(graph, moved)
            assert witness is not None
            assert graphs.is_valid_witness(graph, moved, witness)

    def test_agrees_with_networkx(self, rng):
        for _ in range(150):
            n = int(rng.integers(1, 8))
            a = SimpleGraph.random(rng, n, 0.5)
            b = SimpleGraph.random(rng, n, 0.5)
            assert graphs.are_isomorphic(a, b) == nx.is_isomorphic(to_networkx(a), to_networkx(b))

    def test_regular_graphs(self):
        """Colour refinement cannot split regular graphs; search must decide."""
        hexagon = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        triangles = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        prism = SimpleGraph.from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        bipartite = SimpleGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
        assert not graphs.are_isomorphic(hexagon, triangles)
        assert not graphs.are_isomorphic(prism, bipartite)
        assert graphs.are_isomorphic(hexagon, hexagon.relabel([3, 1, 4, 0, 5, 2]))

    def test_power_graphs(self):
        assert not graphs.are_isomorphic(power_graphs.power_graph(groups.cyclic(8)), power_graphs.power_graph(groups.quaternion8()))
        assert not graphs.are_isomorphic(power_graphs.power_graph(groups.dihedral(4)), power_graphs.power_graph(groups.quaternion8()))
        assert graphs.are_isomorphic(power_graphs.power_graph(groups.dihedral(3)), power_graphs.power_graph(groups.dihedral(3)).relabel([5, 4, 3, 2, 1, 0]))

    def test_quick_rejects(self):
        assert graphs.find_isomorphism(SimpleGraph.edgeless(2), SimpleGraph.edgeless(3)) is None
        assert graphs.find_isomorphism(SimpleGraph.edgeless(3), SimpleGraph.from_edges(3, [(0, 1)])) is None

    def test_refinement_is_joint(self):
        a = SimpleGraph.from_edges(3, [(0, 1)])
        colors_a, colors_b = graphs.refine_colors(a, a.relabel([2, 1, 0]))
        assert sorted(colors_a) == sorted(colors_b)

    def test_too_large(self, monkeypatch):
        monkeypatch.setattr(settings.graphs, "ISO_MAX_VERTICES", 4)
        with pytest.raises(TooLargeError):
            graphs.find_isomorphism(SimpleGraph.complete(5), SimpleGraph.complete(5))

    def test_invalid_witness(self):
        path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        assert not graphs.is_valid_witness(path, path, [1, 0, 2])
        assert not graphs.is_valid_witness(path, path, [0, 0, 2])
        assert graphs.is_valid_witness(path, path, [2, 1, 0])


class TestExport:
    def test_empty_json(self):
        assert to_json(SimpleGraph.edgeless(0)) == '{"vertices":[],"edges":[]}'

    def test_edge_edgelist(self):
        assert to_edgelist(SimpleGraph.complete(2)) == "0,1\n"

    def test_edgelist_sorted_by_label(self):
        graph = SimpleGraph.from_edges(3, [(0, 1), (0, 2)], ["b", "c", "a"])
        assert to_edgelist(graph) == "b,a\nb,c\n"

    def test_dot(self):
        graph = SimpleGraph.from_edges(3, [(0, 1)], ["x", "y", 'say "z"'])
        assert to_dot(graph) == 'graph {\n  "say \\"z\\"";\n  "x" -- "y";\n}\n'

    def test_json_document(self):
        graph = power_graphs.power_graph(groups.cyclic(3))
        document = json.loads(export_graph(graph, "json"))
        assert document == {"vertices": ["0", "1", "2"], "edges": [[0, 1], [0, 2], [1, 2]]}

    def test_json_round_trip(self):
        graph = power_graphs.power_graph(groups.quaternion8())
        parsed = parse_graph_json(to_json(graph))
        assert graphs.equal_labeled(graph, parsed)
        assert parsed.labels == graph.labels

    @pytest.mark.parametrize("text", [
        "not json",
        '{"vertices": ["a"], "edges": [[0, 1]]}',
        '{"vertices": ["a", "b"], "edges": [[1, 1]]}',
        '{"vertices": "ab"}',
    ])
    def test_malformed_json(self, text):
        with pytest.raises(GraphParseError):
            parse_graph_json(text)


class TestGraphFiles:
    def test_load(self, tmp_path):
        path = tmp_path / "c3.json"
        path.write_text(to_json(power_graphs.power_graph(groups.cyclic(3))))
        assert FileManager().load_graph_json(path).edge_count == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphParseError):
            FileManager().load_graph_json(tmp_path / "missing.json")

    def test_file_not_utf8(self, tmp_path):
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xff\xfe\x00garbage")
        with pytest.raises(GraphParseError) as info:
            FileManager().load_graph_json(path)
        assert "not UTF-8" in info.value.message
