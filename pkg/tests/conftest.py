"""
Shared fixtures for the test suite.
"""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path to import our modules
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.power_graph_products.models.graph import SimpleGraph
from src.power_graph_products.services.group_service import GroupService


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def small_groups():
    """A spread of small groups: cyclic, dihedral, quaternion, symmetric, products."""
    groups = GroupService()
    return [
        groups.cyclic(1),
        groups.cyclic(2),
        groups.cyclic(4),
        groups.cyclic(6),
        groups.cyclic(7),
        groups.dihedral(3),
        groups.dihedral(4),
        groups.quaternion8(),
        groups.symmetric(3),
        groups.direct_product(groups.cyclic(2), groups.cyclic(2)),
        groups.direct_product(groups.cyclic(2), groups.cyclic(4)),
    ]


def star(n: int) -> SimpleGraph:
    """Star on n vertices centred at vertex 0."""
    return SimpleGraph.from_edges(n, [(0, v) for v in range(1, n)])


@pytest.fixture
def make_star():
    return star


@pytest.fixture
def write_cayley(tmp_path):
    """Write a table in the Cayley file format under tmp_path and return its path."""

    def write(name: str, table) -> Path:
        rows = [" ".join(str(int(x)) for x in row) for row in table]
        path = tmp_path / name
        path.write_text("\n".join([str(len(rows))] + rows) + "\n")
        return path

    return write
