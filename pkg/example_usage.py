#!/usr/bin/env python3
"""
Example usage of the Power Graph Products library.

Builds the power graph of C2 x C2 and the three classical products of
P(C2) with itself, then checks the power graph against the generalized
product.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.power_graph_products.services.toolkit_service import ToolkitService
from src.power_graph_products.utils.export import to_edgelist


def show_power_graph(toolkit):
    """Print P(C2 x C2)"""
    print("🔢 Power graph of C2 x C2")
    bundle = toolkit.bundle("C2xC2")
    print(to_edgelist(bundle.graph))
    print("Weights:")
    print(bundle.weights.dump(bundle.group.labels))
    return bundle


def show_products(toolkit, power):
    """Compare P(C2 x C2) with the classical products of P(C2)"""
    c2 = toolkit.bundle("C2")
    for kind in ("direct", "cartesian", "normal"):
        product = toolkit.products.classical(kind, c2.graph, c2.graph)
        same = toolkit.graphs.are_isomorphic(power.graph, product)
        print(f"📐 {kind:<9} {product.edge_count} edges, isomorphic to the power graph: {same}")

    generalized = toolkit.products.generalized(c2.graph, c2.weights, c2.graph, c2.weights)
    print(f"✅ generalized product equals the power graph: {toolkit.graphs.equal_labeled(power.graph, generalized)}")


def main():
    print("🚀 Power Graph Products - Example Usage")
    print("=" * 40)
    toolkit = ToolkitService()
    power = show_power_graph(toolkit)
    print()
    show_products(toolkit, power)


if __name__ == "__main__":
    main()
