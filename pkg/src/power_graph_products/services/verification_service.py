"""
Verification sweeps relating power graphs of direct products to graph products.

Claims checked:

- ``power-product-equality``: P(G1 x G2) equals, as a labeled graph, the
  generalized product of P(G1) and P(G2) under the exponent-progression weights.
- ``cartesian-non-isomorphism``: for nontrivial G1, G2, P(G1 x G2) is not
  isomorphic to P(G1) cartesian P(G2); the power graph has a universal vertex
  and the cartesian product has none.
- ``exponent-progression``: {m : a^m = b} is AP(W(a, b)) on the window [1, 3 o(a)].
- ``classical-as-generalized``: direct, cartesian and normal products are
  generalized products under constant-by-case weights (random graphs).
- ``classical-products-differ`` (informational): P(G1 x G2) against the direct
  and normal products of the factors.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import settings
from ..core.logging import get_logger
from ..models.graph import SimpleGraph
from ..models.group import FiniteGroup
from ..models.report import InstanceResult, ProductKind, VerificationReport
from ..utils.progressions import ap_contains
from .graph_service import GraphService
from .group_service import GroupService
from .power_graph_service import PowerGraphBundle, PowerGraphService
from .product_service import ProductService

logger = get_logger(__name__)

POWER_PRODUCT = "power-product-equality"
CARTESIAN_NON_ISO = "cartesian-non-isomorphism"
EXPONENT_PROGRESSION = "exponent-progression"
CLASSICAL_AS_GENERALIZED = "classical-as-generalized"
CLASSICAL_DIFFER = "classical-products-differ"

# Abelian and not, cyclic and not, p-groups and not.
FAMILY_SPECS = [f"C{n}" for n in range(1, 13)] + ["C2xC2", "C2xC4", "D3", "D4", "D5", "Q8", "S3", "S4"]

Named = Tuple[str, PowerGraphBundle]
GraphPair = Tuple[ProductKind, int, SimpleGraph, SimpleGraph]


def _instance(left: str, right: str) -> str:
    return f"({left}, {right})"


def _edge_lines(graph: SimpleGraph, edges: Iterable[Tuple[int, int]], side: str) -> List[str]:
    return [f"only in {side}: {graph.labels[u]} -- {graph.labels[v]}" for u, v in edges]


def random_graph_pairs(
    seed: int,
    count: Optional[int] = None,
    max_vertices: Optional[int] = None,
    probability: Optional[float] = None,
) -> List[GraphPair]:
    """``count`` seeded random graph pairs for each classical product kind."""
    count = settings.verification.RANDOM_GRAPH_COUNT if count is None else count
    max_vertices = settings.verification.RANDOM_GRAPH_MAX_VERTICES if max_vertices is None else max_vertices
    probability = settings.verification.RANDOM_EDGE_PROBABILITY if probability is None else probability
    rng = np.random.default_rng(seed)
    pairs = []
    for kind in (ProductKind.DIRECT, ProductKind.CARTESIAN, ProductKind.NORMAL):
        for index in range(count):
            n, m = (int(x) for x in rng.integers(1, max_vertices + 1, size=2))
            pairs.append((kind, index, SimpleGraph.random(rng, n, probability), SimpleGraph.random(rng, m, probability)))
    return pairs


class VerificationService:
    """Runs the claims over groups and graphs and renders the reports."""

    def __init__(
        self,
        group_service: Optional[GroupService] = None,
        power_graphs: Optional[PowerGraphService] = None,
        products: Optional[ProductService] = None,
        graphs: Optional[GraphService] = None,
    ):
        self.group_service = group_service or GroupService()
        self.power_graphs = power_graphs or PowerGraphService()
        self.products = products or ProductService()
        self.graphs = graphs or GraphService()

    def family(self, max_order: int) -> List[Named]:
        """Built-in sweep family, restricted to groups of order <= ``max_order``."""
        members = []
        for spec in FAMILY_SPECS:
            group = self.group_service.from_spec(spec)
            if group.order <= max_order:
                members.append((spec, self.power_graphs.bundle(group)))
        return members

    def _product_power_graph(self, b1: PowerGraphBundle, b2: PowerGraphBundle) -> SimpleGraph:
        return self.power_graphs.power_graph(self.group_service.direct_product(b1.group, b2.group))

    def check_power_product(self, left: Named, right: Named) -> InstanceResult:
        """P(G1 x G2) against the generalized product of the factor power graphs."""
        (spec1, b1), (spec2, b2) = left, right
        power = self._product_power_graph(b1, b2)
        generalized = self.products.generalized(b1.graph, b1.weights, b2.graph, b2.weights)
        passed = self.graphs.equal_labeled(power, generalized)
        counterexample = []
        if not passed:
            only_power, only_generalized = self.graphs.edge_difference(power, generalized)
            counterexample = (
                _edge_lines(power, only_power, "power graph")
                + _edge_lines(generalized, only_generalized, "generalized product")
            )
        return InstanceResult(
            instance=_instance(spec1, spec2),
            passed=passed,
            details={
                "power_graph_edges": power.edge_count,
                "generalized_product_edges": generalized.edge_count,
            },
            counterexample=counterexample,
        )

    def check_cartesian_non_isomorphism(self, left: Named, right: Named) -> InstanceResult:
        (spec1, b1), (spec2, b2) = left, right
        power = self._product_power_graph(b1, b2)
        cartesian = self.products.cartesian(b1.graph, b2.graph)
        witness = self.graphs.find_isomorphism(power, cartesian)
        power_universal = self.graphs.has_universal_vertex(power)
        cartesian_universal = self.graphs.has_universal_vertex(cartesian)

        counterexample = []
        if witness is not None:
            counterexample.append(f"isomorphism witness: {witness}")
        if not power_universal:
            counterexample.append("power graph has no universal vertex")
        if cartesian_universal:
            counterexample.append("cartesian product has a universal vertex")
        return InstanceResult(
            instance=_instance(spec1, spec2),
            passed=not counterexample,
            details={
                "power_graph_edges": power.edge_count,
                "cartesian_edges": cartesian.edge_count,
                "isomorphic": witness is not None,
            },
            counterexample=counterexample,
        )

    def check_classical_products_differ(self, left: Named, right: Named) -> InstanceResult:
        (spec1, b1), (spec2, b2) = left, right
        power = self._product_power_graph(b1, b2)
        counterexample = []
        details = {}
        for kind in (ProductKind.DIRECT, ProductKind.NORMAL):
            product = self.products.classical(kind, b1.graph, b2.graph)
            witness = self.graphs.find_isomorphism(power, product)
            details[f"isomorphic_to_{kind.value}"] = witness is not None
            if witness is not None:
                counterexample.append(f"isomorphic to the {kind.value} product via {witness}")
        return InstanceResult(
            instance=_instance(spec1, spec2),
            passed=not counterexample,
            details=details,
            counterexample=counterexample,
        )

    def check_exponent_progressions(self, member: Named) -> InstanceResult:
        """Brute-force exponent windows against membership in AP(W(a, b))."""
        spec, bundle = member
        group, weights = bundle.group, bundle.weights
        counterexample = []
        for a in range(group.order):
            bound = 3 * group.element_order(a)
            for b in range(group.order):
                window = self.power_graphs.exponent_set_window(group, a, b, bound)
                expected = {m for m in range(1, bound + 1) if ap_contains(weights(a, b), m)}
                if window != expected:
                    counterexample.append(
                        f"{group.label(a)} -> {group.label(b)}: exponents {sorted(window)} vs AP{weights(a, b)}"
                    )
        return InstanceResult(
            instance=spec,
            passed=not counterexample,
            details={"order": group.order, "pairs": group.order ** 2},
            counterexample=counterexample,
        )

    def check_classical_as_generalized(self, kind: ProductKind, index: int, a: SimpleGraph, b: SimpleGraph) -> InstanceResult:
        expected = self.products.classical(kind, a, b)
        generalized = self.products.classical_as_generalized(kind, a, b)
        passed = self.graphs.equal_labeled(expected, generalized)
        counterexample = []
        if not passed:
            only_classical, only_generalized = self.graphs.edge_difference(expected, generalized)
            counterexample = (
                _edge_lines(expected, only_classical, f"{kind.value} product")
                + _edge_lines(generalized, only_generalized, "generalized product")
            )
        return InstanceResult(
            instance=f"{kind.value} #{index:02d} ({a.vertex_count}x{b.vertex_count})",
            passed=passed,
            details={"edges": expected.edge_count},
            counterexample=counterexample,
        )

    def _run(self, claim: str, check: Callable, tasks: Sequence[tuple], workers: int, **report_fields) -> VerificationReport:
        started = time.perf_counter()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda task: check(*task), tasks))
        else:
            results = [check(*task) for task in tasks]
        report = VerificationReport(
            claim=claim,
            instances=sorted(results, key=lambda result: result.instance),
            wall_time=time.perf_counter() - started,
            **report_fields,
        )
        level = "passed" if not report.failures else f"{len(report.failures)} failing"
        logger.info("%s: %d instances, %s", claim, len(report.instances), level)
        for failure in report.failures:
            logger.warning("%s failed on %s", claim, failure.instance)
        return report

    def verify_power_product(
        self,
        g1: FiniteGroup,
        g2: FiniteGroup,
        spec1: Optional[str] = None,
        spec2: Optional[str] = None,
    ) -> VerificationReport:
        """Check P(G1 x G2) = P(G1) x_W P(G2) for one pair."""
        left = (spec1 or g1.name, self.power_graphs.bundle(g1))
        right = (spec2 or g2.name, self.power_graphs.bundle(g2))
        return self._run(POWER_PRODUCT, self.check_power_product, [(left, right)], workers=1)

    def verify_all(
        self,
        max_order: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> List[VerificationReport]:
        """Run every claim over the family with product order <= ``max_order``."""
        max_order = settings.verification.max_order if max_order is None else max_order
        seed = settings.verification.seed if seed is None else seed
        workers = settings.verification.WORKERS if workers is None else workers
        if not 1 <= max_order <= settings.verification.MAX_ORDER_CAP:
            raise ValueError(f"max_order must be in [1, {settings.verification.MAX_ORDER_CAP}], got {max_order}")

        members = self.family(max_order)
        pairs = [
            (left, right)
            for left in members
            for right in members
            if left[1].group.order * right[1].group.order <= max_order
        ]
        nontrivial = [
            (left, right) for left, right in pairs
            if left[1].group.order > 1 and right[1].group.order > 1
        ]
        skip = None if nontrivial else "requires two nontrivial factors"
        logger.info("Sweeping %d groups, %d pairs (max order %d, seed %d)", len(members), len(pairs), max_order, seed)

        reports = [
            self._run(POWER_PRODUCT, self.check_power_product, pairs, workers),
            self._run(CARTESIAN_NON_ISO, self.check_cartesian_non_isomorphism, nontrivial, workers, skipped=skip),
            self._run(EXPONENT_PROGRESSION, self.check_exponent_progressions, [(member,) for member in members], workers),
            self._run(CLASSICAL_AS_GENERALIZED, self.check_classical_as_generalized, random_graph_pairs(seed), workers),
            self._run(
                CLASSICAL_DIFFER, self.check_classical_products_differ, nontrivial, workers,
                skipped=skip, informational=True,
            ),
        ]
        return sorted(reports, key=lambda report: report.claim)

    @staticmethod
    def status(report: VerificationReport) -> str:
        if report.skipped and not report.instances:
            return "SKIP"
        if report.failures:
            return "INFO" if report.informational else "FAIL"
        return "PASS"

    def render_report(self, report: VerificationReport, timings: bool = False) -> str:
        """Per-instance listing of one report."""
        lines = [f"claim: {report.claim}  [{self.status(report)}]"]
        if report.skipped:
            lines.append(f"  skipped: {report.skipped}")
        for result in report.instances:
            facts = " ".join(f"{key}={value}" for key, value in sorted(result.details.items()))
            lines.append(f"  {'ok  ' if result.passed else 'FAIL'} {result.instance} {facts}".rstrip())
            lines.extend(f"      {line}" for line in result.counterexample)
        if timings:
            lines.append(f"  wall time: {report.wall_time:.3f}s")
        return "\n".join(lines) + "\n"

    def render_summary(self, reports: Sequence[VerificationReport], timings: bool = False) -> str:
        """Summary table; byte-identical across runs unless ``timings`` is set."""
        header = f"{'claim':<28} {'instances':>9} {'passed':>7} {'failed':>7}  status"
        if timings:
            header += "   seconds"
        lines = [header]
        for report in sorted(reports, key=lambda r: r.claim):
            failed = len(report.failures)
            row = (
                f"{report.claim:<28} {len(report.instances):>9} "
                f"{len(report.instances) - failed:>7} {failed:>7}  {self.status(report):<6}"
            )
            if timings:
                row += f" {report.wall_time:>9.3f}"
            lines.append(row.rstrip())
        overall = "PASS" if all(report.passed for report in reports) else "FAIL"
        lines.append(f"overall: {overall}")
        return "\n".join(lines) + "\n"
