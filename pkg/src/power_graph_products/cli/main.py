"""
argparse command line: build, product, verify-theorem, verify-all, iso, stats, serve.

Exit codes: 0 success or pass, 1 negative outcome (not isomorphic, a check
failed), 2 usage or input error. Results go to stdout, diagnostics to stderr.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ..core.config import settings
from ..core.exceptions import PowerGraphError
from ..core.logging import setup_logging
from ..models.report import ExportFormat, ProductKind
from ..services.toolkit_service import ToolkitService

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

GROUP_HELP = (
    "group expression: C<n> cyclic, D<n> dihedral of order 2n, S<n> symmetric (n <= 5), "
    "Q8 quaternion, cayley:<path> table file; join factors with 'x' for direct products, e.g. C2xD4"
)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in ExportFormat], default=settings.graphs.DEFAULT_FORMAT,
                        help="graph output format (default: %(default)s)")
    common.add_argument("--max-order", type=int, default=settings.verification.max_order,
                        help="largest product order swept by verify-all (default: %(default)s)")
    common.add_argument("--seed", type=int, default=settings.verification.seed,
                        help="seed for random graphs (default: %(default)s)")
    common.add_argument("--dump-weights", action="store_true",
                        help="print the exponent-progression weight table to stderr")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("--log-file", type=Path, default=None, help="also write logs to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="power-graph-products",
        description="Power graphs of finite groups and their graph products.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="print the power graph of a group")
    build.add_argument("spec", help=GROUP_HELP)

    product = commands.add_parser("product", parents=[common], help="print a product of two power graphs")
    product.add_argument("kind", choices=[k.value for k in ProductKind],
                         help="cartesian is the box product, normal the strong product")
    product.add_argument("left", help=GROUP_HELP)
    product.add_argument("right", help=GROUP_HELP)

    theorem = commands.add_parser("verify-theorem", parents=[common],
                                  help="check P(G1 x G2) against the generalized product of P(G1), P(G2)")
    theorem.add_argument("left", help=GROUP_HELP)
    theorem.add_argument("right", help=GROUP_HELP)
    theorem.add_argument("--timings", action="store_true", help="include wall times")

    sweep = commands.add_parser("verify-all", parents=[common], help="run every check over the built-in family")
    sweep.add_argument("--workers", type=int, default=settings.verification.WORKERS,
                       help="threads for independent instances (default: %(default)s)")
    sweep.add_argument("--details", action="store_true", help="list every instance, not just the summary")
    sweep.add_argument("--timings", action="store_true", help="include wall times (output no longer reproducible)")

    iso = commands.add_parser("iso", parents=[common], help="test two JSON graphs for isomorphism")
    iso.add_argument("left", type=Path)
    iso.add_argument("right", type=Path)

    stats = commands.add_parser("stats", parents=[common], help="summarize a group and its power graph")
    stats.add_argument("spec", help=GROUP_HELP)

    serve = commands.add_parser("serve", parents=[common], help="run the HTTP API")
    serve.add_argument("--host", default=settings.host)
    serve.add_argument("--port", type=int, default=settings.port)
    return parser


def _print_weights(dump: Optional[str]) -> None:
    if dump:
        print(dump, file=sys.stderr)


def _cmd_build(service: ToolkitService, args: argparse.Namespace) -> int:
    _, text, dump = service.build(args.spec, args.format, dump_weights=args.dump_weights)
    _print_weights(dump)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_product(service: ToolkitService, args: argparse.Namespace) -> int:
    _, text, dump = service.product(args.kind, args.left, args.right, args.format, dump_weights=args.dump_weights)
    _print_weights(dump)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify_theorem(service: ToolkitService, args: argparse.Namespace) -> int:
    report = service.verify_theorem(args.left, args.right)
    sys.stdout.write(service.verification.render_report(report, timings=args.timings))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_verify_all(service: ToolkitService, args: argparse.Namespace) -> int:
    cap = settings.verification.MAX_ORDER_CAP
    if not 1 <= args.max_order <= cap:
        print(f"error: --max-order must be in [1, {cap}]", file=sys.stderr)
        return EXIT_ERROR
    reports = service.verify_all(max_order=args.max_order, seed=args.seed, workers=args.workers)
    if args.details:
        for report in reports:
            sys.stdout.write(service.verification.render_report(report, timings=args.timings))
    sys.stdout.write(service.verification.render_summary(reports, timings=args.timings))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_NEGATIVE


def _cmd_iso(service: ToolkitService, args: argparse.Namespace) -> int:
    witness = service.iso(service.load_graph(args.left), service.load_graph(args.right))
    if witness is None:
        print("not isomorphic")
        return EXIT_NEGATIVE
    print("isomorphic")
    print("witness: " + " ".join(str(v) for v in witness))
    return EXIT_OK


def _cmd_stats(service: ToolkitService, args: argparse.Namespace) -> int:
    stats = service.stats(args.spec)
    print(f"group: {stats.spec}")
    print(f"order: {stats.order}")
    print(f"abelian: {stats.abelian}")
    print("element orders: " + ", ".join(f"{order}:{count}" for order, count in stats.order_histogram.items()))
    print(f"power graph edges: {stats.edge_count}")
    print(f"degree range: {stats.min_degree}..{stats.max_degree}")
    print(f"universal vertices: {stats.universal_vertices}")
    print(f"complete: {stats.complete}")
    return EXIT_OK


def _cmd_serve(service: ToolkitService, args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run(
        "src.power_graph_products.api.app:app",
        host=args.host,
        port=args.port,
        reload=settings.is_debug,
        log_level="info",
    )
    return EXIT_OK


COMMANDS = {
    "build": _cmd_build,
    "product": _cmd_product,
    "verify-theorem": _cmd_verify_theorem,
    "verify-all": _cmd_verify_all,
    "iso": _cmd_iso,
    "stats": _cmd_stats,
    "serve": _cmd_serve,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(level="DEBUG" if args.verbose else None, log_file=args.log_file)
    service = ToolkitService(default_format=args.format)
    try:
        return COMMANDS[args.command](service, args)
    except PowerGraphError as e:
        print(f"error: {e.message}", file=sys.stderr)
        if e.details:
            print(e.details, file=sys.stderr)
        return EXIT_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
