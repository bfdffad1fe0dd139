"""
Command-line entry point for the graph-spectra toolkit.
"""
import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from colorama import Fore, Style, init

from config import settings
from config.logging_config import get_logger, setup_logging
from src.census.census import census
from src.census.generator import connected_source
from src.errors import InvalidInputError, InvariantViolation
from src.graphs.fixtures import parse_fixture_spec
from src.graphs.graph import Graph, format_edge_list, parse_cmatrix_grid, parse_edge_list
from src.graphs.graph6 import parse_graph6
from src.reporting import templates
from src.spectra.analysis import (
    general_c_separability,
    is_separable,
    rooted_separability,
    rooted_spectrum_factors,
    wronskian_vertex,
)
from src.spectra.constructions import alpha_sweep, cospectral_rooted_pair, graph_text, wronskian_family
from src.spectra.controllability import is_controllable_graph, rooted_controllability
from src.spectra.matrix_family import MatrixKind, charpoly_M, deleted_charpoly
from src.spectra.products import CMatrix, c_product, cartesian_product, rooted_product
from src.spectra.reports import TSV_HEADER
from src.verification.state import create_initial_state
from src.verification.workflow import VerificationWorkflow

logger = get_logger(__name__)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
PRODUCT_TYPES = ("rooted", "c", "cartesian")


# -- output helpers -------------------------------------------------------------

def print_verdict(label: str, verdict: bool):
    colour = Fore.GREEN if verdict else Fore.RED
    print(f"{label}: {colour}{verdict}{Style.RESET_ALL}")


def print_info(message: str):
    print(f"{Fore.CYAN}{message}{Style.RESET_ALL}")


def print_error(message: str):
    print(f"{Fore.RED}error: {message}{Style.RESET_ALL}", file=sys.stderr)


def emit_json(payload):
    if hasattr(payload, "model_dump_json"):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, indent=2))


def verdict_code(verdict: bool, args) -> int:
    return EXIT_FALSE if args.strict and not verdict else EXIT_OK


# -- input helpers --------------------------------------------------------------

def graph_from_ref(ref: str) -> Graph:
    """``NAME[:p1[:p2]]`` fixture, ``g6:<graph6>`` or ``file:<edge-list path>``."""
    if ref.startswith("g6:"):
        return parse_graph6(ref[3:])
    if ref.startswith("file:"):
        return parse_edge_list(Path(ref[5:]).read_text())
    return parse_fixture_spec(ref)


def single_graph(args) -> Graph:
    if args.fixture:
        return parse_fixture_spec(args.fixture)
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.edges:
        text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
        return parse_edge_list(text)
    raise InvalidInputError("give a graph with --fixture, --graph6 or --edges")


def cmatrix_from_text(text: str) -> CMatrix:
    """Rows separated by ';' or newlines, or ``@path`` to read a grid file."""
    raw = Path(text[1:]).read_text() if text.startswith("@") else text.replace(";", "\n")
    return CMatrix(parse_cmatrix_grid(raw))


def parse_grid(text: str) -> List[Fraction]:
    try:
        return [Fraction(tok) for tok in text.replace(" ", "").split(",") if tok]
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(f"invalid alpha grid {text!r}")


# -- subcommands ----------------------------------------------------------------

def cmd_charpoly(args) -> int:
    g = single_graph(args)
    phi = charpoly_M(g, args.kind)
    if args.json:
        emit_json({"kind": str(args.kind), "polynomial": phi.to_json(), "text": phi.to_text()})
    else:
        print(phi.to_text())
    return EXIT_OK


def cmd_deleted_charpoly(args) -> int:
    g = single_graph(args)
    phi = deleted_charpoly(g, args.kind, args.vertex)
    if args.json:
        emit_json({"kind": str(args.kind), "vertex": args.vertex, "polynomial": phi.to_json(), "text": phi.to_text()})
    else:
        print(phi.to_text())
    return EXIT_OK


def product_type(args) -> str:
    if args.product:
        return args.product
    if args.root is not None:
        return "rooted"
    return "c" if args.cmatrix else "cartesian"


def _build_product(args):
    g, h = graph_from_ref(args.g), graph_from_ref(args.h)
    shape = product_type(args)
    if shape == "rooted":
        return rooted_product(g, h, args.root)
    if shape == "c":
        return c_product(g, h, cmatrix_from_text(args.cmatrix))
    return cartesian_product(g, h)


def cmd_product(args) -> int:
    result = _build_product(args)
    phi = charpoly_M(result.graph, args.kind)
    if args.json:
        emit_json({
            "kind": result.kind,
            "order": result.graph.order,
            "graph": graph_text(result.graph),
            "cmatrix": result.cmatrix.classification,
            "charpoly": phi.to_json(),
        })
    else:
        print_info(f"{result.kind} product, order {result.graph.order}, {result.graph.edge_count()} edges")
        print(graph_text(result.graph) if not args.edge_list else format_edge_list(result.graph))
        print(templates.render(templates.CHARPOLY_TEMPLATE, label=f"phi_{args.kind}", polynomial=phi.to_text()))
    return EXIT_OK


def cmd_separable(args) -> int:
    if args.g:
        g, h = graph_from_ref(args.g), graph_from_ref(args.h)
        if args.root is not None:
            verdict = rooted_separability(g, h, args.root, args.kind)
        else:
            c = cmatrix_from_text(args.cmatrix) if args.cmatrix else CMatrix.identity(h.order)
            verdict = general_c_separability(g, h, c, args.kind)
    else:
        verdict = is_separable(single_graph(args), args.kind)
    if args.json:
        emit_json(verdict)
    else:
        extra = ""
        if verdict.attribution:
            extra += f"\n  attribution:      {verdict.attribution}"
        if verdict.common_factor is not None:
            extra += f"\n  common factor:    {verdict.common_factor}"
        for bad in verdict.bad_mu:
            extra += f"\n  bad mu:           roots of {bad.mu_polynomial}"
        print(templates.render(templates.SEPARABLE_TEMPLATE, subject=verdict.subject, kind=verdict.kind,
                               separable=verdict.separable, repeated_factor=verdict.repeated_factor, extra=extra))
        print_verdict("separable", verdict.separable)
    return verdict_code(verdict.separable, args)


def cmd_wronskian(args) -> int:
    g = single_graph(args)
    vertices = [args.vertex] if args.vertex is not None else list(g.vertices)
    reports = [wronskian_vertex(g, args.kind, u) for u in vertices]
    if args.json:
        emit_json(reports[0].model_dump(mode="json") if args.vertex is not None
                  else [r.model_dump(mode="json") for r in reports])
    else:
        for r in reports:
            extra = f"\n  note:             {r.convention}" if r.convention else ""
            print(templates.render(templates.WRONSKIAN_TEMPLATE, vertex=r.vertex, kind=r.kind,
                                   is_wronskian=r.is_wronskian, gcd=r.gcd, w_polynomial=r.w_polynomial,
                                   real_root_count=r.real_root_count, extra=extra))
        print_verdict("Wronskian", all(r.is_wronskian for r in reports))
    return verdict_code(all(r.is_wronskian for r in reports), args)


def cmd_factor_spectrum(args) -> int:
    g, h = graph_from_ref(args.g), graph_from_ref(args.h)
    spectrum = rooted_spectrum_factors(g, h, args.root, args.kind)
    if args.json:
        emit_json(spectrum)
    else:
        print(templates.render(templates.CHARPOLY_TEMPLATE, label="product charpoly",
                               polynomial=spectrum.product_charpoly.to_text()))
        for factor in spectrum.factors:
            mu = f"mu = {factor.rational_mu}" if factor.rational_mu is not None else f"mu root of {factor.mu_factor}"
            print(f"  [{mu}, multiplicity {factor.multiplicity}]  {factor.factor_polynomial}")
    return EXIT_OK


def cmd_controllable(args) -> int:
    report = is_controllable_graph(single_graph(args), args.kind)
    if args.json:
        emit_json(report)
    else:
        print(templates.render(templates.CONTROLLABLE_TEMPLATE, kind=args.kind, **report.model_dump()))
        print_verdict("controllable", report.controllable)
    return verdict_code(report.controllable, args)


def cmd_rooted_controllable(args) -> int:
    g, h = graph_from_ref(args.g), graph_from_ref(args.h)
    report = rooted_controllability(g, h, args.root, args.kind)
    if args.json:
        emit_json(report)
    else:
        print(templates.render(
            templates.ROOTED_CONTROLLABLE_TEMPLATE,
            order=report.product.order,
            kind=args.kind,
            controllable=report.product.controllable,
            rank=report.product.rank,
            g_controllable=report.g_report.controllable,
            h_gcd=report.h_gcd,
            bmu=report.bmu.controllable,
            locus=report.bmu.locus,
        ))
        print_verdict("controllable", report.product.controllable)
    return verdict_code(report.product.controllable, args)


def cmd_cospectral_pair(args) -> int:
    g1, g2, h = graph_from_ref(args.g1), graph_from_ref(args.g2), graph_from_ref(args.h)
    p1, p2, report = cospectral_rooted_pair(g1, g2, h, args.root, args.kind)
    if args.json:
        payload = report.model_dump(mode="json")
        payload.update(product_1=graph_text(p1), product_2=graph_text(p2))
        emit_json(payload)
    else:
        extra = "".join(f"\n  flag:             {f}" for f in report.flags)
        print(templates.render(templates.COSPECTRAL_TEMPLATE, order=report.order, cospectral=report.cospectral,
                               separable_1=report.separable_1, separable_2=report.separable_2,
                               non_isomorphic=report.non_isomorphic,
                               canonical_confirmation=report.canonical_confirmation,
                               charpoly=report.charpoly_1, extra=extra))
        print(graph_text(p1))
        print(graph_text(p2))
        print_verdict("non-isomorphic", report.non_isomorphic)
    return verdict_code(report.non_isomorphic, args)


def cmd_wronskian_family(args) -> int:
    members = wronskian_family(single_graph(args), args.vertex, args.kind, args.n_max)
    if args.json:
        emit_json([m.model_dump(mode="json") for m in members])
    else:
        print_info(f"pendant-path family at vertex {args.vertex} [{args.kind}]")
        for m in members:
            print(templates.render(templates.FAMILY_LINE_TEMPLATE, **m.model_dump(exclude={"gcd"})))
    return EXIT_OK


def cmd_alpha_sweep(args) -> int:
    grid = parse_grid(args.grid) if args.grid else None
    report = alpha_sweep(single_graph(args), args.vertex, grid)
    if args.json:
        emit_json(report)
    else:
        print_info(f"vertex {report.vertex}: {len(report.hits)} of {len(report.grid)} grid values fail")
        for alpha in report.hits:
            print(f"  alpha = {alpha}")
    return EXIT_OK


def cmd_census(args) -> int:
    source = connected_source(args.order, graph6=args.graph6)
    row = census(source, args.kind, jobs=args.jobs, order=args.order, progress=not args.json and args.out != "tsv")
    if args.json or args.out == "json":
        emit_json(row)
    elif args.out == "tsv":
        print(templates.render("{header}\n{row}", header=TSV_HEADER, row=row.as_tsv()))
    else:
        print(templates.render(templates.CENSUS_TEMPLATE, kind=args.kind, **row.model_dump()))
    return EXIT_OK


def cmd_verify(args) -> int:
    state = create_initial_state(
        seed=args.seed,
        instances=args.instances,
        census_max_order=args.census_max_order,
        fail_fast=args.fail_fast,
    )
    state = VerificationWorkflow().run(state)
    if args.json:
        emit_json({
            "summary": state["summary"],
            "results": [r.model_dump(mode="json") for r in state["results"]],
        })
    else:
        print(templates.render_summary(state["summary"], state["results"], verbose=args.verbose))
        print_verdict("all checks passed", state["summary"]["failed"] == 0)
    return EXIT_OK if state["summary"]["failed"] == 0 else EXIT_FALSE


# -- parser ---------------------------------------------------------------------

def kind_arg(text: str) -> MatrixKind:
    try:
        return MatrixKind.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", type=kind_arg, default=MatrixKind.adjacency(),
                        help="A, L, Q, Aalpha:<r> or U:a=<r>,d=<r> (default A)")
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--strict", action="store_true", help="exit 1 when a predicate is false")
    common.add_argument("--log-level", type=str.upper, default=settings.LOG_LEVEL, choices=LOG_LEVELS,
                        help="console log level")

    graph = argparse.ArgumentParser(add_help=False)
    source = graph.add_mutually_exclusive_group()
    source.add_argument("--fixture", help="named fixture, e.g. H5 or G1:5:3")
    source.add_argument("--graph6", help="graph6 string")
    source.add_argument("--edges", help="edge-list file ('-' for stdin)")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--g", help="factor G: fixture, g6:<graph6> or file:<edge list>")
    pair.add_argument("--h", help="factor H, same syntax as --g")
    shape = pair.add_mutually_exclusive_group()
    shape.add_argument("--root", type=int, help="root vertex of H (rooted product)")
    shape.add_argument("--cmatrix", help="C-matrix rows separated by ';' or @file")

    parser = argparse.ArgumentParser(
        prog="graph-spectra",
        description="Exact M-spectra, separability and controllability of graphs and graph products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common, graph], help="characteristic polynomial of M(G)")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("deleted-charpoly", parents=[common, graph], help="charpoly with one vertex deleted")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_deleted_charpoly)

    p = sub.add_parser("product", parents=[common, pair], help="rooted, C- or Cartesian product")
    p.add_argument("--product", choices=PRODUCT_TYPES,
                   help="product type (default: rooted with --root, c with --cmatrix, else cartesian)")
    p.add_argument("--edge-list", action="store_true", help="print the product as an edge list")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("separable", parents=[common, graph, pair], help="distinct M-eigenvalues")
    p.set_defaults(func=cmd_separable)

    p = sub.add_parser("wronskian", parents=[common, graph], help="M-Wronskian vertex test")
    p.add_argument("--vertex", type=int, help="vertex to test (all vertices when omitted)")
    p.set_defaults(func=cmd_wronskian)

    p = sub.add_parser("factor-spectrum", parents=[common, pair], help="rooted-product spectrum per factor")
    p.set_defaults(func=cmd_factor_spectrum)

    p = sub.add_parser("controllable", parents=[common, graph], help="M-controllability")
    p.set_defaults(func=cmd_controllable)

    p = sub.add_parser("rooted-controllable", parents=[common, pair], help="controllability of G o H")
    p.set_defaults(func=cmd_rooted_controllable)

    p = sub.add_parser("cospectral-pair", parents=[common], help="G1 o H and G2 o H")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--root", type=int, required=True)
    p.set_defaults(func=cmd_cospectral_pair)

    p = sub.add_parser("wronskian-family", parents=[common, graph], help="pendant-path Wronskian family")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(func=cmd_wronskian_family)

    p = sub.add_parser("alpha-sweep", parents=[common, graph], help="A_alpha Wronskian failures on a grid")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--grid", help="comma-separated rationals in [0, 1) (default k/64)")
    p.set_defaults(func=cmd_alpha_sweep)

    p = sub.add_parser("census", parents=[common], help="census row of connected graphs")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--graph6", help="graph6 corpus file of connected graphs")
    p.add_argument("--jobs", type=int, default=settings.CENSUS_JOBS)
    p.add_argument("--out", choices=("text", "json", "tsv"), default="text")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run the full cross-check suite")
    p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    p.add_argument("--instances", type=int, default=settings.DEFAULT_INSTANCES)
    p.add_argument("--census-max-order", type=int, default=6)
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def _check_pair_args(args, parser: argparse.ArgumentParser):
    needs_pair = args.command in ("product", "factor-spectrum", "rooted-controllable")
    if args.command == "separable" and (args.g or args.h):
        needs_pair = True
    if needs_pair and not (args.g and args.h):
        parser.error(f"{args.command} needs both --g and --h")
    if args.command in ("factor-spectrum", "rooted-controllable") and args.root is None:
        parser.error(f"{args.command} needs --root")
    if args.command == "product":
        shape = product_type(args)
        if shape == "rooted" and args.root is None:
            parser.error("a rooted product needs --root")
        if shape == "c" and not args.cmatrix:
            parser.error("a C-product needs --cmatrix")
        if shape == "cartesian" and (args.root is not None or args.cmatrix):
            parser.error("a Cartesian product takes neither --root nor --cmatrix")


def main(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and return the exit code."""
    init(autoreset=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        _check_pair_args(args, parser)
    except SystemExit:
        return EXIT_INPUT

    try:
        setup_logging(args.log_level, settings.LOG_TO_FILE)
        return args.func(args)
    except InvariantViolation as exc:
        print_error(str(exc))
        logger.error(f"Invariant violation in {args.command}: {exc}")
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print_error(str(exc))
        return EXIT_INPUT
    except KeyboardInterrupt:
        print_info("interrupted")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
