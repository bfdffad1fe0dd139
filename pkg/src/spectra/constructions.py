"""
Verified constructions: Wronskian-vertex families along pendant paths and
cospectral separable pairs of rooted products.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import settings
from config.logging_config import get_logger
from src.algebra.poly import poly_gcd
from src.errors import InvariantViolation, PreconditionError
from src.graphs.canonical import canonical_form, is_isomorphic
from src.graphs.graph import Graph, format_edge_list, pendant_path_extend
from src.graphs.graph6 import encode_graph6
from src.spectra.analysis import repeated_factor, wronskian_vertex
from src.spectra.matrix_family import MatrixKind, charpoly_M
from src.spectra.products import pendant_recurrence, rooted_product
from src.spectra.reports import AlphaSweepReport, CospectralPairReport, FamilyMember

logger = get_logger(__name__)


def graph_text(g: Graph) -> str:
    """graph6 for unweighted graphs, edge-list text otherwise."""
    if g.is_weighted:
        return format_edge_list(g)
    return encode_graph6(g).decode("ascii")


def wronskian_family(g: Graph, v: int, kind: MatrixKind, n_max: int) -> List[FamilyMember]:
    """Extend g by pendant paths of length 1..n_max at v and verify each pendant is a Wronskian vertex."""
    g.check_vertex(v)
    first, u1 = pendant_path_extend(g, v, 1)
    seed = wronskian_vertex(first, kind, u1)
    if not seed.is_wronskian:
        raise PreconditionError(
            "first-pendant-wronskian",
            f"u_1 is not a {kind}-Wronskian vertex of the one-step extension (gcd {seed.gcd})",
            witness=seed.gcd,
        )
    members = []
    for n in range(1, n_max + 1):
        extended, pendant = pendant_path_extend(g, v, n)
        f_n, g_n = pendant_recurrence(g, v, n, kind)
        report = wronskian_vertex(extended, kind, pendant)
        by_recurrence = poly_gcd(f_n, g_n)
        if not report.is_wronskian or by_recurrence.degree() > 0:
            raise InvariantViolation(
                f"pendant u_{n} lost the Wronskian property",
                {"gcd_direct": report.gcd, "gcd_recurrence": by_recurrence},
            )
        logger.debug(f"family member n={n}: order {extended.order} verified")
        members.append(FamilyMember(
            n=n, order=extended.order, pendant=pendant, verified=True,
            gcd=report.gcd, graph=graph_text(extended),
        ))
    return members


def cospectral_rooted_pair(g1: Graph, g2: Graph, h: Graph, root: int,
                           kind: MatrixKind) -> Tuple[Graph, Graph, CospectralPairReport]:
    """Build G1 o H and G2 o H and verify they are cospectral and separable."""
    phi1, phi2 = charpoly_M(g1, kind), charpoly_M(g2, kind)
    if phi1 != phi2:
        raise PreconditionError("cospectral-factors", f"factors are not {kind}-cospectral", witness=phi1 - phi2)
    for name, phi in (("g1-separable", phi1), ("g2-separable", phi2)):
        defect = repeated_factor(phi)
        if defect.degree() > 0:
            raise PreconditionError(name, f"repeated factor {defect}", witness=defect)
    seed = wronskian_vertex(h, kind, root)
    if not seed.is_wronskian:
        raise PreconditionError("wronskian-root", f"root {root} is not a {kind}-Wronskian vertex (gcd {seed.gcd})",
                                witness=seed.gcd)

    p1 = rooted_product(g1, h, root).graph
    p2 = rooted_product(g2, h, root).graph
    logger.info(f"Cospectral pair: products of order {p1.order}")
    c1, c2 = charpoly_M(p1, kind), charpoly_M(p2, kind)
    sep1 = repeated_factor(c1).degree() == 0
    sep2 = repeated_factor(c2).degree() == 0
    if c1 != c2 or not (sep1 and sep2):
        raise InvariantViolation(
            "cospectral construction produced a non-cospectral or non-separable pair",
            {"cospectral": c1 == c2, "separable_1": sep1, "separable_2": sep2},
        )

    factors_iso = is_isomorphic(g1, g2)
    confirmation: Optional[bool] = None
    if p1.order <= settings.CANONICAL_MAX_ORDER:
        confirmation = canonical_form(p1) != canonical_form(p2)
        if confirmation == factors_iso:
            raise InvariantViolation(
                "product isomorphism disagrees with factor isomorphism",
                {"factors_isomorphic": factors_iso, "products_non_isomorphic": confirmation},
            )
    flags = ["degenerate: isomorphic factors give isomorphic products"] if factors_iso else []
    report = CospectralPairReport(
        order=p1.order,
        charpoly_1=c1,
        charpoly_2=c2,
        cospectral=True,
        separable_1=sep1,
        separable_2=sep2,
        factors_isomorphic=factors_iso,
        non_isomorphic=not factors_iso,
        canonical_confirmation=confirmation,
        flags=flags,
    )
    return p1, p2, report


def dyadic_grid(steps: int = 64) -> List[Fraction]:
    """0, 1/steps, ..., (steps - 1)/steps."""
    return [Fraction(k, steps) for k in range(steps)]


def alpha_sweep(h: Graph, u: int, grid: Optional[Sequence[Fraction]] = None) -> AlphaSweepReport:
    """Exact A_alpha Wronskian test at each grid value; returns the values where u fails."""
    h.check_vertex(u)
    grid = list(dyadic_grid() if grid is None else grid)
    hits = []
    for alpha in grid:
        if not wronskian_vertex(h, MatrixKind.a_alpha(alpha), u).is_wronskian:
            hits.append(Fraction(alpha))
    logger.info(f"alpha sweep over {len(grid)} values: {len(hits)} hits")
    return AlphaSweepReport(vertex=u, grid=grid, hits=hits)
