"""
Separability decisions, Wronskian vertices and product spectra.

Every decision that has a second, theorem-based route computes both and
raises InvariantViolation when they disagree.
"""
from typing import List, Optional

from config.logging_config import get_logger
from src.algebra.linalg import charpoly
from src.algebra.poly import Poly, poly_gcd, squarefree_decomposition, wronskian_polynomial
from src.algebra.resultant import difference_polynomial, resultant_in_t
from src.algebra.roots import RootInterval, isolate_real_roots, refine_root, sturm_count
from src.errors import InvariantViolation
from src.graphs.graph import Graph
from src.spectra.matrix_family import MatrixKind, build_matrix, characteristic_pair, charpoly_M
from src.spectra.products import (
    CMatrix,
    assemble_product_matrix,
    c_product,
    c_product_charpoly_via_resultant,
    rooted_product,
)
from src.spectra.reports import BadMu, RootedSpectrum, SeparabilityVerdict, SpectrumFactor, WronskianReport

logger = get_logger(__name__)

SINGLE_VERTEX_CONVENTION = (
    "single-vertex graph: the deleted polynomial is the constant 1; "
    "reported as not a Wronskian vertex by convention"
)


def repeated_factor(phi: Poly) -> Poly:
    """Monic gcd(phi, phi'); the constant 1 exactly when phi is squarefree."""
    if phi.degree() <= 0:
        return Poly.one()
    return poly_gcd(phi, phi.derivative())


def polynomial_separability(phi: Poly, subject: str, kind: MatrixKind) -> SeparabilityVerdict:
    d = repeated_factor(phi)
    separable = d.degree() == 0
    return SeparabilityVerdict(
        subject=subject,
        kind=str(kind),
        separable=separable,
        repeated_factor=d,
        multiple_roots=[] if separable else isolate_real_roots(d),
        routes={"squarefree": separable},
    )


def is_separable(g: Graph, kind: MatrixKind) -> SeparabilityVerdict:
    return polynomial_separability(charpoly_M(g, kind), f"graph of order {g.order}", kind)


# -- Wronskian vertices --------------------------------------------------------

def wronskian_vertex(h: Graph, kind: MatrixKind, u: int) -> WronskianReport:
    """Decide whether u is an M-Wronskian vertex of h by gcd and by Sturm count on W."""
    h.check_vertex(u)
    f, g = characteristic_pair(h, kind, u)
    w = wronskian_polynomial(f, g)
    common = poly_gcd(f, g)
    real_roots = sturm_count(w)
    by_gcd = common.degree() == 0
    by_sturm = real_roots == 0
    if by_gcd != by_sturm:
        raise InvariantViolation(
            f"Wronskian routes disagree at vertex {u} for kind {kind}",
            {"gcd": common, "real_roots_of_W": real_roots},
        )
    convention = None
    verdict = by_gcd
    if h.order == 1:
        verdict, convention = False, SINGLE_VERTEX_CONVENTION
    return WronskianReport(
        vertex=u,
        kind=str(kind),
        is_wronskian=verdict,
        w_polynomial=w,
        gcd=common,
        real_root_count=real_roots,
        convention=convention,
    )


def all_wronskian_vertices(h: Graph, kind: MatrixKind) -> List[int]:
    return [u for u in h.vertices if wronskian_vertex(h, kind, u).is_wronskian]


def has_wronskian_vertex(h: Graph, kind: MatrixKind) -> bool:
    """True iff at least one vertex passes; a graph that is not separable never has one."""
    if h.order < 2:
        return False
    if repeated_factor(charpoly_M(h, kind)).degree() > 0:
        return False
    return any(wronskian_vertex(h, kind, u).is_wronskian for u in h.vertices)


# -- rooted products -----------------------------------------------------------

def rooted_spectrum_factors(g: Graph, h: Graph, root: int, kind: MatrixKind) -> RootedSpectrum:
    """Product charpoly as Res_t(phi_M(G), f - t*g), grouped per squarefree factor of phi_M(G)."""
    h.check_vertex(root)
    phi_g = charpoly_M(g, kind)
    f, gu = characteristic_pair(h, kind, root)
    pencil = [f, -gu]
    total = resultant_in_t(phi_g, pencil)
    direct = charpoly(build_matrix(rooted_product(g, h, root).graph, kind))
    if total != direct:
        raise InvariantViolation(
            "product charpoly via resultant differs from the direct charpoly",
            {"resultant": total, "direct": direct},
        )
    factors = []
    for p, mult in squarefree_decomposition(phi_g):
        rational_mu = -p.coeff(0) if p.degree() == 1 else None
        part = f - gu * rational_mu if rational_mu is not None else resultant_in_t(p, pencil)
        factors.append(SpectrumFactor(mu_factor=p, multiplicity=mult, factor_polynomial=part, rational_mu=rational_mu))
    return RootedSpectrum(product_charpoly=total, factors=factors, direct_charpoly=direct, routes_agree=True)


def _mu_certificate(defect: Poly, f: Poly, gu: Poly, phi_g: Poly) -> Optional[BadMu]:
    # Res_x(defect(x), f(x) - t*g(x)) vanishes at every mu for which f - mu*g meets defect
    pencil_in_x = [Poly((f.coeff(i), -gu.coeff(i))) for i in range(max(f.degree(), gu.degree()) + 1)]
    locus = resultant_in_t(defect, pencil_in_x)
    if locus.is_zero():
        return None
    bad = poly_gcd(locus, phi_g)
    if bad.degree() <= 0:
        return None
    w = wronskian_polynomial(f, gu)
    return BadMu(
        mu_polynomial=bad,
        mu_intervals=isolate_real_roots(bad),
        root_intervals=isolate_real_roots(poly_gcd(defect, w)),
    )


def rooted_separability(g: Graph, h: Graph, root: int, kind: MatrixKind) -> SeparabilityVerdict:
    """Separability of G o H, directly and as 'G separable and root a Wronskian vertex'."""
    h.check_vertex(root)
    product = rooted_product(g, h, root).graph
    phi = charpoly(build_matrix(product, kind))
    direct = polynomial_separability(phi, f"rooted product of orders {g.order} and {h.order}", kind)

    g_sep = is_separable(g, kind).separable
    f, gu = characteristic_pair(h, kind, root)
    common = poly_gcd(f, gu)
    theorem = g_sep and common.degree() == 0
    if theorem != direct.separable:
        raise InvariantViolation(
            "rooted separability routes disagree",
            {"squarefree": direct.separable, "g_separable": g_sep, "gcd": common},
        )
    routes = {"squarefree": direct.separable, "g-separable-and-wronskian": theorem}
    if direct.separable:
        return direct.model_copy(update={"routes": routes})

    update = {"routes": routes}
    if not g_sep:
        update["attribution"] = "g-inseparable"
    elif common.degree() > 0:
        update.update(attribution="common-factor", common_factor=common)
    else:
        cert = _mu_certificate(direct.repeated_factor, f, gu, charpoly_M(g, kind))
        if cert is None:
            raise InvariantViolation(
                "repeated factor not attributable to an eigenvalue of G",
                {"repeated_factor": direct.repeated_factor},
            )
        update.update(attribution="bad-mu", bad_mu=[cert])
    logger.debug(f"rooted product not separable: {update.get('attribution')}")
    return direct.model_copy(update=update)


# -- Cartesian and general C-products ----------------------------------------

def cartesian_separability(g: Graph, h: Graph, kind: MatrixKind) -> SeparabilityVerdict:
    """Separable iff both factors are and no nonzero eigenvalue difference is shared."""
    c = CMatrix.identity(h.order)
    phi = charpoly(assemble_product_matrix(g, h, c, kind))
    direct = polynomial_separability(phi, f"Cartesian product of orders {g.order} and {h.order}", kind)

    phi_g, phi_h = charpoly_M(g, kind), charpoly_M(h, kind)
    g_sep = repeated_factor(phi_g).degree() == 0
    h_sep = repeated_factor(phi_h).degree() == 0
    shared = Poly.one()
    if g_sep and h_sep:
        shared = poly_gcd(difference_polynomial(phi_g), difference_polynomial(phi_h))
    theorem = g_sep and h_sep and shared.degree() == 0
    if theorem != direct.separable:
        raise InvariantViolation(
            "Cartesian separability routes disagree",
            {"squarefree": direct.separable, "g_separable": g_sep, "h_separable": h_sep, "shared": shared},
        )
    update = {"routes": {"squarefree": direct.separable, "difference-sets": theorem}}
    if not direct.separable:
        if not g_sep:
            update["attribution"] = "g-inseparable"
        elif not h_sep:
            update["attribution"] = "h-inseparable"
        else:
            update.update(attribution="shared-difference", common_factor=shared)
    return direct.model_copy(update=update)


def general_c_separability(g: Graph, h: Graph, c: CMatrix, kind: MatrixKind) -> SeparabilityVerdict:
    """Squarefree test on the C-product, cross-checked by the resultant route when it applies."""
    product = c_product(g, h, c).graph
    phi = charpoly(build_matrix(product, kind))
    direct = polynomial_separability(phi, f"C-product ({c.classification}) of orders {g.order} and {h.order}", kind)
    routes = {"squarefree": direct.separable}
    if c.is_diagonal or kind.d == 0:
        via_resultant = c_product_charpoly_via_resultant(g, h, c, kind)
        if via_resultant != phi:
            raise InvariantViolation(
                "C-product charpoly via resultant differs from the direct charpoly",
                {"resultant": via_resultant, "direct": phi},
            )
        routes["resultant"] = repeated_factor(via_resultant).degree() == 0
    if c.classification == "single-entry":
        root = next(i + 1 for i in range(c.order) if c.rows[i][i])
        routes["rooted"] = rooted_separability(g, h, root, kind).separable
    elif c.classification == "identity":
        routes["cartesian"] = cartesian_separability(g, h, kind).separable
    if len(set(routes.values())) > 1:
        raise InvariantViolation("C-product separability routes disagree", routes)
    return direct.model_copy(update={"routes": routes})


# -- interlacing ---------------------------------------------------------------

def _shrink_away(f: Poly, iv: RootInterval, g: Poly) -> RootInterval:
    """Refine an isolating interval of f until it holds no root of g (gcd(f, g) = 1)."""
    while not iv.is_exact and sturm_count(g, iv.lo, iv.hi) > 0:
        iv = refine_root(f, iv, iv.width / 2)
    return iv


def interlacing_check(f: Poly, g: Poly) -> bool:
    """Strict interlacing: deg g = deg f - 1 and one root of g between consecutive roots of f."""
    n = f.degree()
    if n < 1 or g.degree() != n - 1:
        return False
    if repeated_factor(f).degree() > 0 or poly_gcd(f, g).degree() > 0:
        return False
    f_roots = isolate_real_roots(f)
    if len(f_roots) != n:
        return False
    if n == 1:
        return True
    if repeated_factor(g).degree() > 0 or sturm_count(g) != n - 1:
        return False
    f_roots = [_shrink_away(f, iv, g) for iv in f_roots]
    for left, right in zip(f_roots, f_roots[1:]):
        if sturm_count(g, left.hi, right.lo) != 1:
            return False
    return True
