"""
Controllability of M-matrices: walk matrices, exact ranks and the
decomposition of rooted products through B(mu) = M(H) + mu*E_11.
"""
from fractions import Fraction
from typing import List, Optional

import numpy as np

from config import settings
from config.logging_config import get_logger
from src.algebra.extension import ExtensionContext, ext_rank
from src.algebra.linalg import Matrix, exact_rank, left_kernel_vector, mat_vec, poly_det
from src.algebra.poly import Poly, poly_gcd, squarefree_part
from src.algebra.roots import sturm_count
from src.errors import InvariantViolation
from src.graphs.graph import Graph, is_connected
from src.spectra.matrix_family import MatrixKind, build_matrix, characteristic_pair, charpoly_M
from src.spectra.products import rooted_product
from src.spectra.reports import BmuVerdict, ControllabilityReport, FactorRank, RootedControllabilityReport

logger = get_logger(__name__)


def controllability_matrix(m: Matrix) -> Matrix:
    """The n x n matrix with columns 1, M1, M^2 1, ..., M^(n-1) 1."""
    n = len(m)
    columns = []
    v = [Fraction(1)] * n
    for _ in range(n):
        columns.append(v)
        v = mat_vec(m, v)
    return [[columns[k][i] for k in range(n)] for i in range(n)]


def is_controllable_graph(g: Graph, kind: MatrixKind) -> ControllabilityReport:
    """Connected and full walk-matrix rank; the rank equals the number of main eigenvalues."""
    walk = controllability_matrix(build_matrix(g, kind))
    rank = exact_rank(walk)
    connected = is_connected(g)
    kernel = None
    if rank < g.order:
        kernel = left_kernel_vector(walk)
    return ControllabilityReport(
        order=g.order,
        rank=rank,
        connected=connected,
        controllable=connected and rank == g.order,
        main_eigenvalue_count=rank,
        left_kernel_vector=kernel,
    )


def _bmu_walk_matrix(h: Graph, root: int, kind: MatrixKind) -> List[List[Poly]]:
    """Walk matrix of B(t) = M(H) + t*E_11 with the root moved to the first row, over Q[t]."""
    rooted = h.with_root_first(root)
    mh = build_matrix(rooted, kind)
    m = h.order
    b = [[Poly.constant(mh[i][j]) for j in range(m)] for i in range(m)]
    b[0][0] = b[0][0] + Poly.x()
    columns = []
    v = [Poly.one()] * m
    for _ in range(m):
        columns.append(v)
        v = [sum((b[i][j] * v[j] for j in range(m)), Poly()) for i in range(m)]
    return [[columns[k][i] for k in range(m)] for i in range(m)]


def bmu_deficiency_locus(h: Graph, root: int, kind: MatrixKind) -> Poly:
    """det of the walk matrix of B(t); its roots are the mu where B(mu) is not controllable."""
    h.check_vertex(root)
    return poly_det(_bmu_walk_matrix(h, root, kind))


def bmu_controllable_all_mu(h: Graph, root: int, kind: MatrixKind,
                            universal: bool = True, g: Optional[Graph] = None) -> BmuVerdict:
    """
    Decide controllability of B(mu) for every real mu (universal) or for every mu in Spec_M(g).

    Args:
        h: rooted factor
        root: root vertex of h
        kind: matrix kind
        universal: quantify over all real mu instead of the spectrum of g
        g: the graph whose spectrum is used when universal is False

    Returns:
        BmuVerdict: verdict with the deficiency locus as certificate
    """
    locus = bmu_deficiency_locus(h, root, kind)
    if universal:
        count = sturm_count(locus) if not locus.is_zero() else -1
        return BmuVerdict(
            controllable=count == 0,
            universal=True,
            locus=locus,
            real_root_count=max(count, 0),
            routes={"locus": count == 0},
        )

    if g is None:
        raise ValueError("a graph g is required when universal is False")
    spectrum = squarefree_part(charpoly_M(g, kind))
    m = h.order
    if locus.is_zero():
        shared = spectrum
        by_locus = False
    else:
        shared = poly_gcd(locus, spectrum)
        by_locus = shared.degree() == 0

    factor_ranks: List[FactorRank] = []
    if spectrum.degree() >= 1:
        outcome = ext_rank(_bmu_walk_matrix(h, root, kind), ExtensionContext(spectrum))
        factor_ranks = [FactorRank(factor=b.factor, rank=b.value) for b in outcome]
        by_extension = outcome.all(lambda r: r == m)
    else:
        by_extension = True
    if by_locus != by_extension:
        raise InvariantViolation(
            "B(mu) controllability routes disagree",
            {"locus": by_locus, "extension": by_extension, "shared_factor": shared},
        )
    return BmuVerdict(
        controllable=by_locus,
        universal=False,
        locus=locus,
        real_root_count=sturm_count(locus) if not locus.is_zero() else 0,
        shared_factor=None if by_locus else shared,
        factor_ranks=factor_ranks,
        routes={"locus": by_locus, "extension": by_extension},
    )


def rooted_controllability(g: Graph, h: Graph, root: int, kind: MatrixKind) -> RootedControllabilityReport:
    """Walk-matrix rank of G o H, directly and through the B(mu) decomposition."""
    product = rooted_product(g, h, root).graph
    logger.info(f"Rooted controllability: product of order {product.order}")
    product_report = is_controllable_graph(product, kind)
    direct_full = product_report.rank == product.order

    g_report = is_controllable_graph(g, kind)
    f, gu = characteristic_pair(h, kind, root)
    common = poly_gcd(f, gu)
    bmu = bmu_controllable_all_mu(h, root, kind, universal=False, g=g)
    decomposition = g_report.rank == g.order and common.degree() == 0 and bmu.controllable
    if decomposition != direct_full:
        raise InvariantViolation(
            "rooted controllability routes disagree",
            {"direct_rank": product_report.rank, "g_rank": g_report.rank, "gcd": common,
             "bmu_controllable": bmu.controllable},
        )
    return RootedControllabilityReport(
        product=product_report,
        g_report=g_report,
        h_gcd=common,
        bmu=bmu,
        decomposition_full_rank=decomposition,
        direct_full_rank=direct_full,
    )


def zero_eigenvalue_implication(g: Graph, h: Graph, root: int, kind: MatrixKind) -> Optional[bool]:
    """If 0 is an M-eigenvalue of g and G o H is controllable, H must be controllable.

    Returns None when the hypothesis does not apply, otherwise whether H is controllable.
    """
    if charpoly_M(g, kind).coeff(0) != 0:
        return None
    if not is_controllable_graph(rooted_product(g, h, root).graph, kind).controllable:
        return None
    return is_controllable_graph(h, kind).controllable


def main_eigenvalue_count_numeric(m: Matrix, tol: Optional[float] = None) -> int:
    """Number of eigenvalues whose eigenspace is not orthogonal to the all-ones vector (numpy)."""
    tol = settings.NUMERIC_TOLERANCE if tol is None else tol
    a = np.array([[float(x) for x in row] for row in m])
    if a.size == 0:
        return 0
    values, vectors = np.linalg.eigh(a)
    ones = np.ones(a.shape[0])
    count, start = 0, 0
    while start < len(values):
        stop = start + 1
        while stop < len(values) and values[stop] - values[stop - 1] < tol:
            stop += 1
        projection = vectors[:, start:stop].T @ ones
        if np.linalg.norm(projection) > np.sqrt(tol):
            count += 1
        start = stop
    return count
