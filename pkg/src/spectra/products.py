"""
Rooted, C- and Cartesian products of graphs and their M-matrices.

Product vertices are pairs (i, j) with i in G and j in H, stored at flat index
(j - 1) * n + i (H-major). With this ordering the Kronecker assembly
C (x) M(G) + M(H) (x) I_n holds entry for entry.
"""
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from src.algebra.linalg import Matrix, charpoly, identity, is_symmetric, kron, mat_add
from src.algebra.poly import Poly
from src.algebra.resultant import interpolate, resultant_in_t
from src.errors import InvalidInputError, InvariantViolation, PreconditionError
from src.graphs.graph import Graph, pendant_path_extend
from src.spectra.matrix_family import MatrixKind, build_matrix, charpoly_M, deleted_charpoly

logger = get_logger(__name__)

CKind = Literal["general-symmetric", "diagonal", "identity", "single-entry"]


class CMatrix:
    """Symmetric 0/1 matrix of order m = |V(H)| selecting which H-layers carry G-edges."""

    __slots__ = ("rows", "classification")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise InvalidInputError("C must be a non-empty square matrix")
        if any(x not in (0, 1) for r in rows for x in r):
            raise InvalidInputError("C must have 0/1 entries")
        if not is_symmetric(rows):
            raise InvalidInputError("C must be symmetric")
        self.rows = rows
        self.classification: CKind = self._classify()

    def _classify(self) -> CKind:
        m = self.order
        if any(self.rows[i][j] for i in range(m) for j in range(m) if i != j):
            return "general-symmetric"
        diag = [self.rows[i][i] for i in range(m)]
        if all(diag):
            return "identity"
        if sum(diag) == 1:
            return "single-entry"
        return "diagonal"

    @classmethod
    def identity(cls, m: int) -> "CMatrix":
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @classmethod
    def single(cls, m: int, root: int) -> "CMatrix":
        """E_{root,root} of order m (root is 1-based)."""
        if not 1 <= root <= m:
            raise InvalidInputError(f"root {root} is outside 1..{m}")
        return cls([[int(i == j == root - 1) for j in range(m)] for i in range(m)])

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def is_diagonal(self) -> bool:
        return self.classification != "general-symmetric"

    def row_sums(self) -> List[int]:
        return [sum(r) for r in self.rows]

    def as_matrix(self) -> Matrix:
        return [[Fraction(x) for x in r] for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, CMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CMatrix({self.classification}, {[list(r) for r in self.rows]})"


class ProductResult:
    """A product graph together with its factors and vertex layout."""

    __slots__ = ("graph", "g", "h", "cmatrix", "root", "kind")

    def __init__(self, graph: Graph, g: Graph, h: Graph, cmatrix: CMatrix,
                 root: Optional[int] = None, kind: str = "c"):
        self.graph = graph
        self.g = g
        self.h = h
        self.cmatrix = cmatrix
        self.root = root
        self.kind = kind

    def index(self, i: int, j: int) -> int:
        """Flat 1-based vertex of the pair (i in G, j in H)."""
        return (j - 1) * self.g.order + i

    def pair(self, flat: int) -> Tuple[int, int]:
        q, r = divmod(flat - 1, self.g.order)
        return r + 1, q + 1

    def __repr__(self) -> str:
        return f"ProductResult({self.kind}, order={self.graph.order}, edges={self.graph.edge_count()})"


def c_product(g: Graph, h: Graph, c: CMatrix) -> ProductResult:
    """G o_C H: (i1,j1) ~ (i2,j2) iff i1 ~ i2 in G with c[j1][j2] = 1, or j1 ~ j2 in H with i1 = i2."""
    if c.order != h.order:
        raise InvalidInputError(f"C has order {c.order} but H has {h.order} vertices")
    n = g.order
    weights = {}
    weighted = g.is_weighted or h.is_weighted

    def flat(i: int, j: int) -> int:
        return (j - 1) * n + i

    for j1 in range(1, h.order + 1):
        for j2 in range(1, h.order + 1):
            if not c.rows[j1 - 1][j2 - 1]:
                continue
            for i1, i2 in g.edges:
                a, b = flat(i1, j1), flat(i2, j2)
                weights[(min(a, b), max(a, b))] = g.weight(i1, i2)
    for j1, j2 in h.edges:
        for i in range(1, n + 1):
            weights[(flat(i, j1), flat(i, j2))] = h.weight(j1, j2)
    product = Graph(n * h.order, list(weights), weights if weighted else None)
    logger.debug(f"C-product ({c.classification}) of orders {n} and {h.order}: {product.edge_count()} edges")
    return ProductResult(product, g, h, c, kind="c")


def rooted_product(g: Graph, h: Graph, root: int) -> ProductResult:
    """G o H: copy i of H has its root identified with vertex i of G."""
    h.check_vertex(root)
    result = c_product(g, h, CMatrix.single(h.order, root))
    return ProductResult(result.graph, g, h, result.cmatrix, root=root, kind="rooted")


def cartesian_product(g: Graph, h: Graph) -> ProductResult:
    result = c_product(g, h, CMatrix.identity(h.order))
    return ProductResult(result.graph, g, h, result.cmatrix, kind="cartesian")


def _require_assemblable(c: CMatrix, kind: MatrixKind) -> None:
    if not c.is_diagonal and kind.d != 0:
        raise PreconditionError(
            "diagonal-cmatrix",
            f"kind {kind} has a degree term; C (x) M(G) + M(H) (x) I_n describes the product "
            "only for diagonal C because the degree part picks up (C1 - C) (x) D(G)",
        )


def assemble_product_matrix(g: Graph, h: Graph, c: CMatrix, kind: MatrixKind) -> Matrix:
    """C (x) M(G) + M(H) (x) I_n in the H-major layout."""
    if c.order != h.order:
        raise InvalidInputError(f"C has order {c.order} but H has {h.order} vertices")
    _require_assemblable(c, kind)
    return mat_add(kron(c.as_matrix(), build_matrix(g, kind)), kron(build_matrix(h, kind), identity(g.order)))


def c_product_charpoly_via_resultant(g: Graph, h: Graph, c: CMatrix, kind: MatrixKind) -> Poly:
    """Res_t(phi_M(G)(t), det(xI - M(H) - tC)); the bivariate determinant is interpolated in t."""
    if c.order != h.order:
        raise InvalidInputError(f"C has order {c.order} but H has {h.order} vertices")
    _require_assemblable(c, kind)
    mh = build_matrix(h, kind)
    cm = c.as_matrix()
    points = [Fraction(t) for t in range(h.order + 1)]
    samples = []
    for t in points:
        shifted = [[mh[i][j] + t * cm[i][j] for j in range(h.order)] for i in range(h.order)]
        samples.append(charpoly(shifted))
    pencil = interpolate(points, samples)
    return resultant_in_t(charpoly_M(g, kind), pencil)


def pendant_sequence(g: Graph, v: int, n: int, kind: MatrixKind) -> Tuple[List[Poly], List[Poly]]:
    """Lists f[1..n] and g[0..n] from the pendant-path recurrences (f[0] is unused)."""
    g.check_vertex(v)
    if n < 1:
        raise InvalidInputError(f"pendant path length must be at least 1, got {n}")
    a2 = kind.a * kind.a
    x = Poly.x()
    g1_graph, u1 = pendant_path_extend(g, v, 1)
    gs = [deleted_charpoly(g, kind, v), deleted_charpoly(g1_graph, kind, u1)]
    for _ in range(2, n + 1):
        gs.append((x - 2 * kind.d) * gs[-1] - gs[-2] * a2)
    fs = [Poly()] + [(x - kind.d) * gs[k] - gs[k - 1] * a2 for k in range(1, n + 1)]
    return fs, gs


def pendant_recurrence(g: Graph, v: int, n: int, kind: MatrixKind,
                       verify: bool = True) -> Tuple[Poly, Poly]:
    """(f_n, g_n): charpolys of M(G_v^n) and of M(G_v^n) with the pendant u_n deleted."""
    fs, gs = pendant_sequence(g, v, n, kind)
    f_n, g_n = fs[n], gs[n]
    if verify:
        extended, pendant = pendant_path_extend(g, v, n)
        direct_f = charpoly_M(extended, kind)
        direct_g = deleted_charpoly(extended, kind, pendant)
        if direct_f != f_n or direct_g != g_n:
            raise InvariantViolation(
                f"pendant recurrence at n={n} for kind {kind}",
                {"recurrence_f": f_n, "direct_f": direct_f, "recurrence_g": g_n, "direct_g": direct_g},
            )
    return f_n, g_n


def eigenvector_residual(g: Graph, h: Graph, c: CMatrix, kind: MatrixKind) -> float:
    """
    Largest residual |M(P) (xi (x) eta) - lambda (xi (x) eta)|_inf over the product eigenpairs
    built from eigenpairs (mu, eta) of M(G) and (lambda, xi) of B(mu) = M(H) + mu*C (numpy).
    """
    if c.order != h.order:
        raise InvalidInputError(f"C has order {c.order} but H has {h.order} vertices")
    _require_assemblable(c, kind)

    def as_float(m: Matrix) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in m])

    product = as_float(build_matrix(c_product(g, h, c).graph, kind))
    mh = as_float(build_matrix(h, kind))
    cm = as_float(c.as_matrix())
    mus, etas = np.linalg.eigh(as_float(build_matrix(g, kind)))
    worst = 0.0
    for mu, eta in zip(mus, etas.T):
        lambdas, xis = np.linalg.eigh(mh + mu * cm)
        for lam, xi in zip(lambdas, xis.T):
            vec = np.kron(xi, eta)
            worst = max(worst, float(np.max(np.abs(product @ vec - lam * vec))))
    return worst
