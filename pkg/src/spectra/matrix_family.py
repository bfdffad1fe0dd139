"""
The M-matrix family M = a*A + d*D and its characteristic polynomials.
"""
import re
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from config.logging_config import get_logger
from src.algebra.linalg import Matrix, charpoly, poly_det, principal_submatrix
from src.algebra.poly import Poly, wronskian_polynomial
from src.errors import InvalidInputError
from src.graphs.graph import Graph
from src.spectra.reports import AdjugateIdentityReport, RationalField

logger = get_logger(__name__)

_U_RE = re.compile(r"^U:a=([^,]+),d=(.+)$")


class MatrixKind(BaseModel):
    """
    The coefficient pair (a, d) of M = a*A + d*D together with its preset tag.

    Attributes:
        a: coefficient of the adjacency matrix (never zero)
        d: coefficient of the degree matrix
        preset: one of A, L, Q, Aalpha, U
        alpha: the A_alpha parameter when preset is Aalpha
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: RationalField
    d: RationalField
    preset: Literal["A", "L", "Q", "Aalpha", "U"] = "U"
    alpha: Optional[RationalField] = None

    @model_validator(mode="after")
    def _check(self):
        if self.a == 0:
            raise ValueError("the adjacency coefficient a must be nonzero")
        if self.preset == "Aalpha":
            if self.alpha is None or not 0 <= self.alpha < 1:
                raise ValueError("A_alpha needs alpha in [0, 1)")
        return self

    @classmethod
    def adjacency(cls) -> "MatrixKind":
        return cls(a=Fraction(1), d=Fraction(0), preset="A")

    @classmethod
    def laplacian(cls) -> "MatrixKind":
        return cls(a=Fraction(-1), d=Fraction(1), preset="L")

    @classmethod
    def signless_laplacian(cls) -> "MatrixKind":
        return cls(a=Fraction(1), d=Fraction(1), preset="Q")

    @classmethod
    def a_alpha(cls, alpha) -> "MatrixKind":
        alpha = Fraction(alpha)
        return cls(a=1 - alpha, d=alpha, preset="Aalpha", alpha=alpha)

    @classmethod
    def universal(cls, a, d) -> "MatrixKind":
        return cls(a=Fraction(a), d=Fraction(d), preset="U")

    @classmethod
    def parse(cls, text: str) -> "MatrixKind":
        """Read "A", "L", "Q", "Aalpha:2/3" or "U:a=1,d=-2"."""
        s = text.strip().replace(" ", "")
        try:
            if s == "A":
                return cls.adjacency()
            if s == "L":
                return cls.laplacian()
            if s == "Q":
                return cls.signless_laplacian()
            if s.startswith("Aalpha:"):
                return cls.a_alpha(Fraction(s[len("Aalpha:"):]))
            m = _U_RE.match(s)
            if m:
                return cls.universal(Fraction(m.group(1)), Fraction(m.group(2)))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"invalid matrix kind {text!r}: {exc}")
        raise InvalidInputError(f"unknown matrix kind {text!r}; use A, L, Q, Aalpha:<r> or U:a=<r>,d=<r>")

    def __str__(self) -> str:
        if self.preset in ("A", "L", "Q"):
            return self.preset
        if self.preset == "Aalpha":
            return f"Aalpha:{self.alpha}"
        return f"U:a={self.a},d={self.d}"


def build_matrix(g: Graph, kind: MatrixKind) -> Matrix:
    """a*A(g) + d*D(g) with weighted adjacency and weighted degrees."""
    adj = g.adjacency_matrix()
    n = g.order
    m = [[kind.a * x for x in row] for row in adj]
    if kind.d:
        for i in range(n):
            m[i][i] += kind.d * sum(adj[i], Fraction(0))
    return m


def charpoly_M(g: Graph, kind: MatrixKind) -> Poly:
    return charpoly(build_matrix(g, kind))


def deleted_charpoly(g: Graph, kind: MatrixKind, u: int) -> Poly:
    """Characteristic polynomial of M(g) with row and column u removed (degrees kept)."""
    g.check_vertex(u)
    if g.order == 1:
        return Poly.one()
    return charpoly(principal_submatrix(build_matrix(g, kind), u - 1))


def characteristic_pair(h: Graph, kind: MatrixKind, u: int):
    """(phi(M(h)), phi(M^u(h))), the pair every rooted construction starts from."""
    return charpoly_M(h, kind), deleted_charpoly(h, kind, u)


def _x_minus(m: Matrix) -> List[List[Poly]]:
    n = len(m)
    return [[Poly((-m[i][j], 1)) if i == j else Poly.constant(-m[i][j]) for j in range(n)] for i in range(n)]


def adjugate_entry(m: Matrix, i: int, j: int) -> Poly:
    """Entry (i, j) of adj(xI - m), 0-based."""
    xm = _x_minus(m)
    minor = [[e for c, e in enumerate(row) if c != i] for r, row in enumerate(xm) if r != j]
    det = poly_det(minor)
    return det if (i + j) % 2 == 0 else -det


def adjugate_column_identity(g: Graph, u: int, kind: Optional[MatrixKind] = None) -> AdjugateIdentityReport:
    """Check phi' * phi_u - phi * phi_u' = sum_k adj(xI - M)_{uk}^2 exactly."""
    kind = kind or MatrixKind.adjacency()
    g.check_vertex(u)
    m = build_matrix(g, kind)
    phi = charpoly(m)
    phi_u = deleted_charpoly(g, kind, u)
    lhs = phi.derivative() * phi_u - phi * phi_u.derivative()
    rhs = Poly()
    if g.order == 1:
        rhs = Poly.one()
    else:
        for k in range(g.order):
            entry = adjugate_entry(m, u - 1, k)
            rhs = rhs + entry * entry
    diff = lhs - rhs
    logger.debug(f"adjugate identity at vertex {u}: residual degree {diff.degree()}")
    return AdjugateIdentityReport(vertex=u, holds=diff.is_zero(), difference=diff)


__all__ = [
    "MatrixKind",
    "build_matrix",
    "charpoly_M",
    "deleted_charpoly",
    "characteristic_pair",
    "adjugate_entry",
    "adjugate_column_identity",
    "wronskian_polynomial",
]
