"""
Seeded randomized suites: every theorem route against the direct computation.
"""
import random
from typing import Tuple

from config import settings
from src.algebra.linalg import exact_rank
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import random_connected_graph, random_graph
from src.graphs.graph import Graph
from src.spectra.analysis import cartesian_separability, rooted_separability, rooted_spectrum_factors
from src.spectra.controllability import controllability_matrix, main_eigenvalue_count_numeric, rooted_controllability
from src.spectra.matrix_family import MatrixKind, build_matrix
from src.spectra.products import (
    CMatrix,
    assemble_product_matrix,
    c_product,
    eigenvector_residual,
    pendant_recurrence,
)
from src.verification.state import VerificationState

SUITE_KINDS = ("A", "L", "Q", "Aalpha:1/3", "U:a=2,d=-1")


def _kind(rng: random.Random, choices=SUITE_KINDS) -> MatrixKind:
    return MatrixKind.parse(rng.choice(choices))


def _rooted(rng: random.Random, max_order: int) -> Tuple[Graph, int]:
    h = random_connected_graph(rng, rng.randint(1, max_order))
    return h, rng.randint(1, h.order)


def random_cmatrix(rng: random.Random, m: int, kind: MatrixKind) -> CMatrix:
    """Random symmetric 0/1 C, kept diagonal when the kind has a degree term."""
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            if (i == j or kind.d == 0) and rng.random() < 0.5:
                rows[i][j] = rows[j][i] = 1
    return CMatrix(rows)


class PropertyCheck(BaseCheck):
    """Resultant, separability, controllability and recurrence routes on random instances."""

    stage = "properties"

    def checks(self, state: VerificationState) -> None:
        n = state["instances"]
        rng = self.rng(state)
        self.record(f"rooted charpoly via resultant ({n})", lambda: self._resultant(rng, n))
        self.record(f"rooted separability routes ({n})", lambda: self._rooted_separability(rng, n))
        self.record(f"Cartesian separability routes ({n})", lambda: self._cartesian(rng, n))
        self.record(f"rooted controllability routes ({n})", lambda: self._controllability(rng, n))
        self.record("pendant recurrences, n <= 5", lambda: self._recurrences(rng, n))
        self.record(f"Kronecker assembly ({2 * n})", lambda: self._assembly(rng, 2 * n))
        self.record(f"walk rank equals numeric main eigenvalues ({n})", lambda: self._main_eigenvalues(rng, n))
        self.record("eigenvector structure residual (20)", lambda: self._residual(rng, 20))

    def _resultant(self, rng: random.Random, count: int) -> str:
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 4))
            h, root = _rooted(rng, 4)
            rooted_spectrum_factors(g, h, root, _kind(rng))
        return f"{count} instances"

    def _rooted_separability(self, rng: random.Random, count: int) -> str:
        separable = 0
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 4))
            h, root = _rooted(rng, 4)
            separable += rooted_separability(g, h, root, _kind(rng)).separable
        return f"{separable} of {count} separable"

    def _cartesian(self, rng: random.Random, count: int) -> str:
        separable = 0
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 4))
            h = random_graph(rng, rng.randint(1, 4))
            separable += cartesian_separability(g, h, _kind(rng)).separable
        return f"{separable} of {count} separable"

    def _controllability(self, rng: random.Random, count: int) -> str:
        full = 0
        for _ in range(count):
            g = random_connected_graph(rng, rng.randint(1, 3))
            h, root = _rooted(rng, 4)
            full += rooted_controllability(g, h, root, _kind(rng, ("A", "Q"))).direct_full_rank
        return f"{full} of {count} full rank"

    def _recurrences(self, rng: random.Random, count: int) -> str:
        checked = 0
        for text in SUITE_KINDS:
            kind = MatrixKind.parse(text)
            for _ in range(max(1, count // len(SUITE_KINDS))):
                g = random_graph(rng, rng.randint(1, 4))
                v = rng.randint(1, g.order)
                pendant_recurrence(g, v, rng.randint(1, 5), kind, verify=True)
                checked += 1
        return f"{checked} instances"

    def _assembly(self, rng: random.Random, count: int) -> str:
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 4))
            h = random_graph(rng, rng.randint(1, 4))
            kind = _kind(rng)
            c = random_cmatrix(rng, h.order, kind)
            assembled = assemble_product_matrix(g, h, c, kind)
            constructed = build_matrix(c_product(g, h, c).graph, kind)
            assert assembled == constructed, f"assembly mismatch for kind {kind}, C {c}"
        return f"{count} triples"

    def _main_eigenvalues(self, rng: random.Random, count: int) -> str:
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 7))
            m = build_matrix(g, MatrixKind.adjacency())
            exact = exact_rank(controllability_matrix(m))
            numeric = main_eigenvalue_count_numeric(m)
            assert exact == numeric, f"exact {exact}, numeric {numeric} on {g!r}"
        return f"{count} graphs"

    def _residual(self, rng: random.Random, count: int) -> str:
        worst = 0.0
        for _ in range(count):
            g = random_graph(rng, rng.randint(1, 4))
            h = random_graph(rng, rng.randint(1, 4))
            kind = _kind(rng)
            worst = max(worst, eigenvector_residual(g, h, random_cmatrix(rng, h.order, kind), kind))
        assert worst < settings.NUMERIC_TOLERANCE, f"residual {worst:.3e}"
        return f"max residual {worst:.3e}"
