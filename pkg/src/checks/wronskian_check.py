"""
Wronskian vertices of the published examples and the pendant-path families.
"""
import random
from fractions import Fraction

from src.algebra.poly import wronskian_polynomial
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import all_named, fixture, g1_graph
from src.spectra.analysis import all_wronskian_vertices, wronskian_vertex
from src.spectra.constructions import alpha_sweep, dyadic_grid, wronskian_family
from src.spectra.matrix_family import MatrixKind, characteristic_pair
from src.verification.state import VerificationState

DUAL_ROUTE_KINDS = ("A", "L", "Q", "Aalpha:1/3", "U:a=2,d=-1")


class WronskianCheck(BaseCheck):
    """Published Wronskian vertices, families along pendant paths and the alpha exception."""

    stage = "wronskian"

    def checks(self, state: VerificationState) -> None:
        adjacency = MatrixKind.adjacency()
        self.record("G1(5,3) v4 is A-Wronskian", lambda: self._expect(g1_graph(5, 3), adjacency, 4, True))
        for n in range(5, 10):
            self.record(f"G1({n},3) v{n - 1} is A-Wronskian",
                        lambda n=n: self._expect(g1_graph(n, 3), adjacency, n - 1, True))
        for name in ("H1", "H2", "H3", "H4"):
            self.record(f"every vertex of {name} is A-Wronskian", lambda name=name: self._all_vertices(name))
        self.record("H5 v6 fails at alpha = 2/3",
                    lambda: self._expect(fixture("H5"), MatrixKind.a_alpha(Fraction(2, 3)), 6, False))
        self.record("alpha sweep on H5 v6", self._sweep_h5)
        self.record("pendant of P4 never fails on the alpha grid", self._sweep_path)

        self.record("family (H3, v6, A, 4)", lambda: self._family("H3", 6, "A", 4))
        self.record("family (H6, v6, L, 3)", lambda: self._family("H6", 6, "L", 3))
        self.record("family G1(n,3), n = 5..9", self._g1_family)
        self.record("gcd and Sturm routes agree on every named vertex", self._dual_route)
        self.record("W(x) <= 0 at 50 random points per named graph", lambda: self._wronskian_sign(self.rng(state)))

    def _expect(self, g, kind, u, expected: bool) -> str:
        report = wronskian_vertex(g, kind, u)
        assert report.is_wronskian == expected, f"vertex {u} kind {kind}: gcd {report.gcd}"
        return f"gcd {report.gcd}"

    def _all_vertices(self, name: str) -> str:
        g = fixture(name)
        found = all_wronskian_vertices(g, MatrixKind.adjacency())
        assert found == list(g.vertices), f"only {found}"
        return f"{len(found)} vertices"

    def _sweep_h5(self) -> str:
        grid = dyadic_grid() + [Fraction(2, 3)]
        report = alpha_sweep(fixture("H5"), 6, grid)
        assert Fraction(2, 3) in report.hits, f"hits {report.hits}"
        return "hits: " + ", ".join(str(a) for a in report.hits)

    def _sweep_path(self) -> str:
        report = alpha_sweep(fixture("P", 4), 4)
        assert not report.hits, f"hits {report.hits}"
        return f"{len(report.grid)} grid values"

    def _family(self, name: str, v: int, kind_text: str, n_max: int) -> str:
        members = wronskian_family(fixture(name), v, MatrixKind.parse(kind_text), n_max)
        assert len(members) == n_max and all(m.verified for m in members)
        return f"orders {[m.order for m in members]}"

    def _g1_family(self) -> str:
        # G1(4,3) extended at v3 by a path of length n is G1(n + 4, 3) with pendant v_{n+3}
        members = wronskian_family(g1_graph(4, 3), 3, MatrixKind.adjacency(), 5)
        assert [m.order for m in members] == [5, 6, 7, 8, 9]
        return "G1(5,3) .. G1(9,3)"

    def _wronskian_sign(self, rng: random.Random) -> str:
        adjacency = MatrixKind.adjacency()
        for name, g in all_named().items():
            points = [Fraction(rng.randint(-600, 600), rng.randint(1, 60)) for _ in range(50)]
            for u in g.vertices:
                w = wronskian_polynomial(*characteristic_pair(g, adjacency, u))
                bad = [p for p in points if w.sign_at(p) > 0]
                assert not bad, f"{name} v{u}: W({bad[0]}) > 0"
        return f"{len(all_named())} graphs"

    def _dual_route(self) -> str:
        checked = 0
        for g in all_named().values():
            for text in DUAL_ROUTE_KINDS:
                kind = MatrixKind.parse(text)
                for u in g.vertices:
                    wronskian_vertex(g, kind, u)
                    checked += 1
        return f"{checked} (graph, kind, vertex) triples, zero disagreements"
