"""
Published characteristic polynomials of the named graphs and the adjugate identity.
"""
from fractions import Fraction

from src.algebra.poly import Poly
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import all_named, parse_fixture_spec
from src.spectra.matrix_family import MatrixKind, adjugate_column_identity, charpoly_M, deleted_charpoly
from src.verification.state import VerificationState

# (fixture, kind, deleted vertex or None, expected polynomial)
REFERENCE_CHARPOLYS = [
    ("G1:4:3", "A", None, "x^4-3x^2+1"),
    ("G1:5:3", "A", None, "x^5-4x^3+2x"),
    ("H6", "L", None, "x^6-16x^5+95x^4-256x^3+305x^2-126x"),
    ("H6", "L", 6, "x^5-15x^4+81x^3-186x^2+159x-21"),
    ("H5", "Q", None, "x^6-16x^5+96x^4-276x^3+396x^2-262x+60"),
    ("H5", "Q", 6, "x^5-15x^4+82x^3-206x^2+238x-101"),
    ("H7", "Q", None, "x^6-16x^5+97x^4-282x^3+404x^2-256x+48"),
    ("H8", "Q", None, "x^6-16x^5+97x^4-282x^3+404x^2-256x+48"),
]

UNIVERSAL_P2 = [(Fraction(1), Fraction(0)), (Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(-1))]


class FixtureCheck(BaseCheck):
    """Exact charpolys of the published examples; gate for every Q-matrix check."""

    stage = "fixtures"

    def checks(self, state: VerificationState) -> None:
        for spec, kind_text, vertex, expected in REFERENCE_CHARPOLYS:
            label = f"phi_{kind_text}{'^v' + str(vertex) if vertex else ''}({spec})"
            self.record(label, lambda s=spec, k=kind_text, v=vertex, e=expected: self._charpoly(s, k, v, e))

        for a, d in UNIVERSAL_P2:
            self.record(f"phi_U(P2) a={a} d={d}", lambda a=a, d=d: self._universal_p2(a, d))

        self.record("adjugate identity on all named graphs", self._adjugate)

    def _charpoly(self, spec: str, kind_text: str, vertex, expected: str) -> str:
        g = parse_fixture_spec(spec)
        kind = MatrixKind.parse(kind_text)
        got = charpoly_M(g, kind) if vertex is None else deleted_charpoly(g, kind, vertex)
        assert got == Poly.parse(expected), f"got {got}, expected {expected}"
        return str(got)

    def _universal_p2(self, a: Fraction, d: Fraction) -> str:
        kind = MatrixKind.universal(a, d)
        p2 = parse_fixture_spec("P:2")
        x_minus_d = Poly.linear(d)
        expected = x_minus_d * x_minus_d - Poly.constant(a * a)
        got = charpoly_M(p2, kind)
        assert got == expected, f"got {got}, expected {expected}"
        assert deleted_charpoly(p2, kind, 1) == x_minus_d
        return str(got)

    def _adjugate(self) -> str:
        checked = 0
        for name, g in all_named().items():
            kinds = [MatrixKind.adjacency()]
            if name in ("H5", "H7", "H8"):
                kinds.append(MatrixKind.signless_laplacian())
            for kind in kinds:
                for u in g.vertices:
                    report = adjugate_column_identity(g, u, kind)
                    assert report.holds, f"{name} vertex {u} kind {kind}: residual {report.difference}"
                    checked += 1
        return f"{checked} (graph, kind, vertex) triples"
