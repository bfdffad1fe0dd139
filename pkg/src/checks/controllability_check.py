"""
The controllability counterexamples: H9 o H10 and G1(7,3) o G1(7,3).
"""
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import fixture, g1_graph
from src.spectra.analysis import rooted_separability
from src.spectra.controllability import bmu_controllable_all_mu, is_controllable_graph, rooted_controllability
from src.spectra.matrix_family import MatrixKind
from src.verification.state import VerificationState


class ControllabilityCheck(BaseCheck):
    """Controllable factors whose rooted products are not controllable."""

    stage = "controllability"

    def checks(self, state: VerificationState) -> None:
        for name, g in (("H9", fixture("H9")), ("H10", fixture("H10")), ("G1(7,3)", g1_graph(7, 3))):
            self.record(f"{name} is A-controllable", lambda g=g: self._controllable(g))
        self.record("H9 o H10 (root 7) has walk rank 48", self._h9_h10)
        self.record("B(mu) of H10 fails on Spec(H9)", self._h10_locus)
        self.record("G1(7,3) o G1(7,3) (root 1) is neither separable nor controllable", self._g1_square)

    def _controllable(self, g) -> str:
        report = is_controllable_graph(g, MatrixKind.adjacency())
        assert report.controllable and report.rank == g.order, f"rank {report.rank}"
        return f"rank {report.rank}"

    def _h9_h10(self) -> str:
        report = rooted_controllability(fixture("H9"), fixture("H10"), 7, MatrixKind.adjacency())
        assert report.product.rank == 48, f"rank {report.product.rank}"
        assert not report.direct_full_rank and not report.decomposition_full_rank
        return f"rank {report.product.rank} of {report.product.order}"

    def _h10_locus(self) -> str:
        verdict = bmu_controllable_all_mu(fixture("H10"), 7, MatrixKind.adjacency(), universal=False, g=fixture("H9"))
        assert not verdict.controllable and verdict.shared_factor is not None
        return f"shared factor {verdict.shared_factor}"

    def _g1_square(self) -> str:
        g = g1_graph(7, 3)
        kind = MatrixKind.adjacency()
        separability = rooted_separability(g, g, 1, kind)
        controllability = rooted_controllability(g, g, 1, kind)
        assert not separability.separable, "product is separable"
        assert not controllability.product.controllable, "product is controllable"
        return f"attribution {separability.attribution}, rank {controllability.product.rank}"
