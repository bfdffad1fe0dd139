"""
Cospectral separable pairs from rooted products (Q-matrix example and an iterated pair).
"""
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import fixture
from src.graphs.graph import pendant_path_extend
from src.spectra.constructions import cospectral_rooted_pair
from src.spectra.matrix_family import MatrixKind
from src.verification.state import VerificationState


class CospectralCheck(BaseCheck):
    """H7 o (H5)_{v6}^n and H8 o (H5)_{v6}^n, plus a two-step iteration over P2."""

    stage = "cospectral"

    def checks(self, state: VerificationState) -> None:
        for n in (1, 2):
            self.record(f"H7/H8 rooted at the pendant of (H5)_v6^{n}, kind Q", lambda n=n: self._example(n))
        self.record("iterated pair over P2, kind Q", self._iterated)
        self.record("isomorphic factors are flagged", self._degenerate)

    def _example(self, n: int) -> str:
        h, root = pendant_path_extend(fixture("H5"), 6, n)
        _, _, report = cospectral_rooted_pair(fixture("H7"), fixture("H8"), h, root, MatrixKind.signless_laplacian())
        assert report.cospectral and report.separable_1 and report.separable_2
        assert report.non_isomorphic
        return f"order {report.order}"

    def _iterated(self) -> str:
        kind = MatrixKind.signless_laplacian()
        p2 = fixture("P", 2)
        first_1, first_2, first = cospectral_rooted_pair(fixture("H7"), fixture("H8"), p2, 1, kind)
        _, _, second = cospectral_rooted_pair(first_1, first_2, p2, 1, kind)
        assert first.non_isomorphic and first.canonical_confirmation is True
        assert second.non_isomorphic and second.separable_1 and second.separable_2
        return f"orders {first.order} and {second.order}"

    def _degenerate(self) -> str:
        h7 = fixture("H7")
        _, _, report = cospectral_rooted_pair(h7, h7, fixture("P", 2), 1, MatrixKind.signless_laplacian())
        assert report.factors_isomorphic and not report.non_isomorphic and report.flags
        return report.flags[0]
