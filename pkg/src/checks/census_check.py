"""
Census rows against the published table and the diagnostics built on the census.
"""
from src.census.census import (
    census,
    dms_product_spotcheck,
    harvest_cospectral_pairs,
    cospectral_factor_check,
    reference_row,
    subset_observation,
)
from src.census.generator import generate_connected
from src.checks.base_check import BaseCheck
from src.graphs.fixtures import random_connected_graph
from src.graphs.graph import path_graph
from src.spectra.matrix_family import MatrixKind
from src.verification.state import VerificationState


class CensusCheck(BaseCheck):
    """Orders 1..census_max_order of the census table, kind A."""

    stage = "census"

    def checks(self, state: VerificationState) -> None:
        top = state["census_max_order"]
        for order in range(1, top + 1):
            self.record(f"census row, order {order}", lambda order=order: self._row(order))
        for order in range(1, top + 1):
            self.record(f"controllable graphs have a Wronskian vertex, order {order}",
                        lambda order=order: self._subset(order))
        self.record("spectrum-unique factors give isomorphic cospectral products, order <= 5",
                    lambda: self._dms(min(top, 5)))
        if top >= 6:
            self.record("cospectral factors give cospectral rooted products", lambda: self._cospectral_factors(state, top))

    def _row(self, order: int) -> str:
        row = census(generate_connected(order), MatrixKind.adjacency(), jobs=1)
        expected = reference_row(order)
        assert row == expected, f"got {row.as_tsv()}, expected {expected.as_tsv()}"
        return row.as_tsv()

    def _subset(self, order: int) -> str:
        observation = subset_observation(generate_connected(order))
        assert observation.holds, f"counterexamples {observation.counterexamples}"
        return f"{observation.controllable_count} controllable"

    def _dms(self, max_order: int) -> str:
        report = dms_product_spotcheck(max_order, path_graph(2), 1)
        assert not report.violations, f"violations {report.violations}"
        return f"{report.spectrum_unique} spectrum-unique graphs, {report.pairs_checked} pairs"

    def _cospectral_factors(self, state: VerificationState, top: int) -> str:
        rng = self.rng(state)
        kind = MatrixKind.adjacency()
        pairs = []
        for order in range(6, top + 1):
            pairs.extend(harvest_cospectral_pairs(generate_connected(order), kind))
        roots = []
        for _ in range(8):
            h = random_connected_graph(rng, rng.randint(1, 4))
            roots.append((h, rng.randint(1, h.order)))
        checked = cospectral_factor_check(pairs, roots, kind, rng, min(state["instances"], 20))
        assert pairs, "no cospectral pairs harvested"
        return f"{checked} instances over {len(pairs)} pairs"
