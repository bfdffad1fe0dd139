"""
Tests for Wronskian families, cospectral rooted pairs and the A_alpha sweep.
"""
import sys
import os
from fractions import Fraction

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.errors import PreconditionError
from src.graphs.canonical import is_isomorphic
from src.graphs.fixtures import fixture, g1_graph, star_graph
from src.graphs.graph import Graph, parse_edge_list, path_graph, pendant_path_extend
from src.graphs.graph6 import parse_graph6
from src.spectra.constructions import (
    alpha_sweep,
    cospectral_rooted_pair,
    dyadic_grid,
    graph_text,
    wronskian_family,
)
from src.spectra.matrix_family import MatrixKind, charpoly_M

A = MatrixKind.adjacency()
Q = MatrixKind.signless_laplacian()


def test_graph_text():
    assert graph_text(path_graph(3)) == "Bg"
    weighted = Graph(2, [(1, 2)], {(1, 2): Fraction(2)})
    assert parse_edge_list(graph_text(weighted)) == weighted


# -- Wronskian families --------------------------------------------------------------

def test_family_along_h3():
    members = wronskian_family(fixture("H3"), 6, A, 4)
    assert [m.n for m in members] == [1, 2, 3, 4]
    assert [m.order for m in members] == [7, 8, 9, 10]
    assert all(m.verified and m.gcd.degree() == 0 for m in members)
    extended, pendant = pendant_path_extend(fixture("H3"), 6, 2)
    assert parse_graph6(members[1].graph) == extended and members[1].pendant == pendant


def test_family_under_laplacian():
    members = wronskian_family(fixture("H6"), 6, MatrixKind.laplacian(), 3)
    assert len(members) == 3


def test_family_reproduces_g1_graphs():
    members = wronskian_family(g1_graph(4, 3), 3, A, 5)
    for m in members:
        assert is_isomorphic(parse_graph6(m.graph), g1_graph(m.order, 3))


def test_family_precondition():
    # the pendant of P3 attached at the centre of a star is not Wronskian
    with pytest.raises(PreconditionError) as info:
        wronskian_family(star_graph(3), 1, A, 2)
    assert info.value.name == "first-pendant-wronskian"


# -- cospectral pairs ----------------------------------------------------------------

def test_cospectral_pair_over_an_edge():
    p1, p2, report = cospectral_rooted_pair(fixture("H7"), fixture("H8"), path_graph(2), 1, Q)
    assert report.cospectral and report.separable_1 and report.separable_2
    assert report.charpoly_1 == report.charpoly_2 == charpoly_M(p1, Q) == charpoly_M(p2, Q)
    assert report.non_isomorphic and not report.factors_isomorphic
    assert report.canonical_confirmation is True
    assert report.order == 12 and not report.flags


def test_cospectral_pairs_iterate():
    p1, p2, _ = cospectral_rooted_pair(fixture("H7"), fixture("H8"), path_graph(2), 1, Q)
    q1, q2, report = cospectral_rooted_pair(p1, p2, path_graph(2), 1, Q)
    assert report.order == 24 and report.cospectral and report.non_isomorphic


def test_cospectral_pair_degenerate_case():
    _, _, report = cospectral_rooted_pair(fixture("H7"), fixture("H7"), path_graph(2), 1, Q)
    assert report.factors_isomorphic and not report.non_isomorphic
    assert report.canonical_confirmation is False
    assert report.flags


def test_cospectral_pair_preconditions():
    with pytest.raises(PreconditionError) as info:
        cospectral_rooted_pair(fixture("H7"), fixture("H8"), path_graph(2), 1, A)
    assert info.value.name == "cospectral-factors"
    with pytest.raises(PreconditionError) as info:
        cospectral_rooted_pair(star_graph(3), star_graph(3), path_graph(2), 1, A)
    assert info.value.name == "g1-separable"
    with pytest.raises(PreconditionError) as info:
        cospectral_rooted_pair(fixture("H7"), fixture("H8"), path_graph(3), 2, Q)
    assert info.value.name == "wronskian-root"


# -- A_alpha sweep -------------------------------------------------------------------

def test_dyadic_grid():
    grid = dyadic_grid(4)
    assert grid == [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    assert len(dyadic_grid()) == 64


def test_alpha_sweep_finds_two_thirds():
    report = alpha_sweep(fixture("H5"), 6, [Fraction(2, 3)])
    assert report.hits == [Fraction(2, 3)]
    assert report.vertex == 6


def test_alpha_sweep_on_path_endpoint_has_no_hits():
    report = alpha_sweep(path_graph(4), 4, dyadic_grid(16))
    assert report.hits == [] and len(report.grid) == 16
