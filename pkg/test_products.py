"""
Tests for rooted, C- and Cartesian products, their matrix assembly and charpoly routes.
"""
import sys
import os
import random

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.algebra.poly import Poly
from src.checks.property_check import SUITE_KINDS, random_cmatrix
from src.errors import InvalidInputError, InvariantViolation, PreconditionError
from src.graphs.canonical import is_isomorphic
from src.graphs.fixtures import SAMPLE_CMATRIX, cycle_graph, fixture, random_graph
from src.graphs.graph import Graph, path_graph
from src.spectra.matrix_family import MatrixKind, build_matrix, charpoly_M
from src.spectra.products import (
    CMatrix,
    assemble_product_matrix,
    c_product,
    c_product_charpoly_via_resultant,
    cartesian_product,
    eigenvector_residual,
    pendant_recurrence,
    pendant_sequence,
    rooted_product,
)


# -- C-matrices ----------------------------------------------------------------------

def test_cmatrix_classification():
    assert CMatrix.identity(3).classification == "identity"
    assert CMatrix.single(3, 2).classification == "single-entry"
    assert CMatrix([[1, 0, 0], [0, 0, 0], [0, 0, 1]]).classification == "diagonal"
    assert CMatrix([[0, 0], [0, 0]]).classification == "diagonal"
    sample = CMatrix(SAMPLE_CMATRIX)
    assert sample.classification == "general-symmetric" and not sample.is_diagonal
    assert sample.row_sums() == [1, 1, 2]


def test_cmatrix_validation():
    with pytest.raises(InvalidInputError):
        CMatrix([[0, 1], [0, 0]])
    with pytest.raises(InvalidInputError):
        CMatrix([[2, 0], [0, 1]])
    with pytest.raises(InvalidInputError):
        CMatrix([[1, 0]])
    with pytest.raises(InvalidInputError):
        CMatrix.single(3, 4)


# -- product graphs ------------------------------------------------------------------

def test_rooted_product_layout():
    result = rooted_product(path_graph(2), path_graph(2), 1)
    # root layer is 1, 2; the pendant copies hang off as 3 and 4
    assert result.graph.edges == ((1, 2), (1, 3), (2, 4))
    assert is_isomorphic(result.graph, path_graph(4))
    assert result.kind == "rooted" and result.root == 1
    assert result.index(2, 2) == 4 and result.pair(4) == (2, 2)


def test_cartesian_product_of_paths_is_cycle():
    result = cartesian_product(path_graph(2), path_graph(2))
    assert is_isomorphic(result.graph, cycle_graph(4))
    assert result.cmatrix.classification == "identity"


def test_sample_c_product_matches_fixture():
    result = c_product(path_graph(3), path_graph(3), CMatrix(SAMPLE_CMATRIX))
    assert result.graph == fixture("Fig1Product")


def test_product_flat_index_round_trip():
    result = c_product(path_graph(3), fixture("H3"), CMatrix.identity(6))
    for flat in result.graph.vertices:
        assert result.index(*result.pair(flat)) == flat


def test_c_product_order_mismatch():
    with pytest.raises(InvalidInputError):
        c_product(path_graph(2), path_graph(3), CMatrix.identity(2))
    with pytest.raises(InvalidInputError):
        rooted_product(path_graph(2), path_graph(3), 4)


def test_weighted_factor_keeps_weights():
    g = Graph(2, [(1, 2)], {(1, 2): 3})
    product = cartesian_product(g, path_graph(2)).graph
    assert product.is_weighted
    assert product.weight(1, 2) == 3 and product.weight(1, 3) == 1


# -- matrix assembly -----------------------------------------------------------------

@pytest.mark.parametrize("kind", ["A", "L", "Q", "Aalpha:1/3", "U:a=2,d=-1"])
def test_kronecker_assembly_diagonal_c(kind):
    k = MatrixKind.parse(kind)
    g, h = path_graph(3), fixture("H3")
    for c in (CMatrix.single(6, 6), CMatrix.identity(6), CMatrix([[int(i == j and i % 2 == 0) for j in range(6)]
                                                                   for i in range(6)])):
        assert assemble_product_matrix(g, h, c, k) == build_matrix(c_product(g, h, c).graph, k)


def test_kronecker_assembly_on_random_triples():
    rng = random.Random(7)
    off_diagonal = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 4))
        h = random_graph(rng, rng.randint(1, 4))
        kind = MatrixKind.parse(rng.choice(SUITE_KINDS))
        c = random_cmatrix(rng, h.order, kind)
        off_diagonal += not c.is_diagonal
        assert assemble_product_matrix(g, h, c, kind) == build_matrix(c_product(g, h, c).graph, kind)
    assert off_diagonal > 0


def test_kronecker_assembly_general_c_needs_zero_degree_term():
    c = CMatrix(SAMPLE_CMATRIX)
    a = MatrixKind.adjacency()
    assert assemble_product_matrix(path_graph(3), path_graph(3), c, a) == build_matrix(fixture("Fig1Product"), a)
    with pytest.raises(PreconditionError) as info:
        assemble_product_matrix(path_graph(3), path_graph(3), c, MatrixKind.signless_laplacian())
    assert info.value.name == "diagonal-cmatrix"


# -- charpoly routes -----------------------------------------------------------------

@pytest.mark.parametrize("kind", ["A", "L", "Q"])
def test_resultant_route_rooted(kind):
    k = MatrixKind.parse(kind)
    g, h = path_graph(3), fixture("H3")
    c = CMatrix.single(6, 6)
    assert c_product_charpoly_via_resultant(g, h, c, k) == charpoly_M(c_product(g, h, c).graph, k)


def test_resultant_route_general_c():
    k = MatrixKind.adjacency()
    assert c_product_charpoly_via_resultant(path_graph(3), path_graph(3), CMatrix(SAMPLE_CMATRIX), k) == \
        charpoly_M(fixture("Fig1Product"), k)


def test_pendant_recurrence_on_paths():
    x = Poly.x()
    f, g = pendant_recurrence(path_graph(2), 2, 3, MatrixKind.adjacency())
    assert f == x ** 5 - 4 * x ** 3 + 3 * x
    assert g == x ** 4 - 3 * x ** 2 + 1


@pytest.mark.parametrize("kind", ["L", "Q", "Aalpha:2/3", "U:a=1/2,d=3"])
def test_pendant_recurrence_matches_direct(kind):
    k = MatrixKind.parse(kind)
    fs, gs = pendant_sequence(fixture("H3"), 6, 4, k)
    assert len(fs) == 5 and len(gs) == 5
    for n in range(1, 5):
        assert pendant_recurrence(fixture("H3"), 6, n, k) == (fs[n], gs[n])


def test_pendant_recurrence_rejects_bad_length():
    with pytest.raises(InvalidInputError):
        pendant_recurrence(path_graph(2), 1, 0, MatrixKind.adjacency())


# -- numeric eigenvector structure -------------------------------------------------

@pytest.mark.parametrize("kind", ["A", "L", "Q"])
def test_eigenvector_residual_is_small(kind):
    k = MatrixKind.parse(kind)
    assert eigenvector_residual(path_graph(3), path_graph(2), CMatrix.single(2, 1), k) < 1e-8
    assert eigenvector_residual(fixture("H3"), path_graph(3), CMatrix.identity(3), k) < 1e-8


def test_eigenvector_residual_general_c():
    c = CMatrix(SAMPLE_CMATRIX)
    assert eigenvector_residual(path_graph(3), path_graph(3), c, MatrixKind.adjacency()) < 1e-8
    with pytest.raises(PreconditionError):
        eigenvector_residual(path_graph(3), path_graph(3), c, MatrixKind.laplacian())


def test_eigenvector_residual_on_random_triples():
    rng = random.Random(11)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 4))
        h = random_graph(rng, rng.randint(1, 4))
        kind = MatrixKind.parse(rng.choice(SUITE_KINDS))
        assert eigenvector_residual(g, h, random_cmatrix(rng, h.order, kind), kind) < 1e-8


def test_invariant_violation_is_an_error():
    assert issubclass(InvariantViolation, RuntimeError)
