"""
Tests for matrix kinds, M-matrix assembly and the published characteristic polynomials.
"""
import sys
import os
import random
from fractions import Fraction

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.algebra.poly import Poly, wronskian_polynomial
from src.algebra.roots import isolate_real_roots, sturm_count
from src.checks.fixture_check import REFERENCE_CHARPOLYS
from src.errors import InvalidInputError
from src.graphs.fixtures import all_named, fixture, parse_fixture_spec, star_graph
from src.graphs.graph import Graph, path_graph
from src.spectra.matrix_family import (
    MatrixKind,
    adjugate_column_identity,
    build_matrix,
    characteristic_pair,
    charpoly_M,
    deleted_charpoly,
)

x = Poly.x()


@pytest.mark.parametrize("text", ["A", "L", "Q", "Aalpha:2/3", "Aalpha:0", "U:a=2,d=-1", "U:a=1/2,d=0"])
def test_kind_text_round_trip(text):
    assert str(MatrixKind.parse(text)) == text


def test_kind_coefficients():
    assert (MatrixKind.parse("L").a, MatrixKind.parse("L").d) == (-1, 1)
    alpha = MatrixKind.parse("Aalpha:1/3")
    assert alpha.a == Fraction(2, 3) and alpha.d == Fraction(1, 3)
    assert MatrixKind.parse(" U:a=3, d=1/2 ").d == Fraction(1, 2)


@pytest.mark.parametrize("text", ["B", "Aalpha:1", "Aalpha:-1/2", "U:a=0,d=1", "U:a=1", "Aalpha:x"])
def test_kind_rejects(text):
    with pytest.raises(InvalidInputError):
        MatrixKind.parse(text)


def test_kind_is_frozen_and_hashable():
    kind = MatrixKind.signless_laplacian()
    assert hash(kind) == hash(MatrixKind.parse("Q"))
    with pytest.raises(Exception):
        kind.a = Fraction(2)


def test_build_matrix_star():
    q = build_matrix(star_graph(2), MatrixKind.signless_laplacian())
    assert q == [[2, 1, 1], [1, 1, 0], [1, 0, 1]]
    lap = build_matrix(star_graph(2), MatrixKind.laplacian())
    assert [sum(row) for row in lap] == [0, 0, 0]


def test_build_matrix_weighted_degrees():
    g = Graph(2, [(1, 2)], {(1, 2): Fraction(3, 2)})
    assert build_matrix(g, MatrixKind.laplacian()) == [[Fraction(3, 2), Fraction(-3, 2)],
                                                       [Fraction(-3, 2), Fraction(3, 2)]]


@pytest.mark.parametrize("spec,kind,vertex,expected", REFERENCE_CHARPOLYS)
def test_reference_charpolys(spec, kind, vertex, expected):
    g = parse_fixture_spec(spec)
    k = MatrixKind.parse(kind)
    got = charpoly_M(g, k) if vertex is None else deleted_charpoly(g, k, vertex)
    assert got == Poly.parse(expected)


@pytest.mark.parametrize("a,d", [(1, 0), (2, 3), (Fraction(1, 2), -1), (-1, 1)])
def test_universal_p2(a, d):
    kind = MatrixKind.universal(a, d)
    assert charpoly_M(path_graph(2), kind) == (x - d) ** 2 - Fraction(a) ** 2
    assert deleted_charpoly(path_graph(2), kind, 2) == x - d


def test_single_vertex_conventions():
    k1 = Graph(1)
    phi, phi_u = characteristic_pair(k1, MatrixKind.laplacian(), 1)
    assert phi == x and phi_u == Poly.one()
    with pytest.raises(InvalidInputError):
        deleted_charpoly(k1, MatrixKind.adjacency(), 2)


def test_laplacian_has_zero_root():
    for g in all_named().values():
        assert charpoly_M(g, MatrixKind.laplacian())(Fraction(0)) == 0


def test_h7_h8_q_cospectral_but_not_a_cospectral():
    h7, h8 = fixture("H7"), fixture("H8")
    assert charpoly_M(h7, MatrixKind.signless_laplacian()) == charpoly_M(h8, MatrixKind.signless_laplacian())
    assert charpoly_M(h7, MatrixKind.adjacency()) != charpoly_M(h8, MatrixKind.adjacency())


@pytest.mark.parametrize("kind", ["A", "L", "Q", "Aalpha:2/3", "U:a=2,d=-1"])
def test_adjugate_identity(kind):
    k = MatrixKind.parse(kind)
    for name in ("H3", "H5", "H9", "G1:5:3"):
        g = parse_fixture_spec(name)
        for u in g.vertices:
            report = adjugate_column_identity(g, u, k)
            assert report.holds and report.difference.is_zero()


def test_adjugate_identity_single_vertex():
    assert adjugate_column_identity(Graph(1), 1).holds


# -- vertex-deleted polynomials against the full one ---------------------------------

def _roots_in_closed(g, left, right):
    """Distinct roots of g in [left root, right root] for isolating intervals left < right."""
    count = sturm_count(g, left.lo, right.hi)
    if left.is_exact and g.sign_at(left.lo) == 0:
        count += 1
    return count


@pytest.mark.parametrize("kind", ["A", "L", "Q"])
@pytest.mark.parametrize("name", sorted(all_named()))
def test_deleted_charpoly_interlaces(name, kind):
    g = fixture(name)
    k = MatrixKind.parse(kind)
    phi = charpoly_M(g, k)
    roots = isolate_real_roots(phi)
    for u in g.vertices:
        deleted = deleted_charpoly(g, k, u)
        for left, right in zip(roots, roots[1:]):
            assert _roots_in_closed(deleted, left, right) >= 1, (u, left, right)


@pytest.mark.parametrize("kind", ["A", "L", "Q"])
@pytest.mark.parametrize("name", sorted(all_named()))
def test_wronskian_polynomial_is_nonpositive(name, kind):
    g = fixture(name)
    k = MatrixKind.parse(kind)
    rng = random.Random(name)
    points = [Fraction(rng.randint(-600, 600), rng.randint(1, 60)) for _ in range(50)]
    for u in g.vertices:
        w = wronskian_polynomial(*characteristic_pair(g, k, u))
        assert all(w.sign_at(p) <= 0 for p in points), u
