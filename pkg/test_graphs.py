"""
Tests for the graph type, graph6 and edge-list formats, canonical forms and fixtures.
"""
import sys
import os
import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.errors import GraphFormatError, InvalidInputError
from src.graphs.canonical import canonical_form, is_isomorphic
from src.graphs.fixtures import (
    SAMPLE_CMATRIX,
    all_named,
    fixture,
    g1_graph,
    parse_fixture_spec,
    random_connected_graph,
)
from src.graphs.graph import (
    Graph,
    format_edge_list,
    is_connected,
    parse_cmatrix_grid,
    parse_edge_list,
    path_graph,
    pendant_path_extend,
)
from src.graphs.graph6 import encode_graph6, parse_graph6, read_graph6_file


# -- Graph -------------------------------------------------------------------------

def test_graph_normalizes_edges():
    g = Graph(3, [(2, 1), (3, 2)])
    assert g.edges == ((1, 2), (2, 3))
    assert g.neighbors(2) == {1, 3}
    assert g.degree_sequence() == (2, 1, 1)
    assert g == path_graph(3)


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidInputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph(3, [(1, 4)])
    with pytest.raises(InvalidInputError):
        Graph(3, [(1, 2), (2, 1)])
    with pytest.raises(InvalidInputError):
        path_graph(3).neighbors(0)


def test_graph_is_immutable():
    g = path_graph(2)
    with pytest.raises(AttributeError):
        g.order = 5


def test_weighted_graph():
    g = Graph(2, [(1, 2)], {(1, 2): Fraction(1, 2)})
    assert g.is_weighted
    assert g.weight(1, 2) == Fraction(1, 2)
    assert g.degree(1) == Fraction(1, 2)
    assert g != path_graph(2)


def test_root_first_and_pendant_paths():
    g = path_graph(3).with_root_first(3)
    assert g.edges == ((1, 2), (2, 3))  # 3-2-1 relabeled as 1-2-3
    ext, pendant = pendant_path_extend(path_graph(2), 2, 3)
    assert ext == path_graph(5) and pendant == 5
    with pytest.raises(InvalidInputError):
        pendant_path_extend(path_graph(2), 1, 0)


def test_connectivity():
    assert is_connected(path_graph(4))
    assert not is_connected(Graph(3, [(1, 2)]))
    assert not is_connected(Graph(0))
    assert is_connected(Graph(1))


# -- graph6 --------------------------------------------------------------------------

def test_graph6_known_strings():
    assert encode_graph6(path_graph(2)) == b"A_"
    assert encode_graph6(path_graph(3)) == b"Bg"
    assert encode_graph6(fixture("K", 3)) == b"Bw"
    assert encode_graph6(Graph(0)) == b"?"
    assert parse_graph6("Bg") == path_graph(3)
    assert parse_graph6(b">>graph6<<A_\n") == path_graph(2)


def test_graph6_long_header():
    g = Graph(63, [(1, 63), (30, 31)])
    data = encode_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(b"A_ ")
    assert info.value.offset == 2
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(b"B")
    assert info.value.offset == 1
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(b"A`")  # padding bit set
    assert info.value.offset == 1
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(b"A__")
    assert info.value.offset == 2


def test_graph6_rejects_weights():
    with pytest.raises(GraphFormatError):
        encode_graph6(Graph(2, [(1, 2)], {(1, 2): Fraction(3)}))


def test_graph6_matches_networkx():
    rng = random.Random(7)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 9), 0.4)
        expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
        assert encode_graph6(g) == expected


def test_read_graph6_file(tmp_path):
    path = tmp_path / "small.g6"
    path.write_bytes(b"A_\n\nBg\nBw\n")
    graphs = list(read_graph6_file(path))
    assert [g.order for g in graphs] == [2, 3, 3]
    path.write_bytes(b"A_\nB\n")
    with pytest.raises(GraphFormatError) as info:
        list(read_graph6_file(path))
    assert ":2:" in str(info.value)


# -- edge lists ----------------------------------------------------------------------

def test_edge_list_round_trip():
    g = parse_edge_list("3;\n1 2\n2 3  # tail\n")
    assert g == path_graph(3)
    assert format_edge_list(g) == "3;\n1 2\n2 3\n"
    assert parse_edge_list("3; \n1 2; 2 3") == path_graph(3)


def test_weighted_edge_list():
    g = parse_edge_list("2;\n1 2 1/2\n")
    assert g.is_weighted and g.weight(1, 2) == Fraction(1, 2)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_errors():
    for text in ["", "3\n1 2", "3;\n1 4", "3;\n1 2 3 4", "x;\n1 2", "3;\n1 two"]:
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)


def test_cmatrix_grid():
    assert parse_cmatrix_grid("1 0 0\n0 0 1\n0 1 1\n") == SAMPLE_CMATRIX
    with pytest.raises(GraphFormatError):
        parse_cmatrix_grid("1 0\n0")
    with pytest.raises(GraphFormatError):
        parse_cmatrix_grid("2 0\n0 1")


# -- canonical forms -----------------------------------------------------------------

def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(11)
    for g in list(all_named().values()) + [random_connected_graph(rng, 8, 0.3) for _ in range(10)]:
        perm = list(g.vertices)
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_atlas_graphs():
    # the atlas lists each graph on up to 7 vertices once, up to isomorphism
    atlas = [Graph.from_networkx(a) for a in nx.graph_atlas_g() if a.number_of_nodes() == 5]
    assert len(atlas) == 34
    assert len({canonical_form(g) for g in atlas}) == 34


def _orbits_under_relabeling(n):
    """Partition every labelled graph on n vertices (as an edge bitmask) into isomorphism orbits."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {pair: k for k, pair in enumerate(pairs)}
    moves = [
        [index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        for perm in itertools.permutations(range(n))
    ]
    orbit_of = {}
    for mask in range(1 << len(pairs)):
        if mask in orbit_of:
            continue
        bits = [k for k in range(len(pairs)) if mask >> k & 1]
        for move in moves:
            orbit_of[sum(1 << move[k] for k in bits)] = mask
    return pairs, orbit_of


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_canonical_form_matches_exhaustive_relabeling(n, classes):
    pairs, orbit_of = _orbits_under_relabeling(n)
    form_of_orbit = {}
    for mask, orbit in orbit_of.items():
        g = Graph(n, [(i + 1, j + 1) for k, (i, j) in enumerate(pairs) if mask >> k & 1])
        form = canonical_form(g)
        assert form_of_orbit.setdefault(orbit, form) == form
    assert len(form_of_orbit) == classes
    assert len(set(form_of_orbit.values())) == classes


def test_is_isomorphic_agrees_with_networkx():
    rng = random.Random(3)
    for _ in range(30):
        g1 = random_connected_graph(rng, 6, 0.3)
        g2 = random_connected_graph(rng, 6, 0.3)
        assert is_isomorphic(g1, g2) == nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())


def test_named_non_isomorphic_pair():
    assert not is_isomorphic(fixture("H7"), fixture("H8"))
    assert canonical_form(fixture("H7")) != canonical_form(fixture("H8"))


def test_weighted_isomorphism():
    a = Graph(3, [(1, 2), (2, 3)], {(1, 2): Fraction(2), (2, 3): Fraction(1)})
    b = Graph(3, [(1, 2), (2, 3)], {(1, 2): Fraction(1), (2, 3): Fraction(2)})
    c = Graph(3, [(1, 2), (2, 3)], {(1, 2): Fraction(3), (2, 3): Fraction(1)})
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, c)
    with pytest.raises(InvalidInputError):
        canonical_form(a)


# -- fixtures ------------------------------------------------------------------------

def test_named_fixtures():
    named = all_named()
    assert named["H5"].edge_count() == 8 and named["H5"].has_edge(3, 4)
    assert named["H6"].has_edge(2, 5)
    assert named["H4"].order == 7
    assert named["Fig1Product"].edge_count() == 14
    assert all(is_connected(g) for g in named.values())


def test_g1_family():
    g = g1_graph(5, 3)
    assert g.edges == ((1, 2), (2, 3), (3, 4), (3, 5))
    assert parse_fixture_spec("G1:5:3") == g
    with pytest.raises(InvalidInputError):
        g1_graph(3, 3)


def test_fixture_errors():
    with pytest.raises(InvalidInputError):
        parse_fixture_spec("H11")
    with pytest.raises(InvalidInputError):
        parse_fixture_spec("P:x")
    with pytest.raises(InvalidInputError):
        parse_fixture_spec("H5:2")
    with pytest.raises(InvalidInputError):
        parse_fixture_spec("G1:5")


def test_random_connected_graphs_are_connected():
    rng = random.Random(0)
    assert all(is_connected(random_connected_graph(rng, n, 0.1)) for n in range(1, 12))
