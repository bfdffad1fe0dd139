"""
Canonical labeling by colour refinement and individualization.

The search tree is the usual one: refine the colouring to an equitable
partition, individualize each vertex of the first smallest non-singleton cell
and recurse. Each leaf is a relabeling; the canonical form is the leaf whose
upper-triangle adjacency bit string is lexicographically least. Automorphisms
discovered along the way prune the tree.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from config.logging_config import get_logger
from src.errors import InvalidInputError
from src.graphs.graph import Edge, Graph

logger = get_logger(__name__)


class CanonicalForm:
    """Canonically relabeled edge list plus the relabeling that produced it.

    ``permutation[v - 1]`` is the canonical label of input vertex v. Two forms
    compare equal when order and edge list agree.
    """

    __slots__ = ("order", "edges", "permutation", "certificate")

    def __init__(self, order: int, edges: Tuple[Edge, ...], permutation: Tuple[int, ...], certificate: int):
        self.order = order
        self.edges = edges
        self.permutation = permutation
        self.certificate = certificate

    @property
    def key(self) -> Tuple[int, Tuple[Edge, ...]]:
        return (self.order, self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"CanonicalForm(order={self.order}, edges={list(self.edges)})"

    def graph(self) -> Graph:
        return Graph(self.order, self.edges)


def _rank(keys: Sequence) -> List[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _refine(colors: List[int], adj: Sequence[Sequence[int]]) -> List[int]:
    cells = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(colors))]
        new = _rank(sig)
        new_cells = len(set(new))
        if new_cells == cells:
            return new
        colors, cells = new, new_cells


def _target_cell(colors: List[int]) -> Optional[List[int]]:
    members: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        members.setdefault(c, []).append(v)
    best = None
    for c in sorted(members):
        cell = members[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _individualize(colors: List[int], v: int) -> List[int]:
    return _rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


def _certificate(labels: Sequence[int], edges: Sequence[Edge], n: int) -> int:
    total = n * (n - 1) // 2
    cert = 0
    for i, j in edges:
        a, b = sorted((labels[i - 1], labels[j - 1]))
        idx = a * n - a * (a + 1) // 2 + (b - a - 1)
        cert |= 1 << (total - 1 - idx)
    return cert


def _orbit_roots(autos: List[List[int]], n: int) -> List[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in autos:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of an unweighted graph; invariant under relabeling."""
    if g.is_weighted:
        raise InvalidInputError("canonical_form needs an unweighted graph; use is_isomorphic for weighted graphs")
    n = g.order
    if n == 0:
        return CanonicalForm(0, (), (), 0)
    adj = [[u - 1 for u in nbrs] for nbrs in g.adjacency()]
    best = {"cert": None, "labels": None, "path": None}
    autos: List[List[int]] = []
    leaves = [0]

    def search(colors: List[int], path: List[int]) -> Optional[int]:
        colors = _refine(colors, adj)
        cell = _target_cell(colors)
        if cell is None:
            leaves[0] += 1
            cert = _certificate(colors, g.edges, n)
            if best["cert"] is None or cert < best["cert"]:
                best.update(cert=cert, labels=colors, path=list(path))
                return None
            if cert == best["cert"]:
                # inverse(best) after this leaf's labeling is an automorphism
                inverse = [0] * n
                for v, lab in enumerate(best["labels"]):
                    inverse[lab] = v
                autos.append([inverse[colors[v]] for v in range(n)])
                common = 0
                for a, b in zip(path, best["path"]):
                    if a != b:
                        break
                    common += 1
                return common
            return None
        depth = len(path)
        explored: List[int] = []
        for v in cell:
            if explored:
                fixing = [a for a in autos if all(a[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(fixing, n)
                    if any(roots[v] == roots[w] for w in explored):
                        continue
            jump = search(_individualize(colors, v), path + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    search([0] * n, [])
    labels = best["labels"]
    permutation = tuple(lab + 1 for lab in labels)
    edges = tuple(sorted(
        tuple(sorted((permutation[i - 1], permutation[j - 1]))) for i, j in g.edges
    ))
    logger.debug(f"canonical form of order {n}: {leaves[0]} leaves, {len(autos)} automorphisms")
    return CanonicalForm(n, edges, permutation, best["cert"])


def _weighted_isomorphic(g1: Graph, g2: Graph) -> bool:
    def invariant(g: Graph, v: int):
        return (len(g.neighbors(v)), g.degree(v), tuple(sorted(g.weight(v, u) for u in g.neighbors(v))))

    inv1 = {v: invariant(g1, v) for v in g1.vertices}
    inv2 = {v: invariant(g2, v) for v in g2.vertices}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return False
    order = sorted(g1.vertices, key=lambda v: (sum(1 for w in g1.vertices if inv1[w] == inv1[v]), v))
    mapping: Dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for c in g2.vertices:
            if c in used or inv2[c] != inv1[v]:
                continue
            if all(g1.weight(v, u) == g2.weight(c, mapping[u]) for u in mapping):
                mapping[v] = c
                used.add(c)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(c)
        return False

    return extend(0)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff an edge- (and weight-) preserving bijection exists."""
    if g1.order != g2.order or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if g1.is_weighted or g2.is_weighted:
        return _weighted_isomorphic(g1, g2)
    return canonical_form(g1) == canonical_form(g2)
