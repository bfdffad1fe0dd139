"""
Immutable simple graphs with vertices 1..n and optional rational edge weights.
"""
from collections import deque
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.errors import GraphFormatError, InvalidInputError

Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph on vertices 1..order.

    Edges are stored as sorted pairs (i, j) with i < j. ``weights`` is None for
    an unweighted graph; otherwise it maps every edge to a nonzero Fraction.
    """

    __slots__ = ("order", "edges", "weights", "_adj")

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = (),
                 weights: Optional[Dict[Edge, Fraction]] = None):
        if order < 0:
            raise InvalidInputError(f"graph order must be non-negative, got {order}")
        seen = set()
        clean_weights = {} if weights is not None else None
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise InvalidInputError(f"self-loop at vertex {i}")
            if not (1 <= i <= order and 1 <= j <= order):
                raise InvalidInputError(f"edge {i}-{j} has an endpoint outside 1..{order}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidInputError(f"duplicate edge {key[0]}-{key[1]}")
            if weights is not None:
                w = weights.get(key, weights.get((key[1], key[0]), Fraction(1)))
                w = Fraction(w)
                if w == 0:
                    continue
                clean_weights[key] = w
            seen.add(key)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "weights", clean_weights)
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.order, self.edges, self.weights))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.order, self.edges, self._weight_key()) == (other.order, other.edges, other._weight_key())

    def _weight_key(self):
        return tuple(sorted(self.weights.items())) if self.is_weighted else None

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        kind = "weighted " if self.is_weighted else ""
        return f"Graph({kind}order={self.order}, edges={len(self.edges)})"

    # -- queries ------------------------------------------------------------

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None and any(w != 1 for w in self.weights.values())

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Neighbour sets indexed by vertex - 1."""
        if self._adj is None:
            adj = [set() for _ in range(self.order)]
            for i, j in self.edges:
                adj[i - 1].add(j)
                adj[j - 1].add(i)
            object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        return self._adj

    def neighbors(self, v: int) -> FrozenSet[int]:
        self.check_vertex(v)
        return self.adjacency()[v - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency()[i - 1]

    def weight(self, i: int, j: int) -> Fraction:
        key = (min(i, j), max(i, j))
        if not self.has_edge(*key):
            return Fraction(0)
        if self.weights is None:
            return Fraction(1)
        return self.weights[key]

    def degree(self, v: int) -> Fraction:
        """Weighted degree: sum of incident edge weights."""
        return sum((self.weight(v, u) for u in self.neighbors(v)), Fraction(0))

    def degree_sequence(self) -> Tuple[int, ...]:
        """Non-increasing sequence of vertex degrees (edge counts, ignoring weights)."""
        return tuple(sorted((len(s) for s in self.adjacency()), reverse=True))

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 1 <= v <= self.order:
            raise InvalidInputError(f"vertex {v} is outside 1..{self.order}")
        return v

    def adjacency_matrix(self) -> List[List[Fraction]]:
        n = self.order
        a = [[Fraction(0)] * n for _ in range(n)]
        for i, j in self.edges:
            w = self.weight(i, j)
            a[i - 1][j - 1] = w
            a[j - 1][i - 1] = w
        return a

    # -- derived graphs -----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v - 1]; perm is a permutation of 1..n."""
        if sorted(perm) != list(self.vertices):
            raise InvalidInputError("relabeling must be a permutation of the vertices")
        edges = [(perm[i - 1], perm[j - 1]) for i, j in self.edges]
        weights = None
        if self.weights is not None:
            weights = {}
            for (i, j), w in self.weights.items():
                a, b = perm[i - 1], perm[j - 1]
                weights[(min(a, b), max(a, b))] = w
        return Graph(self.order, edges, weights)

    def with_root_first(self, root: int) -> "Graph":
        """Relabel so that ``root`` becomes vertex 1 (root and 1 swap places)."""
        self.check_vertex(root)
        perm = list(self.vertices)
        perm[root - 1], perm[0] = 1, root
        return self.relabel(perm)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Append vertex order+1 adjacent to ``neighbors`` (unweighted)."""
        new = self.order + 1
        return Graph(new, list(self.edges) + [(u, new) for u in neighbors])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for i, j in self.edges:
            g.add_edge(i, j, weight=self.weight(i, j))
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel the nodes of a networkx graph to 1..n in sorted order."""
        nodes = sorted(g.nodes())
        index = {v: k + 1 for k, v in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in g.edges()])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 1; the empty graph counts as disconnected."""
    if g.order == 0:
        return False
    adj = g.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in adj[v - 1]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.order


def pendant_path_extend(g: Graph, v: int, n: int) -> Tuple[Graph, int]:
    """Attach a path u_1..u_n at v; returns the new graph and the pendant u_n."""
    g.check_vertex(v)
    if n < 1:
        raise InvalidInputError(f"pendant path length must be at least 1, got {n}")
    order = g.order
    edges = list(g.edges)
    weights = dict(g.weights) if g.weights is not None else None
    prev = v
    for k in range(1, n + 1):
        u = order + k
        edges.append((prev, u))
        if weights is not None:
            weights[(prev, u)] = Fraction(1)
        prev = u
    return Graph(order + n, edges, weights), order + n


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n;`` followed by one ``i j[ w]`` edge per line (``#`` starts a comment)."""
    lines = [(k + 1, line.split("#", 1)[0].strip()) for k, line in enumerate(text.splitlines())]
    lines = [(k, line) for k, line in lines if line]
    if not lines:
        raise GraphFormatError("empty edge list")
    head_no, head = lines[0]
    if not head.endswith(";"):
        raise GraphFormatError(f"line {head_no}: header must be 'n;', got {head!r}")
    try:
        order = int(head[:-1].strip())
    except ValueError:
        raise GraphFormatError(f"line {head_no}: order {head[:-1]!r} is not an integer")
    edges, weights, weighted = [], {}, False
    for line_no, line in lines[1:]:
        # several edges may share a line when separated by ';'
        for chunk in filter(None, (c.strip() for c in line.split(";"))):
            parts = chunk.split()
            if len(parts) not in (2, 3):
                raise GraphFormatError(f"line {line_no}: expected 'i j' or 'i j w', got {chunk!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
                w = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
            except (ValueError, ZeroDivisionError):
                raise GraphFormatError(f"line {line_no}: cannot read edge {chunk!r}")
            if len(parts) == 3:
                weighted = True
            edges.append((i, j))
            weights[(min(i, j), max(i, j))] = w
    try:
        return Graph(order, edges, weights if weighted else None)
    except InvalidInputError as exc:
        raise GraphFormatError(str(exc))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.order};"]
    for i, j in g.edges:
        if g.is_weighted:
            lines.append(f"{i} {j} {g.weight(i, j)}")
        else:
            lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def parse_cmatrix_grid(text: str) -> List[List[int]]:
    """Read a whitespace-separated 0/1 grid, one row per line."""
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [int(tok) for tok in line.replace(",", " ").split()]
        except ValueError:
            raise GraphFormatError(f"line {line_no}: non-integer entry in {line!r}")
        if any(x not in (0, 1) for x in row):
            raise GraphFormatError(f"line {line_no}: entries must be 0 or 1")
        rows.append(row)
    if not rows or any(len(r) != len(rows) for r in rows):
        raise GraphFormatError("C-matrix grid must be square and non-empty")
    return rows
