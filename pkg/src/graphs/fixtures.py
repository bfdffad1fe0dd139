"""
Named graphs used throughout the toolkit and its tests.

Vertex numbering follows the published drawings, so "root 7 of H10" means
vertex 7 exactly as listed here. Parameterised families are addressed as
``NAME:p1[:p2]`` (``G1:5:3``, ``P:4``).
"""
import random
from typing import Callable, Dict, List, Tuple

from src.errors import InvalidInputError
from src.graphs.graph import Edge, Graph, path_graph


def _pairs(spec: str) -> List[Edge]:
    """'12 23 34' -> [(1, 2), (2, 3), (3, 4)]; vertices are single digits."""
    return [(int(tok[0]), int(tok[1])) for tok in spec.split()]


H3_EDGES = _pairs("12 13 23 35 24 45 56")

NAMED_EDGES: Dict[str, Tuple[int, List[Edge]]] = {
    "H1": (6, _pairs("12 23 34 45 13 24 35 56 46")),
    "H2": (6, _pairs("12 13 23 14 24 45 46 25 36 56")),
    "H3": (6, H3_EDGES),
    "H4": (7, _pairs("12 13 14 23 34 25 26 35 56 67 57 46")),
    "H5": (6, H3_EDGES + [(3, 4)]),
    "H6": (6, H3_EDGES + [(2, 5)]),
    "H7": (6, _pairs("12 13 14 24 35 36 45 46")),
    "H8": (6, _pairs("12 13 14 23 24 35 45 56")),
    "H9": (7, _pairs("12 23 34 45 13 24 35 56 46 37")),
    "H10": (7, _pairs("12 13 23 27 24 37 35 47 45 46")),
    # P3 o_C P3 with C = SAMPLE_CMATRIX, flat index (j - 1) * 3 + i
    "Fig1Product": (9, _pairs("14 25 36 47 58 69 12 23 78 89 48 59 57 68")),
}

SAMPLE_CMATRIX = [[1, 0, 0], [0, 0, 1], [0, 1, 1]]

# distinguished root vertices of the published rooted constructions
DEFAULT_ROOTS = {"H10": 7, "H3": 6, "H5": 6, "H6": 6}


def g1_graph(n: int, k: int) -> Graph:
    """Path v1..v_{n-1} plus the pendant edge v_k v_n."""
    if not n >= k + 1 >= 3:
        raise InvalidInputError(f"G1(n, k) needs n >= k + 1 >= 3, got n={n}, k={k}")
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(k, n)]
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: centre 1 joined to n leaves."""
    return Graph(n + 1, [(1, j) for j in range(2, n + 2)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


FAMILIES: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "P": (1, path_graph),
    "K": (1, complete_graph),
    "C": (1, cycle_graph),
    "S": (1, star_graph),
    "E": (1, empty_graph),
    "G1": (2, g1_graph),
}


def fixture(name: str, *params: int) -> Graph:
    if name in NAMED_EDGES:
        if params:
            raise InvalidInputError(f"fixture {name} takes no parameters")
        order, edges = NAMED_EDGES[name]
        return Graph(order, edges)
    if name in FAMILIES:
        arity, build = FAMILIES[name]
        if len(params) != arity:
            raise InvalidInputError(f"fixture {name} takes {arity} parameter(s), got {len(params)}")
        if any(p < 1 for p in params):
            raise InvalidInputError(f"fixture {name} parameters must be positive")
        return build(*params)
    known = sorted(NAMED_EDGES) + [f"{f}:..." for f in FAMILIES]
    raise InvalidInputError(f"unknown fixture {name!r}; known: {', '.join(known)}")


def parse_fixture_spec(spec: str) -> Graph:
    """Build a fixture from ``NAME`` or ``NAME:p1[:p2]``."""
    name, *raw = spec.strip().split(":")
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise InvalidInputError(f"fixture parameters must be integers in {spec!r}")
    return fixture(name, *params)


def all_named() -> Dict[str, Graph]:
    return {name: fixture(name) for name in NAMED_EDGES}


def random_graph(rng: random.Random, order: int, p: float = 0.5) -> Graph:
    """G(n, p) sample drawn from an explicit random source."""
    edges = [(i, j) for i in range(1, order + 1) for j in range(i + 1, order + 1) if rng.random() < p]
    return Graph(order, edges)


def random_connected_graph(rng: random.Random, order: int, p: float = 0.5) -> Graph:
    """A random spanning tree plus G(n, p) edges, so the sample is always connected."""
    tree = [(rng.randint(1, v - 1), v) for v in range(2, order + 1)]
    extra = random_graph(rng, order, p).edges
    return Graph(order, set(tuple(sorted(e)) for e in tree) | set(extra))
