"""
Isomorphism-class enumeration of small graphs by vertex addition.

Every graph of order n arises from a graph of order n - 1 by adding one vertex,
and every connected graph arises that way from a connected one (delete a
non-cut vertex). Candidates are deduplicated by canonical form inside buckets
keyed by edge count and degree sequence.
"""
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from config import settings
from config.logging_config import get_logger
from src.errors import InvalidInputError
from src.graphs.canonical import CanonicalForm, canonical_form
from src.graphs.graph import Graph
from src.graphs.graph6 import read_graph6_file

logger = get_logger(__name__)

_cache: Dict[Tuple[int, bool], List[Graph]] = {}


def _check_order(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"order must be at least 1, got {n}")
    if n > settings.BUILTIN_MAX_ORDER:
        raise InvalidInputError(
            f"the built-in generator stops at order {settings.BUILTIN_MAX_ORDER}; "
            f"ingest a graph6 corpus (for example {corpus_path(n)}) for order {n}"
        )


def _extend(parents: List[Graph], connected: bool) -> List[Graph]:
    buckets: Dict[Tuple[int, Tuple[int, ...]], Dict[CanonicalForm, Graph]] = {}
    candidates = 0
    for parent in parents:
        vertices = list(parent.vertices)
        for size in range(1 if connected else 0, parent.order + 1):
            for neighbors in combinations(vertices, size):
                child = parent.add_vertex(neighbors)
                candidates += 1
                bucket = buckets.setdefault((child.edge_count(), child.degree_sequence()), {})
                form = canonical_form(child)
                if form not in bucket:
                    bucket[form] = form.graph()
    children = [g for key in sorted(buckets) for g in buckets[key].values()]
    logger.debug(f"{candidates} candidates in {len(buckets)} buckets -> {len(children)} classes")
    return children


def _generate(n: int, connected: bool) -> List[Graph]:
    key = (n, connected)
    if key not in _cache:
        if n == 1:
            _cache[key] = [Graph(1)]
        else:
            _cache[key] = _extend(_generate(n - 1, connected), connected)
        logger.info(f"order {n}: {len(_cache[key])} {'connected ' if connected else ''}graphs")
    return _cache[key]


def generate_graphs(n: int) -> List[Graph]:
    """One canonical representative per isomorphism class of graphs on n vertices."""
    _check_order(n)
    return list(_generate(n, connected=False))


def generate_connected(n: int) -> List[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices."""
    _check_order(n)
    return list(_generate(n, connected=True))


def corpus_path(n: int, corpus_dir: Optional[str] = None) -> Path:
    return Path(corpus_dir or settings.CORPUS_DIR) / f"graph{n}c.g6"


def connected_source(n: int, graph6: Optional[str] = None, corpus_dir: Optional[str] = None) -> Iterator[Graph]:
    """Connected graphs of order n from a graph6 file, the built-in generator or the corpus directory."""
    if graph6 is not None:
        return read_graph6_file(graph6)
    if 1 <= n <= settings.BUILTIN_MAX_ORDER:
        return iter(generate_connected(n))
    if n < 1:
        _check_order(n)
    path = corpus_path(n, corpus_dir)
    if not path.exists():
        raise InvalidInputError(f"no graph6 corpus for order {n} at {path}")
    return read_graph6_file(path)
