"""
The census of connected graphs: separable, controllable and Wronskian counts,
plus the diagnostics harvested from the same graph streams.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from tqdm import tqdm

from config import settings
from config.logging_config import get_logger
from src.algebra.linalg import charpoly
from src.algebra.poly import Poly, poly_gcd
from src.census.generator import generate_connected
from src.errors import InvalidInputError, InvariantViolation, PreconditionError
from src.graphs.canonical import canonical_form
from src.graphs.graph import Graph
from src.graphs.graph6 import encode_graph6
from src.spectra.analysis import has_wronskian_vertex, repeated_factor
from src.spectra.controllability import is_controllable_graph
from src.spectra.matrix_family import MatrixKind, build_matrix, characteristic_pair, charpoly_M
from src.spectra.products import rooted_product
from src.spectra.reports import CensusRow, CospectralClass, DmsSpotcheckReport, SubsetObservation

logger = get_logger(__name__)


class GraphClass(NamedTuple):
    order: int
    separable: bool
    controllable: bool
    wronskian: bool


def classify_graph(g: Graph, kind: MatrixKind) -> GraphClass:
    """Exact classification of one graph; controllable graphs must be separable."""
    separable = repeated_factor(charpoly_M(g, kind)).degree() == 0
    controllable = is_controllable_graph(g, kind).controllable
    if controllable and not separable:
        raise InvariantViolation(
            "controllable graph with a repeated eigenvalue",
            {"graph6": encode_graph6(g).decode("ascii"), "kind": str(kind)},
        )
    wronskian = separable and has_wronskian_vertex(g, kind)
    return GraphClass(g.order, separable, controllable, wronskian)


def _classify_all(graphs: Sequence[Graph], kind: MatrixKind, jobs: int, progress: bool) -> List[GraphClass]:
    work = partial(classify_graph, kind=kind)
    bar = dict(total=len(graphs), desc=f"census {kind}", unit="graph", disable=not progress)
    if jobs <= 1:
        return [work(g) for g in tqdm(graphs, **bar)]
    chunk = max(1, len(graphs) // (jobs * 16))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(tqdm(pool.map(work, graphs, chunksize=chunk), **bar))


def census(source: Iterable[Graph], kind: Optional[MatrixKind] = None, jobs: Optional[int] = None,
           order: Optional[int] = None, progress: bool = False) -> CensusRow:
    """
    Count the graphs of a source by class.

    Args:
        source: connected graphs of one order (generator output or a graph6 stream)
        kind: matrix kind, adjacency by default
        jobs: worker processes; settings.CENSUS_JOBS when omitted
        order: the row's order, required only when the source is empty
        progress: show a tqdm progress bar

    Returns:
        CensusRow: the aggregated counts, identical for any worker count
    """
    kind = kind or MatrixKind.adjacency()
    jobs = settings.CENSUS_JOBS if jobs is None else jobs
    graphs = list(source)
    orders = {g.order for g in graphs}
    if len(orders) > 1:
        raise InvalidInputError(f"census source mixes orders {sorted(orders)}")
    if orders:
        (found,) = orders
        if order is not None and order != found:
            raise InvalidInputError(f"census source has order {found}, expected {order}")
        order = found
    if order is None:
        raise InvalidInputError("empty census source and no order given")

    logger.info(f"Census of {len(graphs)} graphs of order {order}, kind {kind}, {jobs} job(s)")
    classes = _classify_all(graphs, kind, jobs, progress)
    row = CensusRow(
        order=order,
        total=len(classes),
        separable=sum(c.separable for c in classes),
        controllable=sum(c.controllable for c in classes),
        wronskian=sum(c.wronskian for c in classes),
        controllable_wronskian=sum(c.controllable and c.wronskian for c in classes),
    )
    logger.info(f"Census row: {row.as_tsv()}")
    return row


def subset_observation(source: Iterable[Graph], kind: Optional[MatrixKind] = None) -> SubsetObservation:
    """Does every controllable graph of the source have a Wronskian vertex?"""
    kind = kind or MatrixKind.adjacency()
    controllable = 0
    counterexamples = []
    for g in source:
        c = classify_graph(g, kind)
        if not c.controllable:
            continue
        controllable += 1
        if not c.wronskian:
            counterexamples.append(encode_graph6(g).decode("ascii"))
    return SubsetObservation(holds=not counterexamples, controllable_count=controllable,
                             counterexamples=counterexamples)


def _group_by_charpoly(graphs: Iterable[Graph], kind: MatrixKind) -> Dict[Poly, List[Graph]]:
    groups: Dict[Poly, List[Graph]] = {}
    for g in graphs:
        groups.setdefault(charpoly_M(g, kind), []).append(g)
    return groups


def cospectral_classes(source: Iterable[Graph], kind: Optional[MatrixKind] = None) -> List[CospectralClass]:
    """Partition by exact charpoly, in order of first appearance."""
    kind = kind or MatrixKind.adjacency()
    return [
        CospectralClass(charpoly=phi, graphs=[encode_graph6(g).decode("ascii") for g in members])
        for phi, members in _group_by_charpoly(source, kind).items()
    ]


def dms_product_spotcheck(max_order: int, h: Graph, root: int, kind: Optional[MatrixKind] = None,
                          source: Optional[Dict[int, List[Graph]]] = None) -> DmsSpotcheckReport:
    """
    Among connected graphs of each order up to max_order: whenever g1 is alone in its
    cospectral class and G1 o H is cospectral to G2 o H, the two products must be isomorphic.

    ``source`` maps an order to its graphs; the built-in generator is used otherwise.
    """
    kind = kind or MatrixKind.adjacency()
    h.check_vertex(root)
    f, gu = characteristic_pair(h, kind, root)
    common = poly_gcd(f, gu)
    if common.degree() > 0:
        raise PreconditionError("wronskian-root", f"root {root} shares the factor {common}", witness=common)

    unique = pairs = 0
    violations = []
    for n in range(1, max_order + 1):
        graphs = source[n] if source is not None else generate_connected(n)
        groups = _group_by_charpoly(graphs, kind)
        products = {}
        for g in graphs:
            p = rooted_product(g, h, root).graph
            products[g] = (p, charpoly(build_matrix(p, kind)))
        for members in groups.values():
            if len(members) != 1:
                continue
            unique += 1
            g1 = members[0]
            p1, phi1 = products[g1]
            for g2 in graphs:
                if g2 is g1:
                    continue
                pairs += 1
                p2, phi2 = products[g2]
                if phi1 == phi2 and canonical_form(p1) != canonical_form(p2):
                    violations.append(
                        f"{encode_graph6(g1).decode('ascii')} vs {encode_graph6(g2).decode('ascii')}"
                    )
    logger.info(f"DMS spot-check to order {max_order}: {unique} spectrum-unique graphs, {pairs} pairs")
    return DmsSpotcheckReport(max_order=max_order, root=root, spectrum_unique=unique,
                              pairs_checked=pairs, violations=violations)


def harvest_cospectral_pairs(graphs: Iterable[Graph], kind: MatrixKind) -> List[Tuple[Graph, Graph]]:
    pairs = []
    for members in _group_by_charpoly(graphs, kind).values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append((members[i], members[j]))
    return pairs


def cospectral_factor_check(pairs: Sequence[Tuple[Graph, Graph]], roots: Sequence[Tuple[Graph, int]],
                            kind: MatrixKind, rng: random.Random, instances: int) -> int:
    """Random cospectral factor pairs and rooted H: the two rooted products must be cospectral.

    Returns the number of instances checked; raises InvariantViolation on the first failure.
    """
    if not pairs or not roots:
        return 0
    for _ in range(instances):
        g1, g2 = rng.choice(pairs)
        h, root = rng.choice(roots)
        phi1 = charpoly(build_matrix(rooted_product(g1, h, root).graph, kind))
        phi2 = charpoly(build_matrix(rooted_product(g2, h, root).graph, kind))
        if phi1 != phi2:
            raise InvariantViolation(
                "cospectral factors produced non-cospectral rooted products",
                {"g1": encode_graph6(g1).decode("ascii"), "g2": encode_graph6(g2).decode("ascii"),
                 "h": encode_graph6(h).decode("ascii"), "root": root},
            )
    return instances


# published counts (order: total, separable, controllable, wronskian, controllable_wronskian), kind A
REFERENCE_CENSUS: Dict[int, Tuple[int, int, int, int, int]] = {
    1: (1, 1, 1, 0, 0),
    2: (1, 1, 0, 1, 0),
    3: (2, 1, 0, 1, 0),
    4: (6, 3, 0, 3, 0),
    5: (21, 11, 0, 9, 0),
    6: (112, 54, 8, 37, 8),
    7: (853, 539, 85, 414, 85),
    8: (11117, 7319, 2275, 5984, 2275),
    9: (261080, 209471, 83034, 186053, 83034),
}


def reference_row(order: int) -> CensusRow:
    total, separable, controllable, wronskian, both = REFERENCE_CENSUS[order]
    return CensusRow(order=order, total=total, separable=separable, controllable=controllable,
                     wronskian=wronskian, controllable_wronskian=both)
