"""
Arithmetic in Q[t]/(p) for a squarefree modulus, with dynamic splitting.

The ring is a product of number fields, one per irreducible factor of p.
Instead of factoring p, elimination proceeds as if p were irreducible and
splits p the first time a pivot candidate turns out to be a zero divisor.
"""
from typing import Any, Iterator, List, NamedTuple, Sequence

from config.logging_config import get_logger
from src.algebra.poly import Poly, is_squarefree, poly_gcd, poly_gcdex
from src.errors import InvalidInputError

logger = get_logger(__name__)


class ZeroDivisorFound(Exception):
    """Raised internally when an element shares a factor with the modulus."""

    def __init__(self, factor: Poly):
        super().__init__(str(factor))
        self.factor = factor


class Branch(NamedTuple):
    factor: Poly
    value: Any


class SplitOutcome:
    """Results tagged by pairwise coprime factors whose product is the modulus."""

    __slots__ = ("branches",)

    def __init__(self, branches: Sequence[Branch]):
        self.branches = list(branches)

    def __iter__(self) -> Iterator[Branch]:
        return iter(self.branches)

    def __len__(self) -> int:
        return len(self.branches)

    def __repr__(self) -> str:
        inner = ", ".join(f"({b.factor}: {b.value})" for b in self.branches)
        return f"SplitOutcome[{inner}]"

    def modulus(self) -> Poly:
        out = Poly.one()
        for b in self.branches:
            out = out * b.factor
        return out

    def all(self, predicate) -> bool:
        return all(predicate(b.value) for b in self.branches)

    def failing(self, predicate) -> List[Branch]:
        return [b for b in self.branches if not predicate(b.value)]


class ExtensionContext:
    """The ring Q[t]/(p) with p monic and squarefree."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: Poly):
        if modulus.degree() < 1:
            raise InvalidInputError("extension modulus must have positive degree")
        if not is_squarefree(modulus):
            raise InvalidInputError(f"extension modulus {modulus} is not squarefree")
        self.modulus = modulus.monic()

    def __repr__(self) -> str:
        return f"ExtensionContext({self.modulus})"

    @property
    def degree(self) -> int:
        return self.modulus.degree()

    def reduce(self, a: Poly) -> Poly:
        return a % self.modulus

    def add(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a + b)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a - b)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def is_zero(self, a: Poly) -> bool:
        return self.reduce(a).is_zero()

    def inverse(self, a: Poly) -> Poly:
        """Inverse of a unit; raises ZeroDivisorFound with gcd(a, p) otherwise."""
        a = self.reduce(a)
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in Q[t]/(p)")
        s, _, h = poly_gcdex(a, self.modulus)
        if h.degree() > 0:
            raise ZeroDivisorFound(h)
        return self.reduce(s)

    def split(self, factor: Poly) -> List["ExtensionContext"]:
        """The two coprime contexts obtained from a nontrivial factor of p."""
        g = poly_gcd(factor, self.modulus)
        if g.degree() <= 0 or g.degree() >= self.degree:
            raise InvalidInputError(f"{factor} is not a proper factor of {self.modulus}")
        return [ExtensionContext(g), ExtensionContext(self.modulus.exact_div(g))]


def ext_rank(m: Sequence[Sequence[Poly]], ctx: ExtensionContext) -> SplitOutcome:
    """Rank of a matrix over Q[t]/(p), split over the factors of p where it varies."""
    rows = [[ctx.reduce(e if isinstance(e, Poly) else Poly.constant(e)) for e in row] for row in m]
    return SplitOutcome(_rank_branches(rows, ctx))


def _rank_branches(rows: List[List[Poly]], ctx: ExtensionContext) -> List[Branch]:
    try:
        return [Branch(ctx.modulus, _field_rank([list(r) for r in rows], ctx))]
    except ZeroDivisorFound as zd:
        left, right = ctx.split(zd.factor)
        logger.debug(f"splitting {ctx.modulus} into degrees {left.degree} and {right.degree}")
        out = []
        for sub in (left, right):
            reduced = [[sub.reduce(e) for e in row] for row in rows]
            out.extend(_rank_branches(reduced, sub))
        return out


def _field_rank(rows: List[List[Poly]], ctx: ExtensionContext) -> int:
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if not rows[r][col].is_zero():
                inv = ctx.inverse(rows[r][col])
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = [ctx.mul(e, inv) for e in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f.is_zero():
                continue
            rows[r] = [ctx.sub(e, ctx.mul(f, pe)) for e, pe in zip(rows[r], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank
