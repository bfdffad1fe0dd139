"""
Real-root counting and isolation with Sturm sequences.

All endpoints are dyadic rationals. An interval (lo, hi] returned by
``isolate_real_roots`` contains exactly one root; ``lo == hi`` marks an
exact rational root hit during bisection.
"""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

from src.algebra.poly import Poly, squarefree_part
from src.errors import InvalidInputError


class RootInterval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> List[str]:
        return [str(self.lo), str(self.hi)]


def sturm_sequence(f: Poly) -> List[Poly]:
    """Sturm chain of the squarefree part of f, each term made primitive."""
    if f.is_zero():
        raise InvalidInputError("Sturm sequence of the zero polynomial")
    p0 = squarefree_part(f)
    if p0.degree() <= 0:
        return [Poly.one()]
    seq = [p0.primitive(), p0.derivative().primitive()]
    while seq[-1].degree() > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        # positive scaling preserves every sign
        seq.append(r.primitive())
    return seq


def _variations(signs) -> int:
    count, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _variations_at(seq: List[Poly], x: Optional[Fraction], positive: bool = True) -> int:
    if x is None:
        return _variations(p.sign_at_infinity(positive) for p in seq)
    return _variations(p.sign_at(x) for p in seq)


def sturm_count(f: Poly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots of f in (lo, hi]; None is -inf / +inf."""
    seq = sturm_sequence(f)
    return _count(seq, lo, hi)


def _count(seq: List[Poly], lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
    if lo is not None and hi is not None and lo >= hi:
        return 0
    return _variations_at(seq, lo, positive=False) - _variations_at(seq, hi, positive=True)


def root_bound(f: Poly) -> Fraction:
    """A power of two strictly exceeding every |root| of f (Cauchy bound)."""
    lc = abs(f.lc())
    m = max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))
    cauchy = 1 + m
    bound = Fraction(1)
    while bound <= cauchy:
        bound *= 2
    return bound


def isolate_real_roots(f: Poly) -> List[RootInterval]:
    """One isolating interval per distinct real root, in increasing order."""
    if f.is_zero():
        raise InvalidInputError("cannot isolate the roots of the zero polynomial")
    seq = sturm_sequence(f)
    g = seq[0]
    if g.degree() <= 0:
        return []
    bound = root_bound(g)
    cache: Dict[Fraction, int] = {}

    def var(x: Fraction) -> int:
        if x not in cache:
            cache[x] = _variations_at(seq, x)
        return cache[x]

    found: List[RootInterval] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        c = var(lo) - var(hi)
        if c == 0:
            continue
        if c == 1:
            if g(hi) == 0:
                found.append(RootInterval(hi, hi))
            else:
                found.append(RootInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    found.sort(key=lambda r: r.hi)
    return found


def refine_root(f: Poly, interval: RootInterval, width: Fraction) -> RootInterval:
    """Bisect an isolating interval of f until it is no wider than ``width``."""
    if width <= 0:
        raise InvalidInputError("refinement width must be positive")
    if interval.is_exact:
        return interval
    seq = sturm_sequence(f)
    g = seq[0]
    lo, hi = interval
    if _count(seq, lo, hi) != 1:
        raise InvalidInputError(f"interval ({lo}, {hi}] does not isolate a single root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if g(mid) == 0:
            return RootInterval(mid, mid)
        if _count(seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi)

