"""
Resultants with polynomial coefficients.

A bivariate polynomial q(x, t) is represented by its coefficient list in t:
``q[k]`` is the Poly in x multiplying t^k. The resultant with respect to t of a
univariate p(t) and q is computed through the companion matrix of p, which
turns Res_t(p, q) into a single determinant over Q[x].
"""
from fractions import Fraction
from math import comb
from typing import List, Sequence

from src.algebra.linalg import identity, mat_mul, poly_det
from src.algebra.poly import Poly
from src.errors import InvalidInputError

Bivariate = List[Poly]


def companion_matrix(p: Poly) -> List[List[Fraction]]:
    """Companion matrix of the monic normalization of p (char. polynomial = monic(p))."""
    n = p.degree()
    if n < 1:
        raise InvalidInputError("companion matrix needs a polynomial of positive degree")
    monic = p.monic()
    c = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        c[i][i - 1] = Fraction(1)
    for i in range(n):
        c[i][n - 1] = -monic.coeff(i)
    return c


def _trim(q: Sequence[Poly]) -> Bivariate:
    out = list(q)
    while out and out[-1].is_zero():
        out.pop()
    return out


def resultant_in_t(p: Poly, q: Sequence[Poly]) -> Poly:
    """Res_t(p(t), q(x, t)) as a polynomial in x.

    For non-monic p the result carries lc(p)^deg_t(q), matching the Sylvester
    resultant; for monic p it is the product of q(x, mu) over the roots mu of p.
    """
    if p.is_zero():
        raise InvalidInputError("resultant with the zero polynomial")
    q = _trim(q)
    if not q:
        return Poly()
    deg_q = len(q) - 1
    scale = p.lc() ** deg_q
    n = p.degree()
    if n == 0:
        return Poly.constant(scale)
    comp = companion_matrix(p)
    acc = [[Poly() for _ in range(n)] for _ in range(n)]
    power = identity(n)
    for k, qk in enumerate(q):
        if k:
            power = mat_mul(power, comp)
        if qk.is_zero():
            continue
        for i in range(n):
            for j in range(n):
                if power[i][j]:
                    acc[i][j] = acc[i][j] + qk * power[i][j]
    return poly_det(acc) * scale


def linear_pencil(f: Poly, g: Poly) -> Bivariate:
    """f(x) - t*g(x) as a bivariate coefficient list in t."""
    return [f, -g]


def shifted(p: Poly) -> Bivariate:
    """p(x + z) as a coefficient list in x of polynomials in z."""
    n = p.degree()
    out = []
    for i in range(n + 1):
        out.append(Poly([p.coeff(j) * comb(j, i) if j >= i else 0 for j in range(n + 1)][i:]))
    return _trim(out)


def difference_polynomial(p: Poly) -> Poly:
    """Monic polynomial whose roots are the nonzero differences of roots of p.

    Computed as Res_x(p(x), p(x + z)) / z^deg(p); for squarefree p every root
    mu_j - mu_i with i != j appears once.
    """
    n = p.degree()
    if n < 1:
        raise InvalidInputError("difference polynomial needs a polynomial of positive degree")
    res = resultant_in_t(p, shifted(p))
    quotient = res.exact_div(Poly.monomial(1, n))
    return quotient.monic() if not quotient.is_zero() else quotient


def interpolate(points: Sequence[Fraction], values: Sequence[Poly]) -> Bivariate:
    """Lagrange interpolation in t of Poly-valued samples; returns coefficients in t."""
    if len(points) != len(values):
        raise InvalidInputError("interpolation needs one value per point")
    coeffs: Bivariate = []
    for i, (ti, vi) in enumerate(zip(points, values)):
        basis = Poly.one()
        denom = Fraction(1)
        for j, tj in enumerate(points):
            if j != i:
                basis = basis * Poly.linear(tj)
                denom *= ti - tj
        basis = basis * (1 / denom)
        for k, b in enumerate(basis.coeffs):
            while len(coeffs) <= k:
                coeffs.append(Poly())
            if b:
                coeffs[k] = coeffs[k] + vi * b
    return _trim(coeffs)
