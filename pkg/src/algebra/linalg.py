"""
Exact dense linear algebra over Q and Q[x].

Matrices are plain row-major lists of lists. Characteristic polynomials use
the division-free Berkowitz algorithm on an integer multiple of the input;
ranks and determinants use fraction-free (Bareiss) elimination.
"""
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import List, Optional, Sequence

from src.algebra.poly import Poly
from src.errors import InvalidInputError

Matrix = List[List[Fraction]]
Vector = List[Fraction]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def as_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(c) for c in row] for row in rows]


def is_square(m: Sequence[Sequence]) -> bool:
    return all(len(row) == len(m) for row in m)


def is_symmetric(m: Sequence[Sequence]) -> bool:
    n = len(m)
    return is_square(m) and all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) of the result is a[i][j] * b."""
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(len(a) * rb, (len(a[0]) if a else 0) * cb)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x == 0:
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = x * b[k][l]
    return out


def principal_submatrix(m: Matrix, drop: int) -> Matrix:
    """Delete row and column ``drop`` (0-based)."""
    return [[x for j, x in enumerate(row) if j != drop] for i, row in enumerate(m) if i != drop]


def _denominator_lcm(values) -> int:
    den = 1
    for c in values:
        d = Fraction(c).denominator
        den = den * d // _igcd(den, d)
    return den


def _berkowitz_int(a: List[List[int]]) -> List[int]:
    """Descending coefficients of det(xI - a) for an integer matrix."""
    n = len(a)
    if n == 0:
        return [1]
    poly = [1, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        m = n - 1 - k
        row = a[k][k + 1:]
        sub = [r[k + 1:] for r in a[k + 1:]]
        vec = [a[i][k] for i in range(k + 1, n)]
        t = [1, -a[k][k]]
        for _ in range(m):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(x * y for x, y in zip(r, vec)) for r in sub]
        poly = [
            sum(t[i - j] * poly[j] for j in range(min(i, m) + 1))
            for i in range(m + 2)
        ]
    return poly


def charpoly(m: Sequence[Sequence]) -> Poly:
    """Characteristic polynomial det(xI - m) of a square rational matrix."""
    if not is_square(m):
        raise InvalidInputError("characteristic polynomial needs a square matrix")
    n = len(m)
    den = _denominator_lcm(c for row in m for c in row)
    ints = [[int(Fraction(c) * den) for c in row] for row in m]
    desc = _berkowitz_int(ints)
    # coefficient of x^(n-k) picks up den^k
    asc = [Fraction(desc[n - i], den ** (n - i)) for i in range(n + 1)]
    return Poly(asc)


def _integer_rows(m: Sequence[Sequence]) -> List[List[int]]:
    rows = []
    for row in m:
        den = _denominator_lcm(row)
        rows.append([int(Fraction(c) * den) for c in row])
    return rows


def exact_rank(m: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination on integer rows."""
    if not m:
        return 0
    a = _integer_rows(m)
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nrows):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, ncols):
                ai[j] = (p * ai[j] - f * a[rank][j]) // prev
            ai[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rref(m: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    a = as_fraction_matrix(m)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace_vector(m: Sequence[Sequence]) -> Optional[Vector]:
    """A nonzero integer-scaled vector v with m v = 0, or None if m has full column rank."""
    if not m:
        return None
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [Fraction(0)] * ncols
    v[f] = Fraction(1)
    for row, pc in zip(red, pivots):
        v[pc] = -row[f]
    den = _denominator_lcm(v)
    ints = [int(x * den) for x in v]
    g = reduce(_igcd, ints, 0) or 1
    return [Fraction(x // g) for x in ints]


def left_kernel_vector(m: Sequence[Sequence]) -> Optional[Vector]:
    """A nonzero y with y^T m = 0, or None if the rows are independent."""
    return nullspace_vector(transpose(as_fraction_matrix(m)))


def poly_det(m: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix over Q[x] by Bareiss elimination."""
    n = len(m)
    if not is_square(m):
        raise InvalidInputError("determinant needs a square matrix")
    if n == 0:
        return Poly.one()
    a = [[p if isinstance(p, Poly) else Poly.constant(p) for p in row] for row in m]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot is None:
            return Poly()
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (p * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = Poly()
        prev = p
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det
