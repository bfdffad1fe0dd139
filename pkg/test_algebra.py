"""
Tests for exact polynomial arithmetic, linear algebra, root isolation,
resultants and dynamic evaluation over Q[t]/(p).
"""
import sys
import os
import random
from fractions import Fraction

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.algebra.extension import ExtensionContext, ZeroDivisorFound, ext_rank
from src.algebra.linalg import (
    charpoly,
    exact_rank,
    kron,
    left_kernel_vector,
    mat_mul,
    nullspace_vector,
    poly_det,
    rref,
)
from src.algebra.poly import (
    Poly,
    is_squarefree,
    poly_gcd,
    poly_gcdex,
    squarefree_decomposition,
    squarefree_part,
    wronskian_polynomial,
)
from src.algebra.resultant import difference_polynomial, interpolate, linear_pencil, resultant_in_t
from src.algebra.roots import RootInterval, isolate_real_roots, refine_root, sturm_count
from src.errors import InvalidInputError

x = Poly.x()


def lin(root):
    return Poly.linear(Fraction(root))


# -- Poly ------------------------------------------------------------------------

def test_basic_arithmetic():
    assert (x - 1) * (x + 1) == x * x - 1
    assert (x + 1) ** 3 == Poly([1, 3, 3, 1])
    q, r = divmod(x ** 3 + 2 * x + 5, x ** 2 + 1)
    assert q == x and r == x + 5
    assert (x ** 2 - 1).exact_div(x - 1) == x + 1
    with pytest.raises(ArithmeticError):
        (x ** 2 + 1).exact_div(x - 1)


def test_zero_polynomial_conventions():
    zero = Poly()
    assert zero.is_zero() and zero.degree() == -1
    assert Poly.constant(0) == zero
    assert Poly([1, 2, 0, 0]).degree() == 1


def test_evaluation_and_composition():
    p = x ** 2 - 3 * x + 2
    assert p(Fraction(1)) == 0
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert p.compose(x + 1) == x ** 2 - x
    assert p.derivative() == 2 * x - 3


def test_text_format():
    p = Poly.parse("x^4-3x^2+1")
    assert p == x ** 4 - 3 * x ** 2 + 1
    assert p.to_text() == "x^4-3x^2+1"
    assert Poly.parse("1/2x-3").to_text() == "1/2x-3"
    assert Poly.parse(Poly([Fraction(-7, 3), 0, 5]).to_text()) == Poly([Fraction(-7, 3), 0, 5])
    assert Poly.parse("0").is_zero()


def test_parse_rejects_garbage():
    with pytest.raises(InvalidInputError):
        Poly.parse("x^2 + + 1")
    with pytest.raises(InvalidInputError):
        Poly.parse("x^2+y")


def test_json_round_trip():
    p = Poly([Fraction(1, 3), 0, -2, 1])
    assert p.to_json() == ["1/3", "0", "-2", "1"]
    assert Poly.from_json(p.to_json()) == p


def test_primitive_is_positive_integer_multiple():
    p = Poly([Fraction(-1, 2), Fraction(3, 4)])
    prim = p.primitive()
    assert prim == Poly([-2, 3])
    assert prim.lc() > 0


# -- gcd and squarefree -------------------------------------------------------------

def test_gcd_is_monic():
    f = lin(1) * lin(1) * lin(-2)
    g = (lin(1) * lin(-3)).scale(5)
    assert poly_gcd(f, g) == lin(1)
    assert poly_gcd(f, x ** 2 + 1) == Poly.one()


def test_gcd_with_zero():
    assert poly_gcd(Poly(), 2 * x + 2) == x + 1
    with pytest.raises(InvalidInputError):
        poly_gcd(Poly(), Poly())


def test_gcd_of_rational_polynomials():
    f = (x - Fraction(1, 3)) * (x + Fraction(5, 2))
    g = (x - Fraction(1, 3)) * (x ** 2 + 7)
    assert poly_gcd(f, g) == x - Fraction(1, 3)


def test_gcdex_bezout_identity():
    f = lin(1) * lin(2) * lin(3)
    g = lin(2) * (x ** 2 + 1)
    s, t, h = poly_gcdex(f, g)
    assert h == lin(2)
    assert s * f + t * g == h


def test_squarefree_helpers():
    f = x * lin(1) ** 2 * lin(-2) ** 3
    assert not is_squarefree(f)
    assert squarefree_part(f) == x * lin(1) * lin(-2)
    assert squarefree_decomposition(f) == [(x, 1), (lin(1), 2), (lin(-2), 3)]
    assert is_squarefree(x ** 2 - 2)


def test_squarefree_decomposition_reassembles():
    f = (x ** 2 - 2) ** 2 * (x + 1) * (x ** 2 + 1) ** 3
    product = Poly.one()
    for a, i in squarefree_decomposition(f):
        product = product * a ** i
    assert product == f.monic()


def test_wronskian_polynomial():
    f, g = x ** 2 - 1, x
    # f g' - f' g = (x^2 - 1) - 2x^2
    assert wronskian_polynomial(f, g) == -x ** 2 - 1


# -- linear algebra -----------------------------------------------------------------

def test_charpoly_small_matrices():
    assert charpoly([[0, 1], [1, 0]]) == x ** 2 - 1
    assert charpoly([[Fraction(1, 2)]]) == x - Fraction(1, 2)
    assert charpoly([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == lin(2) * ((x - 2) ** 2 - 2)


def test_charpoly_rational_entries():
    m = [[Fraction(1, 3), Fraction(2, 3)], [Fraction(2, 3), Fraction(1, 3)]]
    assert charpoly(m) == lin(1) * lin(Fraction(-1, 3))


def test_charpoly_rejects_non_square():
    with pytest.raises(InvalidInputError):
        charpoly([[1, 2, 3], [4, 5, 6]])


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 0, 0], [0, 0, 1], [0, 1, 0]]) == 3
    assert exact_rank([[Fraction(1, 2), 1], [1, 2], [3, 7]]) == 2


def test_rref_and_kernels():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    red, pivots = rref(m)
    assert pivots == [0, 1]
    v = nullspace_vector(m)
    assert v is not None and all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    y = left_kernel_vector(m)
    assert y is not None
    assert all(sum(y[i] * m[i][j] for i in range(3)) == 0 for j in range(3))
    assert nullspace_vector([[1, 0], [0, 1]]) is None


def test_kron_shape_and_entries():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    k = kron(a, b)
    assert len(k) == 4 and k[0] == [0, 1, 0, 2] and k[3] == [3, 0, 4, 0]
    assert mat_mul([[1, 0], [0, 1]], a) == a


def test_poly_det_matches_charpoly():
    m = [[1, 2, 0], [2, 0, 1], [0, 1, 3]]
    xm = [[(x - m[i][j]) if i == j else Poly.constant(-m[i][j]) for j in range(3)] for i in range(3)]
    assert poly_det(xm) == charpoly(m)
    assert poly_det([]) == Poly.one()


# -- roots --------------------------------------------------------------------------

def test_sturm_counts_half_open_intervals():
    p = lin(-1) * lin(0) * lin(2)
    assert sturm_count(p) == 3
    assert sturm_count(p, Fraction(-1), Fraction(2)) == 2
    assert sturm_count(p, Fraction(-2), Fraction(0)) == 2
    assert sturm_count(x ** 2 + 1) == 0
    assert sturm_count(lin(1) ** 3) == 1


def test_isolation_is_sorted_and_disjoint():
    p = (x ** 2 - 2) * lin(1) * (x ** 2 + 1)
    roots = isolate_real_roots(p)
    assert len(roots) == 3
    assert all(a.hi <= b.lo for a, b in zip(roots, roots[1:]))
    assert any(r.is_exact and r.lo == 1 for r in roots)


def test_refinement_brackets_sqrt2():
    p = x ** 2 - 2
    positive = [r for r in isolate_real_roots(p) if r.lo >= 0][0]
    fine = refine_root(p, positive, Fraction(1, 1000))
    assert fine.width <= Fraction(1, 1000)
    assert fine.lo ** 2 < 2 <= fine.hi ** 2


def test_interval_serialization():
    assert RootInterval(Fraction(1, 2), Fraction(1)).to_json() == ["1/2", "1"]


# -- resultants -----------------------------------------------------------------------

def test_resultant_of_linear_pencil():
    # Res_t(t^2 - 1, f - t g) = (f - g)(f + g)
    f, g = x ** 2, x + 1
    assert resultant_in_t(Poly([-1, 0, 1]), linear_pencil(f, g)) == (f - g) * (f + g)


def test_resultant_carries_leading_coefficient():
    p = Poly([-2, 2])  # 2t - 2, root 1
    assert resultant_in_t(p, linear_pencil(x, Poly.one())) == (x - 1) * 2


def test_difference_polynomial():
    # roots 0, 1, 3: nonzero differences +-1, +-2, +-3
    p = x * lin(1) * lin(3)
    expected = Poly.one()
    for d in (1, 2, 3):
        expected = expected * (x ** 2 - d * d)
    assert difference_polynomial(p) == expected


def test_interpolation_recovers_bivariate():
    q = [x ** 2, -x, Poly.one()]  # x^2 - t x + t^2
    points = [Fraction(k) for k in range(3)]
    values = [q[0] + q[1] * t + q[2] * t * t for t in points]
    assert interpolate(points, values) == q


# -- dynamic evaluation -------------------------------------------------------------

def test_inverse_in_field():
    ctx = ExtensionContext(x ** 2 - 2)
    a = x + 1
    assert ctx.mul(a, ctx.inverse(a)) == Poly.one()


def test_zero_divisor_is_reported():
    ctx = ExtensionContext(x ** 2 - 1)
    with pytest.raises(ZeroDivisorFound) as info:
        ctx.inverse(x - 1)
    assert info.value.factor == x - 1


def test_extension_rejects_repeated_factors():
    with pytest.raises(InvalidInputError):
        ExtensionContext(lin(1) ** 2)


def test_ext_rank_splits_on_zero_divisors():
    # [[t - 1]] has rank 0 at t = 1 and rank 1 at t = -1
    ctx = ExtensionContext(x ** 2 - 1)
    outcome = ext_rank([[x - 1]], ctx)
    ranks = {b.factor: b.value for b in outcome}
    assert ranks == {x - 1: 0, x + 1: 1}
    assert outcome.modulus() == x ** 2 - 1
    assert not outcome.all(lambda r: r == 1)


def test_ext_rank_without_split():
    ctx = ExtensionContext(x ** 2 - 2)
    outcome = ext_rank([[x, Poly.one()], [Poly.constant(2), x]], ctx)
    assert len(outcome) == 1
    assert list(outcome)[0].value == 1


# -- randomized invariants ------------------------------------------------------------

def random_poly(rng, degree, bound=5):
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = rng.choice([k for k in range(-bound, bound + 1) if k])
    return Poly(coeffs + [lead])


def random_rational(rng, bound=4):
    return Fraction(rng.randint(-bound * 4, bound * 4), rng.choice([1, 2, 3, 4]))


def test_gcd_divides_both_arguments():
    rng = random.Random(2024)
    for _ in range(60):
        common = random_poly(rng, rng.randint(0, 4))
        f = common * random_poly(rng, rng.randint(0, 8))
        g = common * random_poly(rng, rng.randint(0, 8))
        h = poly_gcd(f, g)
        assert (f % h).is_zero() and (g % h).is_zero()
        assert (h % common.monic()).is_zero()


def test_sturm_count_matches_isolation():
    rng = random.Random(31)
    for _ in range(60):
        roots = {random_rational(rng) for _ in range(rng.randint(0, 5))}
        f = random_poly(rng, rng.randint(0, 10 - len(roots)))
        for r in roots:
            f = f * lin(r)
        f = squarefree_part(f)
        assert f.degree() <= 10
        intervals = isolate_real_roots(f)
        assert sturm_count(f) == len(intervals) >= len(roots)


def test_charpoly_matches_interpolated_determinants():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = [[random_rational(rng, 2) for _ in range(n)] for _ in range(n)]
        points = [Fraction(k) for k in range(n + 1)]
        dets = [
            poly_det([[Poly.constant((t if i == j else 0) - m[i][j]) for j in range(n)] for i in range(n)])
            for t in points
        ]
        interpolated = Poly([c.coeff(0) for c in interpolate(points, dets)])
        assert interpolated == charpoly(m)


def test_resultant_over_split_modulus_is_a_product():
    rng = random.Random(17)
    for _ in range(30):
        roots = [random_rational(rng) for _ in range(rng.randint(1, 4))]
        p = Poly.one()
        for r in roots:
            p = p * lin(r)
        f = random_poly(rng, rng.randint(0, 4))
        g = random_poly(rng, rng.randint(0, 3))
        expected = Poly.one()
        for r in roots:
            expected = expected * (f - g * r)
        assert resultant_in_t(p, linear_pencil(f, g)) == expected


def _ranks_by_root(outcome, roots):
    return {r: next(b.value for b in outcome if b.factor(r) == 0) for r in roots}


def test_ext_rank_is_permutation_invariant():
    rng = random.Random(8)
    for _ in range(25):
        roots = rng.sample(range(-3, 4), rng.randint(1, 4))
        p = Poly.one()
        for r in roots:
            p = p * lin(r)
        ctx = ExtensionContext(p)
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[random_poly(rng, rng.randint(0, 2), 2) if rng.random() < 0.7 else Poly()
              for _ in range(cols)] for _ in range(rows)]
        row_order = rng.sample(range(rows), rows)
        col_order = rng.sample(range(cols), cols)
        permuted = [[m[i][j] for j in col_order] for i in row_order]
        base = _ranks_by_root(ext_rank(m, ctx), roots)
        assert base == _ranks_by_root(ext_rank(permuted, ctx), roots)
        # Q[t]/(t - r) is evaluation at r
        assert base == {r: exact_rank([[e(Fraction(r)) for e in row] for row in m]) for r in roots}
