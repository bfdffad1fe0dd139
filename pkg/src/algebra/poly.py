"""
Univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending degree as Fractions. The gcd is computed
with the subresultant PRS over the integers (on primitive parts) to keep
coefficient growth in check; everything else is plain field arithmetic over Q.
"""
import re
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import Iterable, List, Sequence, Tuple, Union

from src.errors import InvalidInputError

Scalar = Union[int, Fraction]

_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(?:\*?([a-z])(?:\^(\d+))?)?")


def _lcm(a: int, b: int) -> int:
    return a * b // _igcd(a, b)


class Poly:
    """Immutable polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, root: Scalar) -> "Poly":
        """The monic polynomial x - root."""
        return cls((-Fraction(root), 1))

    # -- basic queries ------------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> Tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree()
        lc = other.lc()
        if len(rem) - 1 < dg:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1 - dg, -1, -1):
            q = rem[k + dg] / lc
            quo[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return Poly(quo), Poly(rem[:dg])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Quotient, raising if the division leaves a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def scale(self, c: Scalar) -> "Poly":
        return self * Fraction(c)

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        return self(other)

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.lc() > 0 else -1
        if not positive and self.degree() % 2 == 1:
            s = -s
        return s

    # -- normal forms -------------------------------------------------------

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc())

    def integer_coefficients(self) -> List[int]:
        """Primitive integer multiple with positive leading coefficient."""
        if not self.coeffs:
            return []
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(_igcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return [c // g for c in ints]

    def primitive(self) -> "Poly":
        """Positive rational multiple with coprime integer coefficients."""
        if not self.coeffs:
            return self
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = abs(reduce(_igcd, ints, 0))
        return Poly([c // g for c in ints])

    # -- text and JSON ------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        """Descending sparse form, e.g. ``x^4-3x^2+1`` or ``1/2x-3``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    @classmethod
    def parse(cls, text: str) -> "Poly":
        s = re.sub(r"\s+", "", text)
        if s in ("", "0"):
            return cls()
        coeffs = {}
        pos = 0
        var = None
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise InvalidInputError(f"cannot parse polynomial {text!r} at position {pos}")
            if pos > 0 and not m.group(1):
                raise InvalidInputError(f"missing sign between terms of {text!r} at position {pos}")
            sign, num, v, power = m.groups()
            if v is not None:
                if var is not None and v != var:
                    raise InvalidInputError(f"mixed variables in {text!r}")
                var = v
                k = int(power) if power else 1
            else:
                k = 0
            c = Fraction(num) if num else Fraction(1)
            if sign == "-":
                c = -c
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
            pos = m.end()
        top = max(coeffs)
        return cls([coeffs.get(k, 0) for k in range(top + 1)])

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Poly":
        return cls(Fraction(str(c)) for c in items)


# -- integer PRS machinery ---------------------------------------------------

def _strip(f: List[int]) -> List[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _int_prem(f: List[int], g: List[int]) -> List[int]:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g over Z."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    lcg = g[-1]
    n = df - dg + 1
    while r and len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lcg for c in r]
        for i, c in enumerate(g):
            r[i + k] -= lr * c
        r.pop()
        _strip(r)
        n -= 1
    if n > 0:
        factor = lcg ** n
        r = [c * factor for c in r]
    return r


def _exact_int_div(c: int, d: int) -> int:
    q, rem = divmod(c, d)
    if rem:
        raise ArithmeticError("inexact division in subresultant PRS")
    return q


def subresultant_prs(f: List[int], g: List[int]) -> List[List[int]]:
    """Subresultant polynomial remainder sequence of integer polynomials."""
    if len(f) < len(g):
        f, g = g, f
    if not f:
        return []
    if not g:
        return [f]
    prs = [f, g]
    m = len(g) - 1
    d = len(f) - 1 - m
    b = (-1) ** (d + 1)
    h = [c * b for c in _int_prem(f, g)]
    lc = g[-1]
    c = -(lc ** d)
    while h:
        k = len(h) - 1
        prs.append(h)
        f, g, m, d = g, h, k, m - k
        b = -lc * c ** d
        h = [_exact_int_div(x, b) for x in _int_prem(f, g)]
        lc = g[-1]
        if d > 1:
            c = _exact_int_div((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
    return prs


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over Q."""
    if f.is_zero() and g.is_zero():
        raise InvalidInputError("gcd of two zero polynomials is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.degree() == 0 or g.degree() == 0:
        return Poly.one()
    prs = subresultant_prs(f.integer_coefficients(), g.integer_coefficients())
    return Poly(prs[-1]).monic()


def poly_gcdex(f: Poly, g: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (s, t, h) with s*f + t*g = h = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = Poly.one(), Poly()
    t0, t1 = Poly(), Poly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise InvalidInputError("gcd of two zero polynomials is undefined")
    inv = 1 / r0.lc()
    return s0 * inv, t0 * inv, r0 * inv


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise InvalidInputError("the zero polynomial has no squarefree test")
    if f.degree() <= 1:
        return True
    return poly_gcd(f, f.derivative()).degree() == 0


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise InvalidInputError("the zero polynomial has no squarefree part")
    if f.degree() <= 0:
        return Poly.one()
    return f.exact_div(poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: Poly) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: monic f = prod a_i^i with squarefree, coprime a_i."""
    if f.is_zero():
        raise InvalidInputError("the zero polynomial has no squarefree decomposition")
    f = f.monic()
    if f.degree() <= 0:
        return []
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = f.exact_div(a0)
    c = fp.exact_div(a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def wronskian_polynomial(f: Poly, g: Poly) -> Poly:
    """f * g' - f' * g."""
    return f * g.derivative() - f.derivative() * g
