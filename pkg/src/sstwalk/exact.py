"""Exact univariate polynomials and rational functions over Q.

``RatPoly`` is a dense coefficient vector of Fractions (constant term first);
``RatFun`` is a reduced fraction of two RatPolys with monic denominator.  These
carry every exact object in the pipeline: characteristic polynomials, the
resolvent traces psi_{S,T}, their denominators, and cyclotomic factors.

Determinant work is done on integers: matrices are scaled by a common
denominator, principal minors go through the division-free Berkowitz
characteristic polynomial, and non-principal minors of xI - M are recovered by
evaluating integer Bareiss determinants at enough points and interpolating.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, TYPE_CHECKING

from . import linalg

if TYPE_CHECKING:
    from .reduction import HermitianReduction


class RatPoly:
    """Univariate polynomial over Q, canonical dense form.

    The zero polynomial has degree -1 (sentinel).  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int | str] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- basics ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "RatPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "RatPoly(" + " + ".join(terms) + ")"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        out = RatPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quo), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate (Horner); works for Fraction, int, float or complex x."""
        exact = isinstance(x, (Fraction, int))
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (c if exact else float(c))
        return acc

    # -- integer content ---------------------------------------------------

    def primitive_int_coeffs(self) -> list[int]:
        """Coefficients scaled to a primitive integer vector (positive lead)."""
        if self.is_zero():
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = int_gcd(g, c)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return ints

    def serialize(self) -> str:
        """Space-separated rational coefficients, constant term first."""
        return " ".join(str(c) for c in self.coeffs)

    @staticmethod
    def parse(text: str) -> "RatPoly":
        return RatPoly([Fraction(tok) for tok in text.split()])


X = RatPoly([0, 1])
ONE = RatPoly([1])


def poly_gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd via the primitive polynomial remainder sequence over Z[x]."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a = f.primitive_int_coeffs()
    b = g.primitive_int_coeffs()
    if len(a) < len(b):
        a, b = b, a
    while b:
        a = _prem_primitive(a, b)
        a, b = b, a
    return RatPoly(a).monic()


def _prem_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of the pseudo-remainder prem(a, b) over Z[x]."""
    rem = list(a)
    lb = b[-1]
    while len(rem) >= len(b) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        lead = rem[-1]
        rem = [c * lb for c in rem]
        for j, bc in enumerate(b):
            rem[shift + j] -= lead * bc
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    if not rem:
        return []
    g = 0
    for c in rem:
        g = int_gcd(g, c)
    rem = [c // g for c in rem]
    if rem[-1] < 0:
        rem = [-c for c in rem]
    return rem


def squarefree_part(p: RatPoly) -> RatPoly:
    """p divided by gcd(p, p'), monic."""
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def factor_irreducible(p: RatPoly) -> list[RatPoly]:
    """Distinct monic Q-irreducible factors of p.

    Square-free reduction is done here; degree <= 1 pieces are split directly
    and anything harder goes to sympy's Q[x] factorizer.
    """
    if p.degree <= 0:
        return []
    sf = squarefree_part(p)
    factors: list[RatPoly] = []
    # peel linear factors at 0 cheaply (very common: the pole at lambda = 0)
    if sf.coeffs[0] == 0:
        factors.append(X)
        while sf.coeffs[0] == 0:
            sf = RatPoly(sf.coeffs[1:])
    if sf.degree == 1:
        factors.append(sf.monic())
        return sorted(factors, key=lambda q: (q.degree, q.coeffs))
    if sf.degree > 1:
        factors.extend(_sympy_factor(sf))
    return sorted(factors, key=lambda q: (q.degree, q.coeffs))


def _sympy_factor(p: RatPoly) -> list[RatPoly]:
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(p.coeffs)], x, domain="QQ")
    out = []
    for fac, _mult in expr.factor_list()[1]:
        cs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        q = RatPoly(cs).monic()
        if q.degree >= 1:
            out.append(q)
    return out


class RatFun:
    """Reduced rational function num/den over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly, den: RatPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = RatPoly(), ONE
            return
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num = num // g
            den = den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatFun)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self) -> str:
        return f"RatFun({self.num!r} / {self.den!r})"

    def serialize(self) -> str:
        return f"{self.num.serialize()} | {self.den.serialize()}"

    @staticmethod
    def parse(text: str) -> "RatFun":
        num, den = text.split("|")
        return RatFun(RatPoly.parse(num), RatPoly.parse(den))


def charpoly(m: linalg.Mat) -> RatPoly:
    """det(xI - M), exact, via Berkowitz on the denominator-cleared matrix."""
    n = len(m)
    if n == 0:
        return ONE
    if any(len(row) != n for row in m):
        raise ValueError("charpoly needs a square matrix")
    scale = linalg.common_denominator(m)
    z = linalg.scaled_int_matrix(m, scale)
    int_coeffs = linalg.berkowitz_charpoly(z)
    # det(xI - M) = scale^-n * det((scale x)I - Z)
    return RatPoly([Fraction(c) * Fraction(scale) ** (k - n)
                    for k, c in enumerate(int_coeffs)])


def _submatrix(m: linalg.Mat, drop_rows: set[int], drop_cols: set[int]) -> linalg.Mat:
    return [[m[i][j] for j in range(len(m)) if j not in drop_cols]
            for i in range(len(m)) if i not in drop_rows]


def _minor_poly(m: linalg.Mat, row: int, col: int) -> RatPoly:
    """det((xI - M) with row ``row`` and column ``col`` deleted), row != col.

    The x-cells surviving the deletion are the n-2 diagonal positions away from
    row/col, so the degree is at most n-2; we evaluate the integer-scaled
    determinant at n-1 points and interpolate.
    """
    n = len(m)
    size = n - 1
    scale = linalg.common_denominator(m)
    pts: list[tuple[Fraction, Fraction]] = []
    x = 0
    while len(pts) < max(size, 1):
        for xv in ((x, -x) if x else (0,)):
            if len(pts) == max(size, 1):
                break
            a = [[scale * xv * (1 if i == j else 0) - int(m[i][j] * scale)
                  for j in range(n) if j != col] for i in range(n) if i != row]
            det = linalg.bareiss_det(a)
            pts.append((Fraction(xv), Fraction(det, scale ** size)))
        x += 1
    return newton_interpolate(pts)


def newton_interpolate(points: list[tuple[Fraction, Fraction]]) -> RatPoly:
    """Exact polynomial through the given (x, y) points (distinct x)."""
    xs = [p[0] for p in points]
    coeffs = [p[1] for p in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = RatPoly()
    basis = ONE
    for j, c in enumerate(coeffs):
        poly = poly + basis * c
        basis = basis * RatPoly([-xs[j], 1])
    return poly


def psi(red: "HermitianReduction", s: list[int], t: list[int]) -> RatFun:
    """The resolvent trace psi_{S,T}(x) = tr((xI - H)^{-1}_{S,T}), exact over Q.

    Computed on the rational similar matrix H_rat; valid whenever the paired
    clones carry equal squared scaling (checked), in which case the diagonal
    similarity cancels entrywise.
    """
    if len(s) != len(t):
        raise ValueError("psi needs |S| = |T|")
    if not s:
        raise ValueError("psi needs nonempty clone sets")
    for a, b in zip(s, t):
        if red.delta_sq[a] != red.delta_sq[b]:
            raise ValueError(
                f"clones {a},{b} carry different delta_sq; psi would be irrational")
    h = red.h_rat
    den = charpoly(h)
    num = RatPoly()
    for a, b in zip(s, t):
        if a == b:
            num = num + charpoly(_submatrix(h, {a}, {a}))
        else:
            sign = -1 if (a + b) % 2 else 1
            num = num + sign * _minor_poly(h, b, a)
    return RatFun(num, den)


def pole_support(f: RatFun) -> list[RatPoly]:
    """Distinct monic Q-irreducible factors of the denominator of ``f``.

    Each factor's root set is one algebraic-conjugate class of poles.
    """
    return factor_irreducible(f.den)
