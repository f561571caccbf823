"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of ``fractions.Fraction`` (rows), vectors are
lists of Fractions.  Everything here is small and dense; the sizes that show up
in practice are a few dozen rows, so clarity wins over asymptotics.  The one
performance-sensitive primitive is the integer Bareiss determinant, which backs
all exact characteristic-polynomial work.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

Vec = list[Fraction]
Mat = list[list[Fraction]]


def frac_mat(rows) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def frac_vec(entries) -> Vec:
    return [Fraction(x) for x in entries]


def zeros(r: int, c: int) -> Mat:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Mat:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a: Mat, b: Mat) -> Mat:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for row in a]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def mat_eq(a: Mat, b: Mat) -> bool:
    return a == b


def dot(u: Vec, v: Vec) -> Fraction:
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return [x - y for x, y in zip(u, v)]


def vec_scale(u: Vec, c: Fraction) -> Vec:
    return [c * x for x in u]


def is_zero_vec(u: Vec) -> bool:
    return all(x == 0 for x in u)


def primitive_int_vector(v: Vec) -> Vec:
    """Scale a nonzero rational vector to a primitive integer vector.

    Scaling a basis column is harmless everywhere in this package: columns only
    ever need to be pairwise orthogonal, not normalized.
    """
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    # fix the sign so the first nonzero entry is positive (canonical)
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return [Fraction(x) for x in ints]


def gram_schmidt(vectors: list[Vec], against: list[Vec] | None = None,
                 on_dependent: str = "error") -> list[Vec]:
    """Exact unnormalized Gram-Schmidt.

    Returns pairwise-orthogonal rational vectors spanning the same space as
    ``vectors`` (orthogonal also to every vector in ``against``).  Each output
    vector is reduced to a primitive integer vector.  ``on_dependent`` is
    either "error" (raise on a vector already in the span) or "drop".
    """
    fixed = [list(v) for v in (against or [])]
    out: list[Vec] = []
    for v in vectors:
        w = list(v)
        for b in fixed + out:
            c = dot(w, b)
            if c:
                nb = dot(b, b)
                w = vec_sub(w, vec_scale(b, c / nb))
        if is_zero_vec(w):
            if on_dependent == "drop":
                continue
            raise ValueError("linearly dependent vector in Gram-Schmidt input")
        out.append(primitive_int_vector(w))
    return out


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot-column list (exact)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Mat) -> list[Vec]:
    """Exact rational basis of the right kernel of ``a``."""
    if not a:
        return []
    red, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(primitive_int_vector(v))
    return basis


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pivot_val = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot_val * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot_val
    return sign * m[n - 1][n - 1]


def berkowitz_charpoly(a: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(xI - A) of an integer matrix.

    Division-free Samuelson-Berkowitz; returns integer coefficients
    [c0, c1, ..., cn] with cn = 1.
    """
    n = len(a)
    if n == 0:
        return [1]
    # vector of charpoly coefficients, highest degree first
    poly = [1, -a[0][0]]
    for i in range(1, n):
        # Toeplitz column for principal submatrix of size i+1
        row = [a[i][j] for j in range(i)]
        col = [a[j][i] for j in range(i)]
        sub = [[a[r][c] for c in range(i)] for r in range(i)]
        # entries: 1, -a[i][i], -(row . col), -(row . sub . col), ...
        t = [1, -a[i][i]]
        cur = col
        for _ in range(i):
            t.append(-sum(rv * cv for rv, cv in zip(row, cur)))
            cur = [sum(sub[r][c] * cur[c] for c in range(i)) for r in range(i)]
        t = t[: i + 2]
        new = [0] * (i + 2)
        for p, cp in enumerate(poly):
            if cp:
                for q, tq in enumerate(t):
                    if p + q < i + 2 and tq:
                        new[p + q] += cp * tq
        poly = new
    return list(reversed(poly))


def common_denominator(a: Mat) -> int:
    den = 1
    for row in a:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    return den


def scaled_int_matrix(a: Mat, scale: int) -> list[list[int]]:
    return [[int(x * scale) for x in row] for row in a]


def to_numpy(a: Mat) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in a], dtype=float)
