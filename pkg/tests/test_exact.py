"""Exact polynomial algebra, characteristic polynomials, and resolvent traces."""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import synthetic_reduction
from sstwalk.exact import (ONE, RatFun, RatPoly, X, charpoly,
                           factor_irreducible, newton_interpolate, pole_support,
                           poly_gcd, psi, squarefree_part)
from sstwalk.graphs import build_graph
from sstwalk.coins import CoinAssignment
from sstwalk.reduction import reduction_for


def P(*coeffs):
    return RatPoly([Fraction(c) for c in coeffs])


# -- polynomial arithmetic -----------------------------------------------------


def test_gcd_examples():
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)          # gcd(x^2-1, x-1)
    assert poly_gcd(P(1, 0, 1), P(1, -1, 1)) == ONE             # gcd(Phi4, Phi6)


def test_divrem_example():
    q, r = P(0, 0, 0, 1).divmod(P(-2, 1))                       # x^3 / (x-2)
    assert q == P(4, 2, 1) and r == P(8)


def test_zero_poly_sentinel():
    z = RatPoly()
    assert z.degree == -1 and z.is_zero()
    with pytest.raises(ZeroDivisionError):
        P(1).divmod(z)


def test_canonical_trim():
    assert RatPoly([1, 2, 0, 0]) == RatPoly([1, 2])


def test_serialization_roundtrip():
    p = P(Fraction(1, 3), -2, 0, 5)
    assert RatPoly.parse(p.serialize()) == p
    f = RatFun(P(0, 1), P(-1, 0, 1))
    assert RatFun.parse(f.serialize()) == f


coeff = st.integers(-9, 9).map(Fraction)
polys = st.lists(coeff, min_size=0, max_size=6).map(RatPoly)


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_divmod_roundtrip(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    for p in (a, b):
        if not p.is_zero():
            assert p % g == RatPoly()


def test_squarefree_part():
    p = P(-1, 1) ** 3 * P(1, 1)
    assert squarefree_part(p) == (P(-1, 1) * P(1, 1)).monic()


def test_newton_interpolation():
    pts = [(Fraction(i), Fraction(i) ** 2 + 1) for i in (-1, 0, 2)]
    assert newton_interpolate(pts) == P(1, 0, 1)


# -- characteristic polynomials -------------------------------------------------


def test_charpoly_1x1_zero():
    assert charpoly([[Fraction(0)]]) == X


def test_charpoly_swap():
    assert charpoly([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == P(-1, 0, 1)


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return outer + inner + spokes


def test_charpoly_petersen_third():
    """charpoly((1/3)A(Petersen)) = (x-1)(x-1/3)^5 (x+2/3)^4, checked by exact
    factorization of the Petersen spectrum {3, 1^5, (-2)^4} scaled by 1/3."""
    g = build_graph(petersen_edges(), 10)
    a = [[Fraction(1, 3) if g.adjacent(u, v) else Fraction(0)
          for v in range(10)] for u in range(10)]
    expect = P(-1, 1) * P(Fraction(-1, 3), 1) ** 5 * P(Fraction(2, 3), 1) ** 4
    assert charpoly(a) == expect


def test_charpoly_matches_numeric_roots():
    rng = random.Random(11)
    for _ in range(5):
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(6)]
        for i in range(6):
            for j in range(i):
                m[i][j] = m[j][i]
        cp = charpoly(m)
        lam = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in m]))
        prod = np.poly(lam)[::-1]  # constant term first
        ours = np.array([float(c) for c in cp.coeffs])
        assert np.max(np.abs(ours - prod)) < 1e-6


# -- psi -------------------------------------------------------------------------


def test_psi_1x1():
    red = synthetic_reduction([[0]], [1], [0], [0])
    assert psi(red, [0], [0]) == RatFun(ONE, X)


def test_psi_2x2_scaled():
    red = synthetic_reduction([[0, Fraction(1, 2)], [Fraction(1, 2), 0]],
                              [1, 1], [0], [0])
    assert psi(red, [0], [0]) == RatFun(P(0, 1), P(Fraction(-1, 4), 0, 1))


def test_psi_off_diagonal():
    red = synthetic_reduction([[0, Fraction(1, 2)], [Fraction(1, 2), 0]],
                              [1, 1], [0], [1])
    assert psi(red, [0], [1]) == RatFun(P(Fraction(1, 2)), P(Fraction(-1, 4), 0, 1))


def test_psi_requires_matched_delta():
    red = synthetic_reduction([[0, 1], [1, 0]], [1, 4], [0], [1])
    with pytest.raises(ValueError):
        psi(red, [0], [1])


def test_psi_reduced_canonical():
    """gcd(num, den) = 1 always; here the (x-1) pole of the charpoly drops."""
    g = build_graph([(0, 1), (1, 2), (0, 2)], 3)
    asn = CoinAssignment.all_grover(g)
    red = reduction_for(asn, 0, [[1, 1]])
    f = psi(red, red.s, red.s)
    assert poly_gcd(f.num, f.den) == ONE
    assert f.den.lead == 1


def test_psi_twins_k23_equal():
    from sstwalk.graphs import complete_bipartite_k2m

    g, a, b = complete_bipartite_k2m(3)
    asn = CoinAssignment.all_grover(g)
    red = reduction_for(asn, a, [[1, 1, 1]], b)
    assert psi(red, red.s, red.s) == psi(red, red.t, red.t)


def test_resolvent_identity_numeric():
    """psi_{S,T}(2) equals the numeric trace of the (S,T) resolvent block of
    the reconstituted symmetric H, Delta-correction included."""
    rng = random.Random(5)
    for _ in range(4):
        n = 6
        sym = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                sym[i][j] = sym[j][i] = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
        dpair = [Fraction(rng.randint(1, 4)) for _ in range(3)]
        dsq = [dpair[k // 2] for k in range(6)]
        red = synthetic_reduction(sym, dsq, [0, 2], [1, 3])
        val = float(psi(red, [0, 2], [1, 3])(Fraction(2)))
        d = np.sqrt(np.array([float(x) for x in dsq]))
        h = np.array([[float(x) for x in row] for row in sym]) / np.outer(d, d)
        res = np.linalg.inv(2 * np.eye(n) - h)
        want = res[0, 1] + res[2, 3]
        assert abs(val - want) < 1e-8


# -- pole support ----------------------------------------------------------------


def test_pole_support_examples():
    assert pole_support(RatFun(ONE, X)) == [X]
    f = RatFun(P(0, 1), P(Fraction(-1, 4), 0, 1))
    assert pole_support(f) == [P(Fraction(-1, 2), 1), P(Fraction(1, 2), 1)]


def test_pole_support_octahedron_contains_half():
    """The circulant reduction's support carries the factor x^2 - 1/2
    (roots +-sqrt(2/delta) with delta = 4)."""
    from sstwalk.coins import reflection_about
    from sstwalk.graphs import circulant_2m

    g, a, b = circulant_2m(3, 1, 2)
    w = [[1, 0, -1, 0], [0, 1, 0, -1]]
    asn = CoinAssignment.grover_with_marked(g, a, b, reflection_about(w))
    red = reduction_for(asn, a, w, b)
    factors = pole_support(psi(red, red.s, red.s))
    assert P(Fraction(-1, 2), 0, 1) in factors


def test_factor_irreducible_nonlinear():
    p = (P(-1, -1, 2) * P(3, 0, 1)).monic()  # (2x^2-x-1)(x^2+3)
    factors = factor_irreducible(p)
    assert P(Fraction(1, 2), 1) in factors
    assert P(-1, 1) in factors
    assert P(3, 0, 1) in factors
