"""Coin bases, the Hermitian reduction H = N*RN, and the marked-vertex blow-up.

H is never materialized with irrational entries.  A reduction stores the
symmetric rational matrix S = M^T R M (M = exact orthogonal coin basis) and the
diagonal D = M^T M; the true Hermitian matrix is H = D^{-1/2} S D^{-1/2} and
its rational similar carrier is H_rat = S D^{-1} (so H = Delta^{-1} H_rat Delta
with Delta = D^{1/2}).  Exact transfer checks and resolvent traces operate on
H_rat directly whenever the paired clones share delta_sq.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .coins import CoinAssignment
from .linalg import Mat, Vec


class ReductionError(ValueError):
    pass


class AdjacentMarkedPair(ReductionError):
    """Raised by the blow-up when a ~ b: perfect subspace state transfer from
    a to b is then guaranteed at t = 1 and no reduction is needed."""


@dataclass(frozen=True)
class CoinBasis:
    """Ordered exact orthogonal coin basis: one (vertex, weight vector) per clone."""

    columns: tuple[tuple[int, tuple[Fraction, ...]], ...]
    s_clones: tuple[int, ...]
    t_clones: tuple[int, ...]


def induced_coin_basis(assignment: CoinAssignment, a: int, w_basis: list[Vec],
                       b: int | None = None, v_basis: list[Vec] | None = None
                       ) -> CoinBasis:
    """Exact orthogonal coin basis whose first block at a spans x_a(W) (and at
    b spans x_b(V); V defaults to W under the positional identification).

    Vertices with rk(C_u + I) = 0 contribute no clones.  Per-vertex completion
    is rational Gram-Schmidt of the coin's column space against the prescribed
    vectors.
    """
    g = assignment.graph
    w_ortho = _prepare_subspace(assignment, a, w_basis)
    if b is None:
        v_ortho = None
    else:
        if b == a:
            raise ReductionError("marked vertices must be distinct")
        vb = v_basis if v_basis is not None else w_basis
        v_ortho = _prepare_subspace(assignment, b, vb)
        if len(v_ortho) != len(w_ortho):
            raise ReductionError("dim W != dim V")

    columns: list[tuple[int, tuple[Fraction, ...]]] = []
    s_clones: list[int] = []
    t_clones: list[int] = []
    for u in range(g.n):
        coin = assignment.coin(u)
        prescribed: list[Vec] = []
        if u == a:
            prescribed = w_ortho
            s_clones.extend(range(len(columns), len(columns) + len(prescribed)))
        elif b is not None and u == b:
            prescribed = v_ortho
            t_clones.extend(range(len(columns), len(columns) + len(prescribed)))
        columns.extend((u, tuple(v)) for v in prescribed)
        completion = linalg.gram_schmidt(
            [list(col) for col in coin.basis], against=prescribed, on_dependent="drop")
        columns.extend((u, tuple(v)) for v in completion)
    if b is None:
        t_clones = list(s_clones)
    return CoinBasis(tuple(columns), tuple(s_clones), tuple(t_clones))


def _prepare_subspace(assignment: CoinAssignment, u: int, basis: list[Vec]) -> list[Vec]:
    coin = assignment.coin(u)
    vecs = [linalg.frac_vec(v) for v in basis]
    for v in vecs:
        if len(v) != coin.degree:
            raise ReductionError(
                f"subspace vector at vertex {u} has wrong length {len(v)}")
        if not coin.fixes(v):
            raise ReductionError(f"subspace at vertex {u} is not fixed by its coin")
    try:
        return linalg.gram_schmidt(vecs)
    except ValueError as e:
        raise ReductionError(f"dependent subspace basis at vertex {u}: {e}") from e


@dataclass
class HermitianReduction:
    """The pair (H_rat, delta_sq) plus clone bookkeeping.

    Invariants (exact): sym is symmetric, H_rat = sym * diag(delta_sq)^{-1},
    delta_sq[j] * H_rat[i][j] == delta_sq[i] * H_rat[j][i].
    """

    assignment: CoinAssignment
    basis: CoinBasis
    sym: Mat
    delta_sq: list[Fraction]
    clone_of: list[tuple[int, int]]  # clone index -> (vertex, column id at vertex)
    s: list[int]
    t: list[int]
    _h_rat: Mat | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.delta_sq)

    @property
    def h_rat(self) -> Mat:
        if self._h_rat is None:
            self._h_rat = [[self.sym[i][j] / self.delta_sq[j]
                            for j in range(self.size)] for i in range(self.size)]
        return self._h_rat

    def h_numeric(self) -> np.ndarray:
        d = np.sqrt(np.array([float(x) for x in self.delta_sq]))
        s = linalg.to_numpy(self.sym)
        return s / np.outer(d, d)

    def n_numeric(self) -> np.ndarray:
        """Arc-space matrix N with orthonormal columns (doubles only)."""
        from .walk import out_arc_slice

        g = self.assignment.graph
        n = np.zeros((g.num_arcs, self.size))
        for j, (u, vec) in enumerate(self.basis.columns):
            sl = out_arc_slice(g, u)
            col = np.array([float(x) for x in vec])
            n[sl, j] = col / np.linalg.norm(col)
        return n

    def clones_at(self, u: int) -> list[int]:
        return [j for j, (v, _) in enumerate(self.clone_of) if v == u]


def build_H(assignment: CoinAssignment, basis: CoinBasis) -> HermitianReduction:
    """Assemble sym = M^T R M and delta_sq = diag(M^T M) from a coin basis.

    The (j,k) entry couples clone j at u and clone k at u' ~ u with weight
    v_j[pos_u(u')] * v_k[pos_{u'}(u)]; non-adjacent (and equal) vertices give 0.
    """
    g = assignment.graph
    cols = basis.columns
    m = len(cols)
    per_vertex: dict[int, list[int]] = {}
    for j, (u, _) in enumerate(cols):
        per_vertex.setdefault(u, []).append(j)
    for u, ids in per_vertex.items():
        for i, j in [(i, j) for x, i in enumerate(ids) for j in ids[x + 1:]]:
            if linalg.dot(list(cols[i][1]), list(cols[j][1])) != 0:
                raise ReductionError(
                    f"coin basis at vertex {u} is not exactly orthogonal")
    sym = linalg.zeros(m, m)
    for j, (u, vj) in enumerate(cols):
        for k, (w, vk) in enumerate(cols):
            if k <= j or not g.adjacent(u, w):
                continue
            val = vj[g.sigma_pos(u, w)] * vk[g.sigma_pos(w, u)]
            sym[j][k] = val
            sym[k][j] = val
    delta_sq = [linalg.dot(list(v), list(v)) for _, v in cols]
    clone_ids: dict[int, int] = {}
    clone_of = []
    for u, _ in cols:
        clone_of.append((u, clone_ids.get(u, 0)))
        clone_ids[u] = clone_ids.get(u, 0) + 1
    return HermitianReduction(assignment=assignment, basis=basis, sym=sym,
                              delta_sq=delta_sq, clone_of=clone_of,
                              s=list(basis.s_clones), t=list(basis.t_clones))


def reduction_for(assignment: CoinAssignment, a: int, w_basis: list[Vec],
                  b: int | None = None, v_basis: list[Vec] | None = None
                  ) -> HermitianReduction:
    """Convenience: induced coin basis + build_H in one call."""
    return build_H(assignment, induced_coin_basis(assignment, a, w_basis, b, v_basis))


def chebyshev_apply(red: HermitianReduction, t: int) -> Mat:
    """Exact f_t(H_rat) via the Chebyshev recurrence T_{k+1} = 2 H T_k - T_{k-1}.

    Since f_t is a polynomial, f_t(H) = Delta^{-1} f_t(H_rat) Delta, so column
    checks against paired clones with equal delta_sq are exact on H_rat.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    n = red.size
    if t == 0:
        return linalg.identity(n)
    h = red.h_rat
    if t == 1:
        return [list(row) for row in h]
    prev = linalg.identity(n)
    cur = [list(row) for row in h]
    for _ in range(t - 1):
        nxt = linalg.mat_sub(
            [[2 * x for x in row] for row in linalg.mat_mul(h, cur)], prev)
        prev, cur = cur, nxt
    return cur


def exact_transfer_check(red: HermitianReduction, t: int, gamma: int) -> bool:
    """Exact test of f_t(H) B_S = gamma B_T (gamma in {+1, -1})."""
    if gamma not in (1, -1):
        raise ValueError("gamma must be +1 or -1")
    for aj, bj in zip(red.s, red.t):
        if red.delta_sq[aj] != red.delta_sq[bj]:
            raise ReductionError("paired S/T clones carry different delta_sq")
    ft = chebyshev_apply(red, t)
    for aj, bj in zip(red.s, red.t):
        for i in range(red.size):
            want = Fraction(gamma) if i == bj else Fraction(0)
            if ft[i][aj] != want:
                return False
    return True


# -- the (C_a, C_b)-blow-up ---------------------------------------------------


@dataclass
class BlowUp:
    """Basis-free reduction for a Grover walk with marked vertices a != b.

    Indices: cl(a) = 0..deg(a)-1, cl(b) = deg(a)..deg(a)+deg(b)-1, then the
    vertices of X minus {a,b} in ascending order.  sym holds the inner block
    matrix (projection blocks and A(X minus {a,b})); delta_sq holds 1 on the
    clones and deg(v) elsewhere, so G = diag(delta_sq)^{-1/2} sym (same)^{-1/2}.
    """

    assignment: CoinAssignment
    a: int
    b: int
    sym: Mat
    delta_sq: list[Fraction]
    rest_vertices: list[int]

    @property
    def deg_a(self) -> int:
        return self.assignment.graph.degree(self.a)

    @property
    def deg_b(self) -> int:
        return self.assignment.graph.degree(self.b)

    @property
    def cl_a(self) -> range:
        return range(self.deg_a)

    @property
    def cl_b(self) -> range:
        return range(self.deg_a, self.deg_a + self.deg_b)

    @property
    def rest(self) -> range:
        return range(self.deg_a + self.deg_b, len(self.delta_sq))

    def rest_index(self, v: int) -> int:
        return self.deg_a + self.deg_b + self.rest_vertices.index(v)

    def g_numeric(self) -> np.ndarray:
        d = np.sqrt(np.array([float(x) for x in self.delta_sq]))
        return linalg.to_numpy(self.sym) / np.outer(d, d)

    def f_numeric(self) -> np.ndarray:
        """F = Delta^{-1/2} [projection blocks]: maps clones into the rest block."""
        g = self.g_numeric()
        return g[np.ix_(list(self.rest), list(range(self.deg_a + self.deg_b)))]

    def b_numeric(self) -> np.ndarray:
        """B = Delta^{-1/2} A(X minus {a,b}) Delta^{-1/2}."""
        g = self.g_numeric()
        return g[np.ix_(list(self.rest), list(self.rest))]


def build_blowup(assignment: CoinAssignment, a: int, b: int) -> BlowUp:
    """The (C_a, C_b)-blow-up of the graph; requires a !~ b and Grover coins
    at every non-marked vertex."""
    g = assignment.graph
    if a == b:
        raise ReductionError("marked vertices must be distinct")
    if g.adjacent(a, b):
        raise AdjacentMarkedPair(
            "a ~ b: perfect subspace state transfer from a to b is guaranteed at t=1")
    for u in range(g.n):
        if u in (a, b):
            continue
        coin = assignment.coin(u)
        if coin.p_matrix() != [[Fraction(1, coin.degree)] * coin.degree
                               for _ in range(coin.degree)]:
            raise ReductionError(
                f"blow-up requires the Grover coin at non-marked vertex {u}")
    rest = [v for v in range(g.n) if v not in (a, b)]
    ka, kb = g.degree(a), g.degree(b)
    size = ka + kb + len(rest)
    sym = linalg.zeros(size, size)
    rest_pos = {v: ka + kb + i for i, v in enumerate(rest)}
    for (mark, offset) in ((a, 0), (b, ka)):
        p = assignment.coin(mark).p_matrix()
        for i in range(g.degree(mark)):
            for jpos, v in enumerate(g.sigma(mark)):
                val = p[i][jpos]
                if val:
                    sym[offset + i][rest_pos[v]] = val
                    sym[rest_pos[v]][offset + i] = val
    for u, v in g.edges:
        if u in (a, b) or v in (a, b):
            continue
        sym[rest_pos[u]][rest_pos[v]] = Fraction(1)
        sym[rest_pos[v]][rest_pos[u]] = Fraction(1)
    delta_sq = [Fraction(1)] * (ka + kb) + [Fraction(g.degree(v)) for v in rest]
    return BlowUp(assignment=assignment, a=a, b=b, sym=sym,
                  delta_sq=delta_sq, rest_vertices=rest)
