"""Reflection coins and per-vertex coin assignments.

A reflection coin at a degree-d vertex is C_u = 2P_u - I for an exact rational
symmetric projection P_u on C^{sigma_u}.  Coins are stored by their projection
plus an exact orthogonal (unnormalized) basis of col(P_u); the basis is what
the Hermitian reduction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .graphs import Graph
from .linalg import Mat, Vec


class CoinError(ValueError):
    pass


@dataclass(frozen=True)
class ReflectionCoin:
    """Exact rational reflection coin: projection P with P^2 = P = P^T."""

    degree: int
    projection: tuple[tuple[Fraction, ...], ...]
    basis: tuple[tuple[Fraction, ...], ...]  # orthogonal basis of col(P), may be empty
    vertex: int | None = None

    def __post_init__(self):
        p = self.p_matrix()
        if linalg.transpose(p) != p:
            raise CoinError("coin projection is not symmetric")
        if linalg.mat_mul(p, p) != p:
            raise CoinError("coin projection is not idempotent")
        trace = sum(p[i][i] for i in range(self.degree))
        if trace != len(self.basis):
            raise CoinError("coin basis does not span col(P): rank tr(P) = "
                            f"{trace}, basis has {len(self.basis)} columns")
        for i, u in enumerate(self.basis):
            if linalg.mat_vec(p, list(u)) != list(u):
                raise CoinError("coin basis vector not fixed by the projection")
            for v in self.basis[i + 1:]:
                if linalg.dot(list(u), list(v)) != 0:
                    raise CoinError("coin basis is not orthogonal")

    def p_matrix(self) -> Mat:
        return [list(row) for row in self.projection]

    def c_matrix(self) -> Mat:
        """The reflection C = 2P - I, exact."""
        c = [[2 * x for x in row] for row in self.projection]
        for i in range(self.degree):
            c[i][i] -= 1
        return c

    @property
    def rank(self) -> int:
        return len(self.basis)

    def fixes(self, w: Vec) -> bool:
        """Exact test that C w = w, i.e. P w = w."""
        return linalg.mat_vec(self.p_matrix(), w) == list(w)

    def at(self, vertex: int) -> "ReflectionCoin":
        return ReflectionCoin(self.degree, self.projection, self.basis, vertex)


def _freeze(m: Mat) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in m)


def grover_coin(degree: int) -> ReflectionCoin:
    """The Grover coin (2/d)J - I: reflection about the all-ones vector."""
    if degree < 1:
        raise CoinError("Grover coin needs degree >= 1")
    p = [[Fraction(1, degree)] * degree for _ in range(degree)]
    ones = tuple(Fraction(1) for _ in range(degree))
    return ReflectionCoin(degree, _freeze(p), (ones,))


def negative_identity_coin(degree: int) -> ReflectionCoin:
    """C = -I: the rank-0 reflection (no clones)."""
    return ReflectionCoin(degree, _freeze(linalg.zeros(degree, degree)), ())


def reflection_about(basis_vectors: list[Vec], vertex: int | None = None) -> ReflectionCoin:
    """Reflection about the span of the given rational vectors.

    The vectors are orthogonalized exactly (unnormalized Gram-Schmidt);
    dependent inputs are an error, not silently dropped.
    """
    if not basis_vectors:
        raise CoinError("reflection_about needs at least one basis vector")
    degree = len(basis_vectors[0])
    if any(len(v) != degree for v in basis_vectors):
        raise CoinError("basis vectors must share a common dimension")
    try:
        ortho = linalg.gram_schmidt([linalg.frac_vec(v) for v in basis_vectors])
    except ValueError as e:
        raise CoinError(f"rank-deficient coin basis: {e}") from e
    p = linalg.zeros(degree, degree)
    for b in ortho:
        nb = linalg.dot(b, b)
        for i in range(degree):
            if b[i]:
                for j in range(degree):
                    p[i][j] += b[i] * b[j] / nb
    return ReflectionCoin(degree, _freeze(p), _freeze(ortho), vertex)


class CoinAssignment:
    """One reflection coin per vertex of a graph; immutable once built."""

    def __init__(self, graph: Graph, coins: dict[int, ReflectionCoin]):
        self.graph = graph
        full: dict[int, ReflectionCoin] = {}
        for u in range(graph.n):
            coin = coins.get(u)
            if coin is None:
                raise CoinError(f"vertex {u} has no coin")
            if coin.degree != graph.degree(u):
                raise CoinError(
                    f"coin at vertex {u} has size {coin.degree}, degree is {graph.degree(u)}")
            full[u] = coin.at(u)
        self.coins = full

    @classmethod
    def all_grover(cls, graph: Graph) -> "CoinAssignment":
        return cls(graph, {u: grover_coin(graph.degree(u)) for u in range(graph.n)})

    @classmethod
    def grover_with_marked(cls, graph: Graph, a: int, b: int,
                           coin_a: ReflectionCoin,
                           coin_b: ReflectionCoin | None = None) -> "CoinAssignment":
        """Grover coins everywhere except the marked pair."""
        coins = {u: grover_coin(graph.degree(u)) for u in range(graph.n)}
        coins[a] = coin_a
        coins[b] = coin_b if coin_b is not None else coin_a
        return cls(graph, coins)

    def coin(self, u: int) -> ReflectionCoin:
        return self.coins[u]

    def total_rank(self) -> int:
        """Total clone count: sum of rk(C_u + I)."""
        return sum(c.rank for c in self.coins.values())


def parse_coins(text: str, graph: Graph) -> CoinAssignment:
    """Parse the coin spec format.

    One line per non-default vertex: ``coin <v> grover`` or
    ``coin <v> basis <r> <r*deg rationals>`` (row-major basis vectors).
    Vertices not mentioned get the Grover coin.
    """
    coins = {u: grover_coin(graph.degree(u)) for u in range(graph.n)}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "coin" or len(parts) < 3:
            raise CoinError(f"bad coin line: {line!r}")
        v = int(parts[1])
        if not 0 <= v < graph.n:
            raise CoinError(f"coin vertex {v} out of range")
        deg = graph.degree(v)
        if parts[2] == "grover":
            coins[v] = grover_coin(deg)
        elif parts[2] == "minus_identity":
            coins[v] = negative_identity_coin(deg)
        elif parts[2] == "basis":
            r = int(parts[3])
            entries = [Fraction(tok) for tok in parts[4:]]
            if len(entries) != r * deg:
                raise CoinError(
                    f"coin at {v}: expected {r * deg} entries, got {len(entries)}")
            rows = [entries[i * deg:(i + 1) * deg] for i in range(r)]
            coins[v] = reflection_about(rows, v)
        else:
            raise CoinError(f"unknown coin kind {parts[2]!r}")
    return CoinAssignment(graph, coins)
