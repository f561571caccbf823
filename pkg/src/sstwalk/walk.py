"""Double-precision simulation of the arc-reversal walk U = RC.

States live on arcs in the graph's canonical order.  The step applies the
block-diagonal coin (one dense block per vertex, acting on the contiguous
slice of outgoing arcs) followed by the arc-reversal permutation.  No
renormalization is performed: norm drift is itself a diagnostic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .coins import CoinAssignment
from .graphs import Graph


def out_arc_slice(graph: Graph, u: int) -> slice:
    """Outgoing arcs of u form a contiguous slice in lexicographic arc order."""
    start = sum(graph.degree(w) for w in range(u))
    return slice(start, start + graph.degree(u))


def reversal_permutation(graph: Graph) -> np.ndarray:
    return np.array([graph.arc_index[(v, u)] for u, v in graph.arcs], dtype=int)


def coin_blocks(assignment: CoinAssignment) -> list[np.ndarray]:
    return [np.array([[float(x) for x in row] for row in assignment.coin(u).c_matrix()])
            for u in range(assignment.graph.n)]


def walk_unitary(assignment: CoinAssignment) -> np.ndarray:
    """Dense U = RC over the arc space."""
    return walk_unitary_from_blocks(assignment.graph, coin_blocks(assignment))


def walk_unitary_from_blocks(graph: Graph, blocks: list[np.ndarray]) -> np.ndarray:
    """U = RC from explicit per-vertex coin blocks (one deg(u) x deg(u) array
    per vertex).

    This is the simulation-only escape hatch for coins outside the exact
    pipeline, e.g. complex reflections; blocks must be unitary but are not
    otherwise validated.
    """
    g = graph
    m = g.num_arcs
    dtype = complex if any(np.iscomplexobj(b) for b in blocks) else float
    c = np.zeros((m, m), dtype=dtype)
    for u in range(g.n):
        b = np.asarray(blocks[u])
        if b.shape != (g.degree(u), g.degree(u)):
            raise ValueError(f"coin block at vertex {u} has shape {b.shape}, "
                             f"expected {(g.degree(u), g.degree(u))}")
        sl = out_arc_slice(g, u)
        c[sl, sl] = b
    rev = reversal_permutation(g)
    return c[rev, :]


def coin_state(assignment: CoinAssignment, a: int, w, normalize: bool = True) -> np.ndarray:
    """The arc-space coin state x_a(w); requires C_a w = w up to 1e-12."""
    g = assignment.graph
    wv = np.asarray([complex(x) for x in w])
    if wv.shape != (g.degree(a),):
        raise ValueError(f"weight vector must have length deg({a}) = {g.degree(a)}")
    p = np.array([[float(x) for x in row] for row in assignment.coin(a).p_matrix()])
    if np.linalg.norm(p @ wv - wv) > 1e-12 * max(np.linalg.norm(wv), 1e-30):
        raise ValueError("weight vector is not fixed by the coin at a")
    state = np.zeros(g.num_arcs, dtype=complex)
    state[out_arc_slice(g, a)] = wv
    if normalize:
        nrm = np.linalg.norm(state)
        if nrm == 0:
            raise ValueError("zero coin state")
        state = state / nrm
    return state


def walk_apply(assignment: CoinAssignment, state: np.ndarray, t: int) -> np.ndarray:
    """U^t applied by t sparse (blockwise) applications of C then R."""
    g = assignment.graph
    x = np.asarray(state, dtype=complex)
    if x.shape != (g.num_arcs,):
        raise ValueError(f"state must have length {g.num_arcs}")
    if t < 0:
        raise ValueError("t must be nonnegative")
    blocks = coin_blocks(assignment)
    slices = [out_arc_slice(g, u) for u in range(g.n)]
    rev = reversal_permutation(g)
    for _ in range(t):
        y = np.empty_like(x)
        for u in range(g.n):
            sl = slices[u]
            y[sl] = blocks[u] @ x[sl]
        x = y[rev]
    return x


def orthonormal_columns(vectors) -> list[np.ndarray]:
    """Numeric orthonormal basis for the span of the given vectors.

    Rational inputs are orthogonalized exactly first (no cancellation error),
    so the output stays inside exact subspaces to machine precision; anything
    else falls back to QR.
    """
    vecs = list(vectors)
    if all(isinstance(x, (int, Fraction)) for v in vecs for x in v):
        from . import linalg

        ortho = linalg.gram_schmidt([linalg.frac_vec(v) for v in vecs],
                                    on_dependent="drop")
        out = []
        for v in ortho:
            col = np.array([float(x) for x in v])
            out.append(col / np.linalg.norm(col))
        return out
    mat = np.array([[float(x) for x in v] for v in vecs], dtype=float).T
    q, r = np.linalg.qr(mat)
    keep = [j for j in range(r.shape[0]) if abs(r[j, j]) > 1e-12]
    return [q[:, j] for j in keep]


def transfer_fidelity(assignment: CoinAssignment, a: int, b: int, w_basis, t: int
                      ) -> tuple[float, complex]:
    """Pointwise W-transfer fidelity at step t, plus the estimated phase.

    ``w_basis`` spans W as rational/float vectors over sigma_a; the same
    coordinates are reused over sigma_b (positional identification, the
    identity on the shared neighbor set for twins).  Returns
    min_j Re(conj(gamma) <x_b(w_j), U^t x_a(w_j)>) with gamma estimated from
    the first basis vector, clamped to [0, 1].  A value of 1 means pointwise
    transfer numerically; subspace transfer with mismatched phases scores
    strictly below 1.
    """
    ws = orthonormal_columns(w_basis)
    if not ws:
        raise ValueError("empty subspace")
    if assignment.graph.degree(a) != assignment.graph.degree(b):
        raise ValueError("positional identification needs deg(a) = deg(b)")
    gamma = complex(1.0)
    worst = 1.0
    for j, w in enumerate(ws):
        x = coin_state(assignment, a, w)
        y = coin_state(assignment, b, w)
        z = walk_apply(assignment, x, t)
        overlap = np.vdot(y, z)
        if j == 0:
            gamma = overlap / abs(overlap) if abs(overlap) > 1e-12 else complex(1.0)
        worst = min(worst, float((np.conj(gamma) * overlap).real))
    return max(0.0, min(1.0, worst)), gamma
