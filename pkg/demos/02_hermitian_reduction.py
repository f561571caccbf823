#!/usr/bin/env python3
"""From the walk to a small Hermitian matrix, without leaving the rationals.

Fixing an exact orthogonal coin basis M (one block of columns per vertex)
turns the walk into the matrix H = D^{-1/2} (M^T R M) D^{-1/2} on "clones" of
vertices.  H itself is irrational, but it is diagonally similar to the
rational H_rat = (M^T R M) D^{-1}, and integer powers of the walk satisfy
N* U^t N = f_t(H) with f_t the Chebyshev polynomial of the first kind.  All
transfer questions become exact linear algebra over Q.
"""

import numpy as np

from sstwalk import (CoinAssignment, build_graph, chebyshev_apply,
                     reduction_for, walk_unitary)

print(__doc__)

# all-Grover coins reduce to the normalized adjacency matrix: Petersen graph
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
petersen = build_graph(outer + inner + spokes, 10)
asn = CoinAssignment.all_grover(petersen)
red = reduction_for(asn, 0, [[1, 1, 1]])
print("Petersen, all Grover: H_rat = A/3?",
      all(red.h_rat[u][v] * 3 == (1 if petersen.adjacent(u, v) else 0)
          for u in range(10) for v in range(10)))
print("delta_sq (clone norms squared):", [str(x) for x in red.delta_sq[:5]], "...")

# the spectral bridge, numerically
u = walk_unitary(asn)
n = red.n_numeric()
lam, vecs = np.linalg.eigh(red.h_numeric())
for t in (1, 3, 6):
    ft = vecs @ np.diag(np.cos(t * np.arccos(np.clip(lam, -1, 1)))) @ vecs.T
    err = np.max(np.abs(n.T @ np.linalg.matrix_power(u, t) @ n - ft))
    print(f"  || N* U^{t} N - f_{t}(H) ||_max = {err:.2e}")

# exact Chebyshev evaluation stays rational
f2 = chebyshev_apply(red, 2)
print("\nf_2(H_rat) sample entries:", str(f2[0][0]), str(f2[0][1]), str(f2[0][5]))
print("eigenvalues of H lie in [-1, 1]:",
      float(np.min(lam)), "..", float(np.max(lam)))
