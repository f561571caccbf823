#!/usr/bin/env python3
"""Tour of the transfer families: each instance decided, checked, simulated.

K_{2,m} moves any coin-fixed subspace between its two degree-m vertices in 2
steps; the 4-regular circulants with antipodal marked vertices move a fixed
2-dimensional subspace in 4 steps; double cones over unions of length-4k
cycles move one alternating vector per cycle in 4 steps; GP(k,n) moves any
coin-fixed subspace between its glued endpoints in n-1 steps.
"""

import random

from sstwalk.families import (case_circulant, case_double_cone, case_gp,
                              case_k2m, case_octahedron_grover)

print(__doc__)

rng = random.Random(0)

print("K_{2,m}:")
for m in (1, 2, 3, 5, 8):
    print("  ", case_k2m(m).line())
    print("  ", case_k2m(m, rng=rng).line())

print("circulants X(2m, +-{c, d}), c + d = m:")
for m, c, d in ((3, 1, 2), (4, 1, 3), (5, 2, 3), (6, 1, 5)):
    res = case_circulant(m, c, d)
    print("  ", res.line(), f"(gamma = {res.verdict.gamma:+d})")

print("double cones:")
for ms in ([1, 2], [1, 1, 3]):
    res = case_double_cone(ms)
    print("  ", res.line(), f"(dim W = {res.dim_w})")

print("GP(k, n):")
for k, n in ((1, 3), (2, 4), (3, 5), (4, 6)):
    print("  ", case_gp(k, n).line())
print("  ", case_gp(3, 5, coin_rank=2, rng=rng).line(), "(rank-2 marked coin)")

print("octahedron with plain Grover coins (1-dimensional W, 6 steps):")
print("  ", case_octahedron_grover().line())
