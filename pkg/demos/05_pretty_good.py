#!/usr/bin/env python3
"""Pretty good transfer on double cones: close to perfect, never exact.

Cone two marked vertices over a k-regular graph with a singular adjacency
matrix and reflect about (part of) its kernel.  The eigenvalue support of the
kernel subspace is {0, +-c} with c^2 = 2/(k+2).  Perfect transfer needs
arccos(c) to be a rational multiple of pi, which for rational c^2 happens
only at c^2 in {0, 1/4, 1/2, 3/4, 1}, i.e. k in {0, 2, 6}.  Away from those,
transfer is only approached: fidelity creeps toward 1 along sparse times.
"""

from sstwalk import CoinAssignment, reduction_for, reflection_about
from sstwalk.families import case_pretty_good_cone, fidelity_series
from sstwalk.graphs import (complete_multipartite, cycle_graph,
                            double_cone_over, prism_graph)
import sstwalk.linalg as linalg
from fractions import Fraction

print(__doc__)

for base, name, k in ((cycle_graph(4), "C4 (k=2)", 2),
                      (prism_graph(), "triangular prism (k=3)", 3),
                      (complete_multipartite([3, 3, 3]), "K_{3,3,3} (k=6)", 6)):
    res = case_pretty_good_cone(base, name=name)
    facs = ", ".join(f.serialize() for f in res.support_factors)
    print(f"{name}: support factors [{facs}] -> "
          f"{'pretty good' if res.accepted else 'excluded (geodetic angle)'}")
    if res.accepted:
        print(f"   best fidelity {res.best_fidelity:.9f} at t = {res.best_time}")

# watch the record fidelity climb for the prism cone
base = prism_graph()
adj = [[Fraction(1 if base.adjacent(u, v) else 0) for v in range(6)]
       for u in range(6)]
kernel = linalg.kernel_basis(adj)
graph, a, b = double_cone_over(base)
asn = CoinAssignment.grover_with_marked(graph, a, b,
                                        reflection_about([list(v) for v in kernel]))
red = reduction_for(asn, a, kernel, b)
series = fidelity_series(red, 3000)
print("\nrecord fidelities over the first 3000 steps of the prism cone:")
best = 0.0
for t, f in enumerate(series):
    if f > best + 1e-12:
        best = float(f)
        if best > 0.5:
            print(f"   t={t:5d}  fidelity {best:.9f}")
print("\n(no finite t reaches 1 exactly: arccos sqrt(2/5) is an irrational "
      "multiple of pi)")
