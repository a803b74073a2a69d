"""The chromatic symmetric function in noncommuting variables, and what its
e-expansion says about sinks.

Run:  python demos/ncsym_of_a_graph.py
"""

from math import factorial

from acyclic_sinks import (
    Multigraph,
    SetPartition,
    Y_delcon,
    chromatic_delcon,
    commutativize,
    sink_distribution,
    specialize_ones,
    to_e_basis,
    unique_sink,
)

P3 = Multigraph(3, ((1, 2), (2, 3)))
print("Y(P3) =", Y_delcon(P3))
print("      =", to_e_basis(Y_delcon(P3)))

G = Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4), (1, 3)))
Y = to_e_basis(Y_delcon(G))
top = Y[SetPartition.top(G.d)]
print("\nC4 plus a chord")
print("  coefficient of e on the one-block partition:", top)
print("  (d-1)! times it:", factorial(G.d - 1) * top, " unique-sink orientations at 1:", len(unique_sink(G, 1)))

X = commutativize(Y)
print("  commutative image:", X)
print("  summed by length :", {j: int(c) for j, c in sorted(X.sum_by_length().items())})
print("  orientations by number of sinks:", sink_distribution(G))

p = chromatic_delcon(G)
print("  set n variables to 1:", [int(specialize_ones(Y, n)) for n in range(6)])
print("  chromatic values     :", [p(n) for n in range(6)])
