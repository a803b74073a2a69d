"""Step through the sink-to-tree bijection on the worked example from the figure.

The graph has four vertices (1 left, 2 top, 3 right, 4 bottom) and five
edges, each written tail-first in its normal orientation.  Each stage
either orients an edge back out of the picture (label I or II) or leaves
it unoriented (label u); the unoriented edges at the end form an NBC tree.

Run:  python demos/nbc_bijection.py
"""

from acyclic_sinks import MixedDigraph, Multigraph, contract_unoriented, forward, inverse, nbc_trees, orientation, sinks
from acyclic_sinks.nbc import format_edge_set
from acyclic_sinks.sink_bijection import stages

G = Multigraph(4, ((2, 1), (3, 2), (4, 3), (2, 4), (4, 1)))
normal = MixedDigraph.all_forward(G)
D = orientation(G, "><<>>")
v0 = 1

print("start:", D.word, " sinks", sorted(sinks(D)))
for s, label in stages(G, v0, normal, D)[1:]:
    C, _ = contract_unoriented(s.D)
    print(f"  k={s.k}  {s.D.word}  step {label:2s}  contraction has {C.host.d} vertices, sinks {sorted(sinks(C))}")

S, trace = forward(G, v0, normal, D)
print("trace:", ",".join(trace), "  tree:", format_edge_set(S), "  back to", inverse(G, v0, normal, S).word)

print("\nwhole pairing for sink 1:")
for T in nbc_trees(G):
    print(f"  {format_edge_set(T):9s} <- {inverse(G, v0, normal, T).word}")
