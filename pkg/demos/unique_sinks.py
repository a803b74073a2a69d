"""Orientations with a prescribed unique sink, and how they split over an edge.

Run:  python demos/unique_sinks.py
"""

from acyclic_sinks import Multigraph, chromatic_delcon, delcon_bijection, sink_distribution, unique_sink
from acyclic_sinks.chromatic import coefficient

# A triangle with a doubled edge and a pendant vertex.
G = Multigraph(4, ((1, 2), (1, 2), (2, 3), (1, 3), (3, 4)))
a1 = coefficient(chromatic_delcon(G), 1)
print("linear coefficient of chi:", a1)

for v in G.vertices:
    words = [D.word for D in unique_sink(G, v)]
    print(f"  sink {v}: {len(words)} orientations  {' '.join(words)}")

print("\nall acyclic orientations by number of sinks:", sink_distribution(G))

# Split the orientations with sink 1 along edge 4 = {1,3}.  An orientation
# lands on the deleted side when removing the edge leaves 1 the only sink.
v0, e = 1, 4
print(f"\nsplitting A(G, {v0}) over edge {e}:")
for D in unique_sink(G, v0):
    item = delcon_bijection(G, v0, e, D)
    print(f"  {D.word}  ->  {item.branch:10s} {item.orientation.word or '(no edges)'}   sink {item.sink}")
