"""Deterministic stream of small test graphs.

Connected simple graphs come from the networkx graph atlas (every graph on at
most seven vertices, one per isomorphism class, in a fixed order).  Vertex
and edge orders are taken from the atlas as-is, so the stream is identical
across runs.
"""

from __future__ import annotations

from typing import Iterator

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from .graph import Multigraph

# Graphs with parallel edges; edge lists are 1-indexed and in broken-circuit order.
MULTIGRAPH_EXTRAS: tuple[tuple[str, Multigraph], ...] = (
    ("double-edge", Multigraph(2, ((1, 2), (1, 2)))),
    ("triple-edge", Multigraph(2, ((1, 2), (1, 2), (1, 2)))),
    ("P3-doubled-first", Multigraph(3, ((1, 2), (1, 2), (2, 3)))),
    ("P3-doubled-last", Multigraph(3, ((1, 2), (2, 3), (2, 3)))),
    ("K3-doubled", Multigraph(3, ((1, 2), (2, 3), (1, 3), (1, 2)))),
    ("K3-parallel-first", Multigraph(3, ((1, 3), (1, 3), (1, 2), (2, 3)))),
    ("C4-doubled", Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4), (2, 3)))),
    ("K4-minus-doubled", Multigraph(4, ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 3)))),
    ("theta-multi", Multigraph(4, ((1, 2), (1, 2), (2, 3), (3, 4), (4, 1), (1, 3)))),
)


def from_networkx(g: nx.Graph) -> Multigraph:
    order = sorted(g.nodes)
    index = {v: i for i, v in enumerate(order, 1)}
    edges = sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges)
    return Multigraph(len(order), tuple(edges))


def connected_graphs(max_d: int, max_q: int | None = None) -> Iterator[Multigraph]:
    """Connected simple graphs with ``1 <= d <= max_d`` (max 7), up to isomorphism."""
    if max_d > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_d or not nx.is_connected(g):
            continue
        if max_q is not None and g.number_of_edges() > max_q:
            continue
        yield from_networkx(g)


def trees(d: int) -> Iterator[Multigraph]:
    if d == 1:
        yield Multigraph(1)
        return
    for t in nx.nonisomorphic_trees(d):
        yield from_networkx(t)


def cycle(d: int) -> Multigraph:
    return Multigraph(d, tuple((i, i % d + 1) for i in range(1, d + 1)))


def generate_corpus(
    max_d: int, max_q: int | None = None, include_multigraphs: bool = False
) -> Iterator[tuple[str, Multigraph]]:
    """Yield ``(name, graph)`` pairs: atlas graphs, then multigraph extras if asked."""
    for i, G in enumerate(connected_graphs(max_d, max_q)):
        yield f"atlas-d{G.d}-q{G.q}-{i}", G
    if include_multigraphs:
        for name, G in MULTIGRAPH_EXTRAS:
            if G.d <= max_d and (max_q is None or G.q <= max_q):
                yield name, G


def default_corpus() -> list[tuple[str, Multigraph]]:
    """Every connected graph with ``d <= 5``, the trees and the cycle on six vertices,
    and the multigraph extras."""
    out = list(generate_corpus(5, include_multigraphs=True))
    out += [(f"tree6-{i}", t) for i, t in enumerate(trees(6))]
    out.append(("cycle6", cycle(6)))
    return out
