"""Circuits, broken circuits and the broken circuit complex.

Edge sets are ``tuple[int, ...]`` of edge ids in increasing order.  The edge
order of the host :class:`Multigraph` is the total order used throughout.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import GraphError, Multigraph

EdgeSet = tuple[int, ...]


def format_edge_set(S) -> str:
    return "{" + ",".join(str(e) for e in sorted(S)) + "}"


def parse_edge_set(text: str) -> EdgeSet:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise GraphError(f"edge set must look like {{1,3}}, got {text!r}")
    body = body[1:-1].strip()
    try:
        return tuple(sorted(int(x) for x in body.split(","))) if body else ()
    except ValueError as exc:
        raise GraphError(f"bad edge set {text!r}") from exc


@lru_cache(maxsize=None)
def circuits(G: Multigraph) -> list[EdgeSet]:
    """Every cycle of ``G`` as a sorted edge-id tuple.

    Loops give 1-circuits and each pair of parallel edges a 2-circuit.  Longer
    cycles are found by a depth-first search rooted at their smallest vertex,
    walking only through larger vertices; each cycle is then met once in each
    direction and deduplicated by its edge set.
    """
    found: set[EdgeSet] = set()
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in G.vertices}
    for e, (u, v) in enumerate(G.edges, 1):
        if u == v:
            found.add((e,))
        else:
            adj[u].append((v, e))
            adj[v].append((u, e))

    for root in G.vertices:
        def walk(v: int, on_path: set[int], used: list[int]):
            for w, e in adj[v]:
                if e in used:
                    continue
                if w == root:
                    found.add(tuple(sorted(used + [e])))
                elif w > root and w not in on_path:
                    on_path.add(w)
                    used.append(e)
                    walk(w, on_path, used)
                    used.pop()
                    on_path.discard(w)

        walk(root, {root}, [])
    return sorted(found, key=lambda c: (len(c), c))


def broken_circuits(G: Multigraph) -> list[EdgeSet]:
    """Each circuit minus its largest edge, without duplicates."""
    return sorted({c[:-1] for c in circuits(G)}, key=lambda s: (len(s), s))


def contains_broken_circuit(G: Multigraph, S) -> bool:
    members = set(S)
    return any(members.issuperset(b) for b in broken_circuits(G))


def nbc_sets(G: Multigraph, size: int | None = None) -> list[EdgeSet]:
    """All edge sets containing no broken circuit, sorted by size then ids.

    Sets are grown in increasing edge order; once edge ``e`` is added only
    the broken circuits whose largest member is ``e`` can newly appear, so
    those are the only ones tested before descending.
    """
    by_top: dict[int, list[frozenset[int]]] = {}
    for b in broken_circuits(G):
        if not b:
            return []
        by_top.setdefault(b[-1], []).append(frozenset(b))

    out: list[EdgeSet] = []
    current: list[int] = []
    chosen: set[int] = set()

    def extend(start: int):
        if size is None or len(current) == size:
            out.append(tuple(current))
        if size is not None and len(current) >= size:
            return
        for e in range(start, G.q + 1):
            chosen.add(e)
            if not any(b <= chosen for b in by_top.get(e, ())):
                current.append(e)
                extend(e + 1)
                current.pop()
            chosen.discard(e)

    extend(1)
    return sorted(out, key=lambda s: (len(s), s))


def nbc_trees(G: Multigraph) -> list[EdgeSet]:
    """NBC sets of size ``d - 1``; each is checked to be a spanning tree."""
    if G.has_loop():
        raise GraphError("NBC spanning trees need a loop-free graph")
    if not G.is_connected():
        raise GraphError("NBC spanning trees need a connected graph")
    trees = nbc_sets(G, size=G.d - 1)
    for S in trees:
        sub = Multigraph(G.d, tuple(G.edges[e - 1] for e in S))
        assert sub.is_connected(), f"{format_edge_set(S)} does not span"
    return trees
