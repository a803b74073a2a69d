"""Multigraphs, mixed digraphs and the two contraction operations.

Vertices are the integers ``1..d``.  Edges are stored as an ordered tuple of
endpoint pairs; the position of an edge in that tuple (1-based) is its id and
also its rank in the total order that defines broken circuits.  A loop is an
edge ``(v, v)``; repeated pairs are parallel edges.

A :class:`MixedDigraph` assigns each edge of a host multigraph one of four
states.  An unoriented edge stands for the pair of opposite arcs on that edge.
Total orientations (every edge FORWARD or BACKWARD) are plain mixed digraphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or invalid edge / vertex references."""


class State(enum.Enum):
    FORWARD = ">"
    BACKWARD = "<"
    UNORIENTED = "-"
    DELETED = "x"

    def reversed(self) -> "State":
        if self is State.FORWARD:
            return State.BACKWARD
        if self is State.BACKWARD:
            return State.FORWARD
        raise GraphError(f"state {self.name} has no reverse")

    @property
    def oriented(self) -> bool:
        return self is State.FORWARD or self is State.BACKWARD


@dataclass(frozen=True)
class Multigraph:
    d: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.d < 0:
            raise GraphError("vertex count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (1 <= u <= self.d and 1 <= v <= self.d):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 1..{self.d}")
        object.__setattr__(self, "edges", edges)

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.d + 1)

    @property
    def edge_ids(self) -> range:
        return range(1, self.q + 1)

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e - 1]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def incident(self, v: int) -> list[int]:
        """Ids of the edges touching ``v`` (a loop is listed once)."""
        return [i for i, (a, b) in enumerate(self.edges, 1) if v in (a, b)]

    def components(self) -> list[set[int]]:
        uf = _UnionFind(self.d)
        for u, v in self.edges:
            uf.union(u, v)
        return uf.groups()

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def canonical_key(self) -> tuple:
        """Order-insensitive key; two graphs with equal keys differ only in edge order."""
        return self.d, tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))

    def with_edge_order(self, order: Sequence[int]) -> "Multigraph":
        """Return the graph whose i-th edge is edge ``order[i]`` of this one."""
        if sorted(order) != list(self.edge_ids):
            raise GraphError("edge order must be a permutation of the edge ids")
        return Multigraph(self.d, tuple(self.edges[e - 1] for e in order))

    def _check_edge(self, e: int) -> None:
        if not 1 <= e <= self.q:
            raise GraphError(f"unknown edge id {e} (graph has {self.q} edges)")

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.d:
            raise GraphError(f"unknown vertex {v} (graph has {self.d} vertices)")


def delete_edge(G: Multigraph, e: int) -> Multigraph:
    """Remove edge ``e``; edges after it shift down one id."""
    G._check_edge(e)
    return Multigraph(G.d, G.edges[: e - 1] + G.edges[e:])


def contraction_map(d: int, u: int, v: int) -> dict[int, int]:
    """Vertex map of merging ``u`` and ``v`` into the smaller of the two.

    The larger label disappears and every label above it moves down by one,
    so merging ``d-1`` and ``d`` keeps the merged vertex at ``d-1``.
    """
    keep, gone = min(u, v), max(u, v)
    return {w: keep if w == gone else (w - 1 if w > gone else w) for w in range(1, d + 1)}


def contract_edge(G: Multigraph, e: int) -> Multigraph:
    """Contract the non-loop edge ``e``; parallel edges and new loops are kept."""
    u, v = G.endpoints(e)
    if u == v:
        raise GraphError(f"edge {e} is a loop and cannot be contracted")
    vmap = contraction_map(G.d, u, v)
    rest = G.edges[: e - 1] + G.edges[e:]
    return Multigraph(G.d - 1, tuple((vmap[a], vmap[b]) for a, b in rest))


def relabel_graph(G: Multigraph, delta: Sequence[int]) -> Multigraph:
    """Apply the vertex permutation ``v_i -> v_{delta[i-1]}``; edge order is kept."""
    _check_permutation(delta, G.d)
    return Multigraph(G.d, tuple((delta[u - 1], delta[v - 1]) for u, v in G.edges))


def _check_permutation(delta: Sequence[int], d: int) -> None:
    if sorted(delta) != list(range(1, d + 1)):
        raise GraphError(f"{tuple(delta)} is not a permutation of 1..{d}")


@dataclass(frozen=True)
class MixedDigraph:
    host: Multigraph
    state: tuple[State, ...]

    def __post_init__(self):
        state = tuple(self.state)
        if len(state) != self.host.q:
            raise GraphError(f"expected {self.host.q} edge states, got {len(state)}")
        object.__setattr__(self, "state", state)

    @classmethod
    def from_word(cls, host: Multigraph, word: str) -> "MixedDigraph":
        """Parse a word over ``> < - x`` (one character per edge)."""
        try:
            return cls(host, tuple(State(c) for c in word))
        except ValueError as exc:
            raise GraphError(f"bad orientation word {word!r}") from exc

    @classmethod
    def all_forward(cls, host: Multigraph) -> "MixedDigraph":
        return cls(host, (State.FORWARD,) * host.q)

    @property
    def word(self) -> str:
        return "".join(s.value for s in self.state)

    def __str__(self):
        return self.word

    @property
    def is_total(self) -> bool:
        return all(s.oriented for s in self.state)

    def with_state(self, e: int, s: State) -> "MixedDigraph":
        self.host._check_edge(e)
        state = list(self.state)
        state[e - 1] = s
        return MixedDigraph(self.host, tuple(state))

    def arc(self, e: int) -> tuple[int, int]:
        """Tail and head of oriented edge ``e``."""
        u, v = self.host.endpoints(e)
        s = self.state[e - 1]
        if s is State.FORWARD:
            return u, v
        if s is State.BACKWARD:
            return v, u
        raise GraphError(f"edge {e} is {s.name}, not oriented")

    def edges_in(self, *states: State) -> list[int]:
        return [i for i, s in enumerate(self.state, 1) if s in states]

    def out_arcs(self) -> dict[int, list[tuple[int, int]]]:
        """Adjacency ``tail -> [(head, edge id)]`` with unoriented edges both ways."""
        out: dict[int, list[tuple[int, int]]] = {v: [] for v in self.host.vertices}
        for i, ((u, v), s) in enumerate(zip(self.host.edges, self.state), 1):
            if s is State.FORWARD:
                out[u].append((v, i))
            elif s is State.BACKWARD:
                out[v].append((u, i))
            elif s is State.UNORIENTED:
                out[u].append((v, i))
                if u != v:
                    out[v].append((u, i))
        return out


Orientation = MixedDigraph


def orientation(host: Multigraph, word: str) -> MixedDigraph:
    """Total orientation from a ``>``/``<`` word; raises on any other symbol."""
    D = MixedDigraph.from_word(host, word)
    if not D.is_total:
        raise GraphError(f"{word!r} is not a total orientation")
    return D


def is_acyclic(D: MixedDigraph) -> bool:
    """True iff ``D`` has no cycle, counting two-cycles only across distinct edges.

    A cycle is a closed directed walk with distinct vertices and distinct
    edges.  The two arcs of one unoriented edge never form a cycle, but two
    parallel edges that can be traversed in opposite directions do, and any
    non-deleted loop is a cycle.

    Cyclic iff the unoriented edges contain an undirected cycle, or the
    digraph obtained by contracting the unoriented forest has a directed
    cycle (including a loop made from an arc inside one tree).
    """
    G = D.host
    uf = _UnionFind(G.d)
    for (u, v), s in zip(G.edges, D.state):
        if s is State.DELETED:
            continue
        if u == v:
            return False
        if s is State.UNORIENTED and not uf.union(u, v):
            return False
    succ: dict[int, set[int]] = {}
    for (u, v), s in zip(G.edges, D.state):
        if not s.oriented:
            continue
        tail, head = (u, v) if s is State.FORWARD else (v, u)
        a, b = uf.find(tail), uf.find(head)
        if a == b:
            return False
        succ.setdefault(a, set()).add(b)
    return not _has_directed_cycle(succ)


def _has_directed_cycle(succ: dict[int, set[int]]) -> bool:
    WHITE, GREY, BLACK = 0, 1, 2
    colour: dict[int, int] = {}
    for root in succ:
        if colour.get(root, WHITE) != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(succ.get(root, ())))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                c = colour.get(nxt, WHITE)
                if c == GREY:
                    return True
                if c == WHITE:
                    colour[nxt] = GREY
                    stack.append((nxt, iter(succ.get(nxt, ()))))
                    break
            else:
                colour[node] = BLACK
                stack.pop()
    return False


def sinks(D: MixedDigraph) -> frozenset[int]:
    """Vertices with no outgoing arc.

    Unoriented edges supply an outgoing arc at both ends and an oriented loop
    leaves its vertex, so neither kind of endpoint is a sink.  Isolated
    vertices are sinks.
    """
    out = D.out_arcs()
    return frozenset(v for v, arcs in out.items() if not arcs)


def reaches(D: MixedDigraph, target: int) -> frozenset[int]:
    """Vertices with a directed path to ``target`` (unoriented edges go both ways)."""
    D.host._check_vertex(target)
    pred: dict[int, list[int]] = {v: [] for v in D.host.vertices}
    for tail, arcs in D.out_arcs().items():
        for head, _ in arcs:
            pred[head].append(tail)
    seen = {target}
    stack = [target]
    while stack:
        for w in pred[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def contract_unoriented(D: MixedDigraph) -> tuple[MixedDigraph, dict[int, int]]:
    """Contract every unoriented edge of the acyclic mixed digraph ``D``.

    Returns ``c(D)`` together with the vertex map ``V(D) -> V(c(D))``.  The
    host of ``c(D)`` keeps every non-unoriented edge of ``D`` in its original
    relative order (deleted edges stay deleted); contracted classes are
    numbered by their smallest member.
    """
    if not is_acyclic(D):
        raise GraphError("cannot contract the unoriented part of a cyclic digraph")
    G = D.host
    uf = _UnionFind(G.d)
    for (u, v), s in zip(G.edges, D.state):
        if s is State.UNORIENTED:
            uf.union(u, v)
    reps = sorted({min(g) for g in uf.groups()})
    label = {r: i for i, r in enumerate(reps, 1)}
    vmap = {v: label[min(uf.group_of(v))] for v in G.vertices}
    kept = [(e, s) for e, s in zip(G.edges, D.state) if s is not State.UNORIENTED]
    host = Multigraph(len(reps), tuple((vmap[u], vmap[v]) for (u, v), _ in kept))
    C = MixedDigraph(host, tuple(s for _, s in kept))
    assert is_acyclic(C) and not C.edges_in(State.UNORIENTED)
    return C, vmap


class _UnionFind:
    def __init__(self, d: int):
        self.parent = list(range(d + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def groups(self) -> list[set[int]]:
        out: dict[int, set[int]] = {}
        for v in range(1, len(self.parent)):
            out.setdefault(self.find(v), set()).add(v)
        return list(out.values())

    def group_of(self, v: int) -> set[int]:
        r = self.find(v)
        return {w for w in range(1, len(self.parent)) if self.find(w) == r}


def parse_graph(text: str | Iterable[str]) -> Multigraph:
    """Read the line format ``d <n>`` followed by ``e <u> <v>`` lines."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    d = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "d" and len(parts) == 2 and d is None:
                d = int(parts[1])
                continue
            if parts[0] == "e" and len(parts) == 3 and d is not None:
                edges.append((int(parts[1]), int(parts[2])))
                continue
        except ValueError:
            pass
        raise GraphError(f"line {lineno}: cannot parse {raw!r}")
    if d is None:
        raise GraphError("missing 'd <vertex-count>' line")
    return Multigraph(d, tuple(edges))


def format_graph(G: Multigraph) -> str:
    return "".join([f"d {G.d}\n"] + [f"e {u} {v}\n" for u, v in G.edges])
