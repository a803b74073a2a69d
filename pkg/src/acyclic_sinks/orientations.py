"""Acyclic orientations, unique-sink orientations and sink statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .graph import (
    GraphError,
    MixedDigraph,
    Multigraph,
    State,
    contract_edge,
    contraction_map,
    delete_edge,
    is_acyclic,
    sinks,
)

_DIRS = (State.FORWARD, State.BACKWARD)


def iter_orientations(G: Multigraph) -> Iterator[MixedDigraph]:
    """All ``2**q`` total orientations, as binary words with FORWARD = 0."""
    for state in product(_DIRS, repeat=G.q):
        yield MixedDigraph(G, state)


def iter_acyclic(G: Multigraph) -> Iterator[MixedDigraph]:
    if G.has_loop():
        return
    for D in iter_orientations(G):
        if is_acyclic(D):
            yield D


@lru_cache(maxsize=None)
def all_acyclic(G: Multigraph) -> tuple[MixedDigraph, ...]:
    return tuple(iter_acyclic(G))


def unique_sink(G: Multigraph, v0: int) -> tuple[MixedDigraph, ...]:
    """Acyclic orientations whose only sink is ``v0``."""
    G._check_vertex(v0)
    target = frozenset((v0,))
    return tuple(D for D in all_acyclic(G) if sinks(D) == target)


def sink_distribution(G: Multigraph) -> dict[int, int]:
    counts = Counter(len(sinks(D)) for D in all_acyclic(G))
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class Tagged:
    """An element of the disjoint union ``A(G - e, v0) + A(G / e, v0)``.

    ``branch`` is ``"deleted"`` or ``"contracted"``; ``sink`` is the label of
    ``v0`` inside ``orientation.host``.
    """

    branch: str
    orientation: MixedDigraph
    sink: int


def _check_pivot(G: Multigraph, v0: int, e: int) -> int:
    G._check_vertex(v0)
    u, w = G.endpoints(e)
    if u == w:
        raise GraphError(f"edge {e} is a loop")
    if v0 not in (u, w):
        raise GraphError(f"edge {e} is not incident with vertex {v0}")
    return w if u == v0 else u


def delcon_bijection(G: Multigraph, v0: int, e: int, D: MixedDigraph) -> Tagged:
    """Send ``D`` in ``A(G, v0)`` to ``D - a`` if that keeps ``v0`` the only sink, else ``D / a``.

    ``e`` joins ``v0`` to some ``u``, and ``a`` is its arc ``u -> v0`` in ``D``.
    In the contracted graph the merged vertex plays the role of ``v0``.
    """
    u = _check_pivot(G, v0, e)
    if D.host != G or not D.is_total:
        raise GraphError("D must be a total orientation of G")
    if not is_acyclic(D) or sinks(D) != {v0}:
        raise GraphError("D is not an acyclic orientation with unique sink v0")
    if D.arc(e) != (u, v0):
        raise GraphError(f"edge {e} must point into v0 in a unique-sink orientation")
    rest = D.state[: e - 1] + D.state[e:]
    without = MixedDigraph(delete_edge(G, e), rest)
    if sinks(without) == {v0}:
        return Tagged("deleted", without, v0)
    vmap = contraction_map(G.d, u, v0)
    H = contract_edge(G, e)
    return Tagged("contracted", MixedDigraph(H, rest), vmap[v0])


def delcon_inverse(G: Multigraph, v0: int, e: int, item: Tagged) -> MixedDigraph:
    """Re-insert the arc ``u -> v0`` on edge ``e``."""
    u = _check_pivot(G, v0, e)
    if item.branch == "deleted":
        expected_host, expected_sink = delete_edge(G, e), v0
    elif item.branch == "contracted":
        expected_host, expected_sink = contract_edge(G, e), contraction_map(G.d, u, v0)[v0]
    else:
        raise GraphError(f"unknown branch {item.branch!r}")
    R = item.orientation
    if R.host != expected_host or item.sink != expected_sink:
        raise GraphError("tagged orientation does not live on the expected graph")
    if not R.is_total or not is_acyclic(R) or sinks(R) != {expected_sink}:
        raise GraphError("tagged orientation is not acyclic with the expected unique sink")
    a = State.FORWARD if G.endpoints(e) == (u, v0) else State.BACKWARD
    return MixedDigraph(G, R.state[: e - 1] + (a,) + R.state[e - 1 :])
