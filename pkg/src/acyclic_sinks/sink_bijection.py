"""Bijection between unique-sink acyclic orientations and NBC spanning trees.

Edges are processed in the broken-circuit order.  At step ``k`` the arc ``a``
on edge ``k`` is deleted when

* (I) adding the opposite arc would close a cycle, or
* (II) ``c(D) - a`` has exactly one sink and ``a`` disagrees with the normal
  orientation;

otherwise it is unoriented.  Every intermediate digraph is a :class:`Stage`
and satisfies the four conditions checked by :func:`is_valid_stage`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    GraphError,
    MixedDigraph,
    Multigraph,
    State,
    contract_unoriented,
    is_acyclic,
    reaches,
    sinks,
)
from .nbc import EdgeSet, contains_broken_circuit

REASON_I = "I"
REASON_II = "II"
UNORIENT = "u"


@dataclass(frozen=True)
class Stage:
    k: int
    D: MixedDigraph

    @property
    def host(self) -> Multigraph:
        return self.D.host


def _check_normal(G: Multigraph, normal: MixedDigraph) -> None:
    if normal.host != G or not normal.is_total:
        raise GraphError("normal orientation must be a total orientation of G")


def is_valid_stage(
    G: Multigraph, v0: int, normal: MixedDigraph, s: Stage
) -> tuple[bool, str | None]:
    """Check conditions (a)-(d); return ``(ok, letter of first failed condition)``."""
    _check_normal(G, normal)
    D = s.D
    if D.host != G or not 0 <= s.k <= G.q:
        return False, "a"
    head, tail = D.state[: s.k], D.state[s.k :]
    if any(st.oriented for st in head) or not all(st.oriented for st in tail):
        return False, "a"
    if not is_acyclic(D):
        return False, "b"
    if len(reaches(D, v0)) != G.d:
        return False, "c"
    if contains_broken_circuit(G, D.edges_in(State.UNORIENTED)):
        return False, "d"
    return True, None


def _require_valid(G, v0, normal, s: Stage) -> None:
    ok, why = is_valid_stage(G, v0, normal, s)
    if not ok:
        raise GraphError(f"stage k={s.k} {s.D.word} violates condition ({why})")


def forward_step(
    G: Multigraph, v0: int, normal: MixedDigraph, s: Stage
) -> tuple[Stage, str]:
    _require_valid(G, v0, normal, s)
    k = s.k + 1
    if k > G.q:
        raise GraphError("every edge has already been processed")
    D = s.D
    unoriented = D.with_state(k, State.UNORIENTED)
    if not is_acyclic(unoriented):
        return Stage(k, D.with_state(k, State.DELETED)), REASON_I
    deleted = D.with_state(k, State.DELETED)
    # a is still oriented in D, so c(D) - a = c(D - a)
    contracted, _ = contract_unoriented(deleted)
    if len(sinks(contracted)) == 1 and D.state[k - 1] != normal.state[k - 1]:
        return Stage(k, deleted), REASON_II
    return Stage(k, unoriented), UNORIENT


def inverse_step(G: Multigraph, v0: int, normal: MixedDigraph, s: Stage) -> Stage:
    _require_valid(G, v0, normal, s)
    k = s.k
    if k < 1:
        raise GraphError("stage 0 has no predecessor")
    D = s.D
    choices = [D.with_state(k, st) for st in (State.FORWARD, State.BACKWARD)]
    if D.state[k - 1] is State.DELETED:
        keep = [C for C in choices if is_acyclic(C)]
        tie_break = normal.state[k - 1].reversed()
    else:
        keep = [C for C in choices if len(reaches(C, v0)) == G.d]
        tie_break = normal.state[k - 1]
    if not keep:
        raise GraphError(f"no orientation of edge {k} yields a valid predecessor")
    if len(keep) == 2:
        keep = [C for C in keep if C.state[k - 1] is tie_break]
    return Stage(k - 1, keep[0])


def stages(
    G: Multigraph, v0: int, normal: MixedDigraph, D: MixedDigraph
) -> list[tuple[Stage, str | None]]:
    """The full forward run: ``[(D_0, None), (D_1, label_1), ..., (D_q, label_q)]``."""
    _check_input_orientation(G, v0, D)
    s = Stage(0, D)
    run: list[tuple[Stage, str | None]] = [(s, None)]
    for _ in range(G.q):
        s, label = forward_step(G, v0, normal, s)
        run.append((s, label))
    return run


def _check_input_orientation(G: Multigraph, v0: int, D: MixedDigraph) -> None:
    G._check_vertex(v0)
    if G.has_loop() or not G.is_connected():
        raise GraphError("the bijection needs a connected loop-free graph")
    if D.host != G or not D.is_total:
        raise GraphError("D must be a total orientation of G")
    if not is_acyclic(D) or sinks(D) != {v0}:
        raise GraphError(f"{D.word} is not acyclic with unique sink {v0}")


def forward(
    G: Multigraph, v0: int, normal: MixedDigraph, D: MixedDigraph
) -> tuple[EdgeSet, list[str]]:
    """Run all ``q`` steps; return the surviving edge set and the step labels."""
    _check_normal(G, normal)
    run = stages(G, v0, normal, D)
    final = run[-1][0].D
    S = tuple(final.edges_in(State.UNORIENTED))
    assert len(S) == G.d - 1 and not contains_broken_circuit(G, S)
    return S, [label for _, label in run[1:]]


def inverse(G: Multigraph, v0: int, normal: MixedDigraph, S) -> MixedDigraph:
    """Rebuild the orientation in ``A(G, v0)`` that :func:`forward` sends to ``S``."""
    _check_normal(G, normal)
    G._check_vertex(v0)
    if G.has_loop() or not G.is_connected():
        raise GraphError("the bijection needs a connected loop-free graph")
    S = tuple(sorted(S))
    if len(S) != G.d - 1 or len(set(S)) != len(S) or any(not 1 <= e <= G.q for e in S):
        raise GraphError(f"{S} is not a set of d-1 edge ids")
    if contains_broken_circuit(G, S):
        raise GraphError(f"{S} contains a broken circuit")
    members = set(S)
    final = MixedDigraph(
        G, tuple(State.UNORIENTED if e in members else State.DELETED for e in G.edge_ids)
    )
    s = Stage(G.q, final)
    while s.k > 0:
        s = inverse_step(G, v0, normal, s)
    return s.D
