"""Cross-checks between the independent routes, one graph at a time.

Each check returns a :class:`Check` carrying a witness string when it fails,
so a falsified identity points straight at the offending object.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .chromatic import chromatic_bruteforce, chromatic_delcon, chromatic_whitney, coefficient
from .graph import MixedDigraph, Multigraph, State, contract_edge, contraction_map, delete_edge
from .nbc import format_edge_set, nbc_trees
from .ncsf import Y_delcon, commutativize, leading_e_coefficient
from .orientations import (
    all_acyclic,
    delcon_bijection,
    delcon_inverse,
    sink_distribution,
    unique_sink,
)
from .sink_bijection import forward, inverse, is_valid_stage, stages


@dataclass
class Check:
    name: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.witness}" if self.witness else "")


def random_normal(G: Multigraph, seed: int) -> MixedDigraph:
    rng = random.Random(seed)
    return MixedDigraph(G, tuple(rng.choice((State.FORWARD, State.BACKWARD)) for _ in G.edges))


def check_acyclic_count(G: Multigraph) -> Check:
    n_acyclic = len(all_acyclic(G))
    value = abs(chromatic_delcon(G)(-1))
    return Check("acyclic-count", n_acyclic == value, "" if n_acyclic == value else f"|A(G)|={n_acyclic}, |chi(-1)|={value}")


def check_unique_sink_count(G: Multigraph, sinks_to_check) -> Check:
    a1 = abs(coefficient(chromatic_delcon(G), 1))
    for v0 in sinks_to_check:
        n = len(unique_sink(G, v0))
        if n != a1:
            return Check("unique-sink-count", False, f"v0={v0}: |A(G,v0)|={n}, |a1|={a1}")
    return Check("unique-sink-count", True)


def check_whitney(G: Multigraph) -> Check:
    p = chromatic_delcon(G)
    if not G.has_loop():
        w = chromatic_whitney(G)
        if w != p:
            return Check("whitney", False, f"whitney={w}, delcon={p}")
    for n in range(G.d + 1):
        b = chromatic_bruteforce(G, n)
        if b != p(n):
            return Check("whitney", False, f"n={n}: brute force {b}, polynomial {p(n)}")
    return Check("whitney", True)


def check_delcon_split(G: Multigraph, sinks_to_check) -> Check:
    for v0 in sinks_to_check:
        pool = unique_sink(G, v0)
        for e in G.incident(v0):
            if G.is_loop(e):
                continue
            images = set()
            for D in pool:
                item = delcon_bijection(G, v0, e, D)
                back = delcon_inverse(G, v0, e, item)
                if back != D:
                    return Check("delcon-split", False, f"v0={v0} e={e} D={D.word} round-trips to {back.word}")
                images.add((item.branch, item.orientation.word))
            u = sum(G.endpoints(e)) - v0
            n_del = len(unique_sink(delete_edge(G, e), v0))
            n_con = len(unique_sink(contract_edge(G, e), contraction_map(G.d, u, v0)[v0]))
            if len(images) != len(pool) or len(pool) != n_del + n_con:
                return Check("delcon-split", False, f"v0={v0} e={e}: {len(pool)} != {n_del} + {n_con}")
    return Check("delcon-split", True)


def check_leading_e(G: Multigraph, sinks_to_check) -> Check:
    value = factorial(G.d - 1) * leading_e_coefficient(G)
    if value.denominator != 1 or value < 0:
        return Check("leading-e", False, f"(d-1)! c_[d] = {value}")
    for v0 in sinks_to_check:
        n = len(unique_sink(G, v0))
        if n != value:
            return Check("leading-e", False, f"v0={v0}: |A(G,v0)|={n}, (d-1)! c_[d]={value}")
    return Check("leading-e", True)


def check_one_sink(G: Multigraph) -> Check:
    value = G.d * factorial(G.d - 1) * leading_e_coefficient(G)
    one = sink_distribution(G).get(1, 0)
    return Check("one-sink", value == one, "" if value == one else f"d! c_[d]={value}, one-sink count={one}")


def check_sink_distribution(G: Multigraph) -> Check:
    by_length = commutativize(Y_delcon(G)).sum_by_length()
    dist = sink_distribution(G)
    for j in range(1, G.d + 1):
        if by_length.get(j, 0) != dist.get(j, 0):
            return Check("sink-distribution", False, f"j={j}: sum c_lambda={by_length.get(j, 0)}, orientations={dist.get(j, 0)}")
    return Check("sink-distribution", True)


def check_bijection(G: Multigraph, sinks_to_check, normals) -> Check:
    if G.has_loop() or not G.is_connected():
        return Check("bijection", True, "skipped: needs a connected loop-free graph")
    trees = set(nbc_trees(G))
    for normal in normals:
        for v0 in sinks_to_check:
            image = {}
            for D in unique_sink(G, v0):
                for s, _ in stages(G, v0, normal, D):
                    ok, why = is_valid_stage(G, v0, normal, s)
                    if not ok:
                        return Check("bijection", False, f"normal={normal.word} v0={v0} D={D.word} stage k={s.k} fails ({why})")
                S, _ = forward(G, v0, normal, D)
                if S in image or S not in trees:
                    return Check("bijection", False, f"normal={normal.word} v0={v0} D={D.word} -> {format_edge_set(S)}")
                image[S] = D
                if inverse(G, v0, normal, S) != D:
                    return Check("bijection", False, f"normal={normal.word} v0={v0} inverse({format_edge_set(S)}) != {D.word}")
            if set(image) != trees:
                missing = sorted(trees - set(image))
                return Check("bijection", False, f"normal={normal.word} v0={v0} misses {format_edge_set(missing[0])}")
    return Check("bijection", True)


def verify_graph(G: Multigraph, all_sinks: bool = False, normal_seeds=(0, 1, 2)) -> list[Check]:
    vertices = list(G.vertices) if all_sinks else [1]
    normals = [MixedDigraph.all_forward(G)] + [random_normal(G, s) for s in normal_seeds]
    return [
        check_acyclic_count(G),
        check_unique_sink_count(G, vertices),
        check_whitney(G),
        check_delcon_split(G, vertices),
        check_leading_e(G, vertices),
        check_one_sink(G),
        check_sink_distribution(G),
        check_bijection(G, vertices, normals),
    ]
