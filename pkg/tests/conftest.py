import sys
from fractions import Fraction
from itertools import combinations, product
from math import factorial

import pytest
from hypothesis import strategies as st

from acyclic_sinks.corpus import default_corpus
from acyclic_sinks.graph import MixedDigraph, Multigraph, State

K1 = Multigraph(1)
K2 = Multigraph(2, ((1, 2),))
P3 = Multigraph(3, ((1, 2), (2, 3)))
K3 = Multigraph(3, ((1, 2), (2, 3), (1, 3)))
LOOP = Multigraph(1, ((1, 1),))
DOUBLE = Multigraph(2, ((1, 2), (1, 2)))
K4 = Multigraph(4, tuple(combinations(range(1, 5), 2)))

# The worked example drawn in the algorithm figure.  Vertices:
# 1 = left (the sink v0), 2 = top, 3 = right, 4 = bottom.  Each edge is
# written tail-first in its normal orientation.
FIGURE_GRAPH = Multigraph(4, ((2, 1), (3, 2), (4, 3), (2, 4), (4, 1)))
FIGURE_D_WORD = "><<>>"  # T->L, T->R, R->B, T->B, B->L


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


def all_labeled_graphs(d):
    """Every simple graph on vertices 1..d (not just connected ones)."""
    pairs = list(combinations(range(1, d + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(d, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def all_mixed(G, states=tuple(State)):
    for s in product(states, repeat=G.q):
        yield MixedDigraph(G, s)


# ---------------------------------------------------------------- oracles


def has_cycle_bruteforce(D):
    """Search for a closed walk with distinct vertices and distinct edges.

    Independent of the library's union-find route: plain DFS over arcs.
    """
    arcs = []
    for e, ((u, v), s) in enumerate(zip(D.host.edges, D.state), 1):
        if s is State.FORWARD:
            arcs.append((u, v, e))
        elif s is State.BACKWARD:
            arcs.append((v, u, e))
        elif s is State.UNORIENTED:
            arcs.append((u, v, e))
            arcs.append((v, u, e))

    def dfs(start, v, seen_v, seen_e):
        for a, b, e in arcs:
            if a != v or e in seen_e:
                continue
            if b == start:
                return True
            if b not in seen_v and dfs(start, b, seen_v | {b}, seen_e | {e}):
                return True
        return False

    return any(dfs(s, s, {s}, frozenset()) for s in D.host.vertices)


def circuits_bruteforce(G):
    """Edge subsets that are connected and 2-regular on the vertices they touch."""
    found = []
    for r in range(1, G.q + 1):
        for S in combinations(G.edge_ids, r):
            deg = {}
            for e in S:
                u, v = G.edges[e - 1]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(x != 2 for x in deg.values()) or len(deg) != len(S):
                continue
            sub = Multigraph(G.d, tuple(G.edges[e - 1] for e in S))
            comps = [c for c in sub.components() if c & set(deg)]
            if len(comps) == 1:
                found.append(S)
    return sorted(found, key=lambda c: (len(c), c))


def nbc_bruteforce(G):
    from acyclic_sinks.nbc import broken_circuits

    bcs = [set(b) for b in broken_circuits(G)]
    out = []
    for r in range(G.q + 1):
        for S in combinations(G.edge_ids, r):
            if not any(b <= set(S) for b in bcs):
                out.append(S)
    return out


def interpolate(values):
    """Integer coefficients of the polynomial through (k, values[k]), k = 0..len-1.

    Solves the Vandermonde system exactly by Gaussian elimination.
    """
    n = len(values)
    rows = [[Fraction(k) ** i for i in range(n)] + [Fraction(values[k])] for k in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col] / rows[col][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    coeffs = [rows[i][n] / rows[i][i] for i in range(n)]
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def mobius_closed_form(tau, sigma):
    """prod over blocks of sigma of (-1)^(k-1) (k-1)!, k = number of tau-blocks merged."""
    merged = {}
    for t, s in zip(tau.rgs, sigma.rgs):
        merged.setdefault(s, set()).add(t)
    out = 1
    for blocks in merged.values():
        k = len(blocks)
        out *= (-1) ** (k - 1) * factorial(k - 1)
    return out


# ------------------------------------------------------------- strategies


@st.composite
def multigraphs(draw, max_d=5, max_q=7, loops=False, connected=False):
    d = draw(st.integers(1, max_d))
    if connected and d > 1:
        # random spanning tree first, then extra edges
        edges = [(draw(st.integers(1, v - 1)), v) for v in range(2, d + 1)]
    else:
        edges = []
    room = max(0, max_q - len(edges))
    pair = st.tuples(st.integers(1, d), st.integers(1, d))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    if d > 1 or loops:
        edges += draw(st.lists(pair, max_size=room))
    edges = draw(st.permutations(edges)) if edges else edges
    return Multigraph(d, tuple(edges))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    RESULTS = module.RESULTS
    terminalreporter.section("acceptance")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
