from itertools import combinations

import pytest
from hypothesis import given, settings

from acyclic_sinks.chromatic import chromatic_delcon, coefficient
from acyclic_sinks.graph import GraphError, Multigraph
from acyclic_sinks.nbc import (
    broken_circuits,
    circuits,
    contains_broken_circuit,
    format_edge_set,
    nbc_sets,
    nbc_trees,
    parse_edge_set,
)
from acyclic_sinks.orientations import unique_sink

from conftest import DOUBLE, K3, K4, LOOP, P3, circuits_bruteforce, multigraphs, nbc_bruteforce


def test_circuit_examples():
    assert circuits(K3) == [(1, 2, 3)]
    assert circuits(DOUBLE) == [(1, 2)]
    assert circuits(P3) == []
    assert circuits(LOOP) == [(1,)]
    assert len(circuits(K4)) == 7  # four triangles and three 4-cycles


def test_broken_circuit_examples():
    assert broken_circuits(K3) == [(1, 2)]
    assert broken_circuits(LOOP) == [()]
    assert broken_circuits(DOUBLE) == [(1,)]


def test_nbc_examples():
    sizes = [len(S) for S in nbc_sets(K3)]
    assert [sizes.count(k) for k in range(3)] == [1, 3, 2]
    assert nbc_sets(LOOP) == []
    tree = Multigraph(4, ((1, 2), (2, 3), (2, 4)))
    assert len(nbc_sets(tree)) == 8
    assert nbc_sets(K3, size=1) == [(1,), (2,), (3,)]


def test_nbc_tree_examples():
    assert nbc_trees(K3) == [(1, 3), (2, 3)]
    assert nbc_trees(P3) == [(1, 2)]
    star = Multigraph(4, ((1, 2), (1, 3), (1, 4)))
    assert nbc_trees(star) == [(1, 2, 3)]
    with pytest.raises(GraphError):
        nbc_trees(Multigraph(3, ((1, 2),)))
    with pytest.raises(GraphError):
        nbc_trees(Multigraph(2, ((1, 2), (2, 2))))


def test_edge_set_text():
    assert format_edge_set((3, 1)) == "{1,3}"
    assert parse_edge_set(" {1, 3} ") == (1, 3)
    assert parse_edge_set("{}") == ()
    with pytest.raises(GraphError):
        parse_edge_set("1,3")


def test_circuits_match_bruteforce(corpus):
    for name, G in corpus:
        assert circuits(G) == circuits_bruteforce(G), name


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_d=5, max_q=7, loops=True))
def test_circuits_and_nbc_match_bruteforce_random(G):
    assert circuits(G) == circuits_bruteforce(G)
    assert nbc_sets(G) == nbc_bruteforce(G)


def test_nbc_matches_filter_all_subsets(corpus):
    for name, G in corpus:
        assert nbc_sets(G) == nbc_bruteforce(G), name


def test_nbc_complex_is_closed_under_subsets(corpus):
    for name, G in corpus:
        members = set(nbc_sets(G))
        for S in members:
            for r in range(len(S)):
                for T in combinations(S, r):
                    assert T in members, (name, S, T)


def test_nbc_sets_contain_no_circuit(corpus):
    for name, G in corpus:
        cs = [set(c) for c in circuits(G)]
        for S in nbc_sets(G):
            assert not any(c <= set(S) for c in cs)


def test_nbc_tree_count_is_linear_coefficient(corpus):
    for name, G in corpus:
        a1 = abs(coefficient(chromatic_delcon(G), 1))
        assert len(nbc_trees(G)) == a1
        assert len(unique_sink(G, G.d)) == a1


def test_contains_broken_circuit():
    assert contains_broken_circuit(K3, (1, 2))
    assert not contains_broken_circuit(K3, (1, 3))
