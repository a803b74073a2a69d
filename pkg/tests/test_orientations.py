import pytest

from acyclic_sinks.chromatic import chromatic_delcon, coefficient
from acyclic_sinks.graph import (
    GraphError,
    Multigraph,
    contract_edge,
    contraction_map,
    delete_edge,
    orientation,
    sinks,
)
from acyclic_sinks.orientations import (
    Tagged,
    all_acyclic,
    delcon_bijection,
    delcon_inverse,
    iter_orientations,
    sink_distribution,
    unique_sink,
)

from conftest import K2, K3, LOOP, P3, all_labeled_graphs


def test_all_acyclic_examples():
    assert len(list(iter_orientations(K3))) == 8
    assert len(all_acyclic(K3)) == 6
    assert len(all_acyclic(K2)) == 2
    assert all_acyclic(LOOP) == ()


def test_enumeration_order_is_binary_with_forward_first():
    assert [D.word for D in iter_orientations(P3)] == [">>", "><", "<>", "<<"]


def test_unique_sink_examples():
    (D,) = unique_sink(P3, 2)
    assert D.word == "><"
    assert all(len(unique_sink(K3, v)) == 2 for v in K3.vertices)
    assert unique_sink(Multigraph(2), 1) == ()
    with pytest.raises(GraphError):
        unique_sink(P3, 4)


def test_sink_distribution_examples():
    assert sink_distribution(K3) == {1: 6}
    assert sink_distribution(Multigraph(2)) == {2: 1}
    # 1->2->3, 3->2->1, 1->2<-3 have one sink; 1<-2->3 has two
    assert sink_distribution(P3) == {1: 3, 2: 1}


def test_sink_distribution_sums_to_acyclic_count(corpus):
    for name, G in corpus:
        assert sum(sink_distribution(G).values()) == len(all_acyclic(G)), name


def test_stanley_count(corpus):
    for name, G in corpus:
        assert len(all_acyclic(G)) == abs(chromatic_delcon(G)(-1)), name


def test_unique_sink_count_is_linear_coefficient_at_every_vertex(corpus):
    for name, G in corpus:
        a1 = abs(coefficient(chromatic_delcon(G), 1))
        assert [len(unique_sink(G, v)) for v in G.vertices] == [a1] * G.d, name


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_at_least_one_sink_per_component(d):
    for G in all_labeled_graphs(d):
        k = len(G.components())
        for D in all_acyclic(G):
            assert len(sinks(D)) >= k


def test_delcon_bijection_contracted_example():
    D = orientation(P3, "<<")  # 2->1, 3->2
    item = delcon_bijection(P3, 1, 1, D)
    assert item.branch == "contracted"
    assert item.orientation.host == Multigraph(2, ((1, 2),))
    assert item.orientation.word == "<" and item.sink == 1
    assert delcon_inverse(P3, 1, 1, item) == D


def test_delcon_bijection_deleted_example():
    # v0 = 1, u = 2, w = 3 on K3 with edges 12, 23, 13: u->v0, w->v0, u->w
    D = orientation(K3, "<><")
    assert sinks(D) == {1}
    item = delcon_bijection(K3, 1, 1, D)
    assert item.branch == "deleted"
    assert item.orientation.word == "><"
    assert delcon_inverse(K3, 1, 1, item) == D


def test_delcon_single_edge():
    (D,) = unique_sink(K2, 1)
    item = delcon_bijection(K2, 1, 1, D)
    assert item.branch == "contracted" and item.orientation.host == Multigraph(1)
    assert unique_sink(delete_edge(K2, 1), 1) == ()


def test_delcon_bijection_rejects_bad_input():
    with pytest.raises(GraphError):
        delcon_bijection(P3, 1, 2, orientation(P3, "<<"))  # edge 2 misses v0
    with pytest.raises(GraphError):
        delcon_bijection(P3, 1, 1, orientation(P3, ">>"))  # sink is 3
    with pytest.raises(GraphError):
        delcon_inverse(P3, 1, 1, Tagged("deleted", orientation(K2, ">"), 1))


def test_delcon_bijection_round_trips_and_counts(corpus):
    for name, G in corpus:
        if G.d > 5:
            continue
        for v0 in G.vertices:
            pool = unique_sink(G, v0)
            for e in G.incident(v0):
                if G.is_loop(e):
                    continue
                u = sum(G.endpoints(e)) - v0
                deleted = set(unique_sink(delete_edge(G, e), v0))
                contracted = set(unique_sink(contract_edge(G, e), contraction_map(G.d, u, v0)[v0]))
                seen = set()
                for D in pool:
                    item = delcon_bijection(G, v0, e, D)
                    target = deleted if item.branch == "deleted" else contracted
                    assert item.orientation in target
                    assert delcon_inverse(G, v0, e, item) == D
                    seen.add((item.branch, item.orientation))
                assert len(seen) == len(pool) == len(deleted) + len(contracted), (name, v0, e)
