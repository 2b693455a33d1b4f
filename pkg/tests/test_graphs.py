"""Graph container, constructions, and graph6 codec."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchext.graphs import (
    Bipartition,
    Graph,
    Graph6Error,
    add_edge,
    bipartition_of,
    complement,
    complete_bipartite,
    complete_graph,
    delete_biclique,
    delete_vertices,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    join,
    relabel,
    union,
)


def _random_graph(rng_bits: list[bool], p: int) -> Graph:
    edges = []
    i = 0
    for v in range(1, p):
        for u in range(v):
            if rng_bits[i % len(rng_bits)]:
                edges.append((u, v))
            i += 1
    return from_edges(p, edges)


graphs_small = st.integers(2, 8).flatmap(
    lambda p: st.lists(st.booleans(), min_size=1, max_size=40).map(
        lambda bits: _random_graph(bits, p)
    )
)


def test_empty_and_complete():
    assert empty_graph(3).edge_count() == 0
    k5 = complete_graph(5)
    assert k5.edge_count() == 10
    assert k5.degrees() == (4, 4, 4, 4, 4)
    assert complete_graph(0).p == 0


def test_from_edges_validation():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.degrees() == (1, 2, 1)
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(-1, [])


def test_graph_invariants_checked_at_construction():
    # asymmetric adjacency rows must be rejected
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # self loop at vertex 0
    with pytest.raises(ValueError):
        Graph(1, (0b10,))  # bit outside the vertex range


def test_neighbors_and_edges():
    g = from_edges(4, [(0, 1), (0, 2), (2, 3)])
    assert list(g.neighbors(0)) == [1, 2]
    assert g.degree(2) == 2
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]
    assert (1, 2) in list(g.non_edges())
    assert g.has_edge(2, 3) and not g.has_edge(1, 3)


def test_connectivity():
    assert from_edges(4, [(0, 1), (1, 2), (2, 3)]).is_connected()
    assert not from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert empty_graph(1).is_connected()
    assert not empty_graph(2).is_connected()
    assert empty_graph(0).is_connected()


def test_join_and_union():
    # K2 v 4K1 is the order-6 hub example: hub degrees 5, others 2
    hub = join(complete_graph(2), empty_graph(4))
    assert sorted(hub.degrees(), reverse=True) == [5, 5, 2, 2, 2, 2]
    parts = union(complete_graph(3), complete_graph(1))
    assert parts.p == 4
    assert parts.edge_count() == 3


def test_complete_bipartite_and_biclique_deletion():
    g, bip = complete_bipartite(3, 3)
    assert g.edge_count() == 9
    assert bip.left == frozenset({0, 1, 2})
    trimmed = delete_biclique(g, [0, 1], [3, 4])
    assert trimmed.edge_count() == 5
    with pytest.raises(ValueError):
        delete_biclique(g, [0, 1], [1, 3])


def test_delete_and_induce():
    k4 = complete_graph(4)
    assert delete_vertices(k4, [0]).degrees() == (2, 2, 2)
    assert induced_subgraph(k4, 0b1010).edge_count() == 1


def test_bipartition_of():
    c6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    bip = bipartition_of(c6)
    assert bip is not None
    assert {len(bip.left), len(bip.right)} == {3}
    c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert bipartition_of(c5) is None


def test_bipartition_validate():
    g, bip = complete_bipartite(2, 2)
    bip.validate_for(g)
    overlapping = Bipartition(frozenset({0}), frozenset({0}))
    with pytest.raises(ValueError, match="overlap"):
        overlapping.validate_for(empty_graph(1))
    with pytest.raises(ValueError):
        bip.validate_for(complete_graph(4))


# graph6 codec


def test_graph6_known_tokens():
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_decode("C~").degrees() == (3, 3, 3, 3)
    assert graph6_encode(empty_graph(2)) == "A?"
    assert graph6_decode("A_").edge_count() == 1


def test_graph6_round_trip_exhaustive_small():
    for p in range(0, 5):
        pairs = [(u, v) for v in range(1, p) for u in range(v)]
        for mask in range(1 << len(pairs)):
            g = from_edges(p, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            assert graph6_decode(graph6_encode(g)) == g


@given(graphs_small)
def test_graph6_round_trip_random(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_decode_errors_are_specific():
    with pytest.raises(Graph6Error, match="empty"):
        graph6_decode("")
    with pytest.raises(Graph6Error, match="outside graph6 range"):
        graph6_decode("C\x1f")
    with pytest.raises(Graph6Error, match="truncated"):
        graph6_decode("E")
    with pytest.raises(Graph6Error, match="trailing"):
        graph6_decode("A??")
    with pytest.raises(Graph6Error, match="padding"):
        graph6_decode("A" + chr(63 + 0b011111))
    with pytest.raises(Graph6Error, match="multi-byte"):
        graph6_decode("~??")


def test_graph6_order_limit():
    with pytest.raises(Graph6Error):
        graph6_encode(empty_graph(63))
    assert graph6_decode(graph6_encode(empty_graph(62))).p == 62


@given(graphs_small)
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count() + complement(g).edge_count() == g.p * (g.p - 1) // 2


@given(graphs_small, graphs_small)
@settings(max_examples=40)
def test_join_degree_sum(g, h):
    joined = join(g, h)
    assert joined.p == g.p + h.p
    assert joined.edge_count() == g.edge_count() + h.edge_count() + g.p * h.p


@given(graphs_small, st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(g, rng):
    perm = list(range(g.p))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())


def test_add_edge():
    g = empty_graph(2)
    assert add_edge(g, 0, 1).edge_count() == 1
    with pytest.raises(ValueError):
        add_edge(complete_graph(2), 0, 1)
