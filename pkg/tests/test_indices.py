"""Degree power-sum index and the one-edge delta."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchext.graphs import add_edge, complete_graph, empty_graph, from_edges, join, union
from matchext.indices import (
    Alpha,
    index_delta_for_edge,
    zeroth_order_randic,
    zeroth_order_randic_exact,
)

STAR_1_3 = join(empty_graph(1), empty_graph(3))
P3 = from_edges(3, [(0, 1), (1, 2)])


def _random_graph(bits, p):
    pairs = [(u, v) for v in range(1, p) for u in range(v)]
    return from_edges(p, [e for i, e in enumerate(pairs) if bits[i % len(bits)]])


graphs = st.integers(1, 8).flatmap(
    lambda p: st.lists(st.booleans(), min_size=1, max_size=40).map(
        lambda bits: _random_graph(bits, p)
    )
)


def test_alpha_type():
    assert float(Alpha(2.0)) == 2.0
    with pytest.raises(ValueError):
        Alpha(0.0)
    with pytest.raises(ValueError):
        Alpha(float("nan"))
    with pytest.raises(ValueError):
        Alpha(float("inf"))


def test_frozen_values():
    assert zeroth_order_randic(complete_graph(4), 2) == 36
    assert zeroth_order_randic(P3, 1) == 4
    assert math.isclose(zeroth_order_randic(STAR_1_3, -1), 3 + 1 / 3, rel_tol=1e-12)


def test_alpha_zero_rejected():
    with pytest.raises(ValueError):
        zeroth_order_randic(complete_graph(3), 0)


def test_isolated_vertex_rules():
    lonely = union(complete_graph(2), empty_graph(1))
    # 0^alpha is 0 for positive exponents, an error for negative ones
    assert zeroth_order_randic(lonely, 2) == 2
    with pytest.raises(ValueError):
        zeroth_order_randic(lonely, -1)


def test_integer_path_is_exact():
    g = complete_graph(9)
    value = zeroth_order_randic_exact(g, 3)
    assert isinstance(value, int)
    assert value == 9 * 8**3
    assert zeroth_order_randic(g, 3) == value


@given(graphs, st.sampled_from([1, 2, 3, 4]))
def test_dual_paths_agree(g, a):
    assert float(zeroth_order_randic_exact(g, a)) == zeroth_order_randic(g, float(a))


@given(graphs)
def test_alpha_one_is_twice_edge_count(g):
    assert zeroth_order_randic(g, 1) == 2 * g.edge_count()


@given(graphs)
def test_zagreb_and_forgotten_match_degree_sums(g):
    assert zeroth_order_randic(g, 2) == sum(d * d for d in g.degrees())
    assert zeroth_order_randic(g, 3) == sum(d**3 for d in g.degrees())


def test_delta_frozen_values():
    two_k1 = empty_graph(2)
    assert index_delta_for_edge(two_k1, 0, 1, 1) == 2
    assert index_delta_for_edge(two_k1, 0, 1, 2) == 2
    assert index_delta_for_edge(P3, 0, 2, -1) == pytest.approx(-1.0, rel=1e-12)


def test_delta_rejects_adjacent_or_equal():
    with pytest.raises(ValueError):
        index_delta_for_edge(P3, 0, 1, 1)
    with pytest.raises(ValueError):
        index_delta_for_edge(P3, 0, 0, 1)


@given(graphs, st.sampled_from([0.5, 1.0, 2.0, 3.0, -1.0, -0.5]))
def test_delta_matches_recomputation(g, a):
    for u, v in g.non_edges():
        if a < 0 and (g.degree(u) == 0 or g.degree(v) == 0):
            continue
        direct = zeroth_order_randic(add_edge(g, u, v), a) - zeroth_order_randic(g, a)
        delta = index_delta_for_edge(g, u, v, a)
        assert delta == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_edge_monotone_sign_sweep_small():
    """Exhaustive sign check on every graph with at most five vertices."""
    for p in range(2, 6):
        pairs = [(u, v) for v in range(1, p) for u in range(v)]
        for mask in range(1 << len(pairs)):
            g = from_edges(p, [e for i, e in enumerate(pairs) if mask >> i & 1])
            for u, v in g.non_edges():
                assert index_delta_for_edge(g, u, v, 2.0) > 0
                assert index_delta_for_edge(g, u, v, 0.5) > 0
                if g.degree(u) >= 1 and g.degree(v) >= 1:
                    assert index_delta_for_edge(g, u, v, -1.0) < 0
