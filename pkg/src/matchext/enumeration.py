"""Exhaustive graph generation for small orders.

Two generators are offered.  ``labeled_graphs`` walks every edge subset of
the complete graph and is only sensible up to order 6 or so.
``graph_classes`` produces one canonical representative per isomorphism
class by extending each class of order p-1 with a new vertex in every
possible way and deduplicating through the canonical form; this is what
lets order-8 sweeps finish in minutes instead of days.  Results are cached
per process and returned sorted by canonical graph6 string, so downstream
reports are deterministic.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from .graphs import Bipartition, Graph, graph6_encode
from .iso import canonical_relabel

#: Largest order the built-in generators will attempt.
MAX_BUILTIN_ORDER = 8
#: Largest side size for the built-in balanced bipartite generator.
MAX_BIPARTITE_SIDE = 4


def labeled_graphs(p: int, connected: bool = False) -> Iterator[Graph]:
    """Every labelled graph on p vertices (2^(p(p-1)/2) of them)."""
    if p < 0:
        raise ValueError("order must be non-negative")
    if p > 7:
        raise ValueError("labelled enumeration is limited to order 7")
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    for mask in range(1 << len(pairs)):
        rows = [0] * p
        m = mask
        while m:
            b = m & -m
            u, v = pairs[b.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m ^= b
        g = Graph(p, tuple(rows))
        if connected and not g.is_connected():
            continue
        yield g


@lru_cache(maxsize=None)
def graph_classes(p: int) -> tuple[Graph, ...]:
    """Canonical representatives of all isomorphism classes of order p,
    sorted by canonical graph6 string."""
    if p < 0:
        raise ValueError("order must be non-negative")
    if p > MAX_BUILTIN_ORDER:
        raise ValueError(
            f"built-in class generation is limited to order {MAX_BUILTIN_ORDER}; "
            "feed larger graphs in as graph6 streams"
        )
    if p == 0:
        return (Graph(0, ()),)
    if p == 1:
        return (Graph(1, (0,)),)
    seen: dict[str, Graph] = {}
    for parent in graph_classes(p - 1):
        parent_rows = parent.rows
        for neighbourhood in range(1 << (p - 1)):
            rows = list(parent_rows) + [neighbourhood]
            m = neighbourhood
            while m:
                b = m & -m
                rows[b.bit_length() - 1] |= 1 << (p - 1)
                m ^= b
            candidate = canonical_relabel(Graph(p, tuple(rows)))
            seen.setdefault(graph6_encode(candidate), candidate)
    return tuple(seen[key] for key in sorted(seen))


@lru_cache(maxsize=None)
def connected_graph_classes(p: int) -> tuple[Graph, ...]:
    return tuple(g for g in graph_classes(p) if g.is_connected())


def fixed_bipartition(n: int) -> Bipartition:
    """Left side 0..n-1, right side n..2n-1."""
    return Bipartition(frozenset(range(n)), frozenset(range(n, 2 * n)))


@lru_cache(maxsize=None)
def balanced_bipartite_graphs(n: int, connected: bool = True) -> tuple[Graph, ...]:
    """Every labelled balanced bipartite graph over the fixed bipartition,
    one per subset of the n*n cross pairs."""
    if n < 1:
        raise ValueError("side size must be positive")
    if n > MAX_BIPARTITE_SIDE:
        raise ValueError(
            f"built-in bipartite enumeration is limited to side {MAX_BIPARTITE_SIDE}"
        )
    pairs = [(u, n + v) for u in range(n) for v in range(n)]
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        rows = [0] * (2 * n)
        m = mask
        while m:
            b = m & -m
            u, v = pairs[b.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m ^= b
        g = Graph(2 * n, tuple(rows))
        if connected and not g.is_connected():
            continue
        out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def balanced_bipartite_classes(n: int) -> tuple[Graph, ...]:
    """Connected balanced bipartite graphs up to isomorphism, keeping the
    fixed-bipartition labelling of one representative per class."""
    seen: dict[str, Graph] = {}
    for g in balanced_bipartite_graphs(n, connected=True):
        seen.setdefault(graph6_encode(canonical_relabel(g)), g)
    return tuple(seen[key] for key in sorted(seen))
