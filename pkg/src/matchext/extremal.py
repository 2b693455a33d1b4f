"""Extremal families of maximal non-property graphs, and the convexity
adjustment that locates the index maximum inside each family.

Two shapes cover every property kind handled here:

* ``HubJoinSpec(q, t)`` - the join of a hub clique K_q with a disjoint
  union of odd cliques K_{2 t_i + 1}, one per entry of ``t``.  Hub vertices
  get labels 0..q-1, then each odd clique occupies the next block.
* ``BicliqueDeletedSpec(n, s, t)`` - the balanced complete bipartite graph
  on n + n vertices with all edges between the first s left vertices and
  the first t right vertices removed.

Which hub sizes and clique counts occur for a given property kind and
order is encoded in ``family_parameters``; ``enumerate_family`` walks every
admissible spec exactly once.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Union

from .graphs import (
    Bipartition,
    Graph,
    complete_bipartite,
    complete_graph,
    delete_biclique,
    empty_graph,
    join,
    union,
)
from .properties import (
    PM,
    BipExtendable,
    Extendable,
    FactorCritical,
    NKD,
    PropertyKind,
)


@dataclass(frozen=True)
class HubJoinSpec:
    """Join of K_hub with a union of odd cliques K_{2t+1}, t in halves."""

    hub: int
    odd_clique_halves: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.hub < 1:
            raise ValueError("hub must contain at least one vertex")
        if len(self.odd_clique_halves) < 2:
            raise ValueError("at least two odd cliques are required")
        if any(t < 0 for t in self.odd_clique_halves):
            raise ValueError("clique half-sizes must be non-negative")

    @property
    def order(self) -> int:
        return self.hub + sum(2 * t + 1 for t in self.odd_clique_halves)


@dataclass(frozen=True)
class BicliqueDeletedSpec:
    """K_{n,n} minus the biclique between s left and t right vertices."""

    n: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("side size must be at least 2")
        if not 1 <= self.s <= self.n - 1:
            raise ValueError("left deletion size out of range")
        if not 1 <= self.t <= self.n - 1:
            raise ValueError("right deletion size out of range")

    @property
    def order(self) -> int:
        return 2 * self.n


ExtremalSpec = Union[HubJoinSpec, BicliqueDeletedSpec]


def build_hub_join(spec: HubJoinSpec) -> Graph:
    """Construct the hub-join graph, largest odd clique first."""
    halves = tuple(sorted(spec.odd_clique_halves, reverse=True))
    cliques = empty_graph(0)
    for t in halves:
        cliques = union(cliques, complete_graph(2 * t + 1))
    return join(complete_graph(spec.hub), cliques)


def build_biclique_deleted(spec: BicliqueDeletedSpec) -> tuple[Graph, Bipartition]:
    g, bipartition = complete_bipartite(spec.n, spec.n)
    left_block = range(spec.s)
    right_block = range(spec.n, spec.n + spec.t)
    return delete_biclique(g, left_block, right_block), bipartition


def build_extremal(spec: ExtremalSpec) -> Graph:
    if isinstance(spec, HubJoinSpec):
        return build_hub_join(spec)
    return build_biclique_deleted(spec)[0]


def hub_join_index(spec: HubJoinSpec, alpha: float) -> float:
    """Degree-profile shortcut: q hub vertices of degree p-1 and, per odd
    clique, 2t+1 vertices of degree 2t+hub."""
    p = spec.order
    total = spec.hub * float(p - 1) ** alpha
    for t in spec.odd_clique_halves:
        total += (2 * t + 1) * float(2 * t + spec.hub) ** alpha
    return total


@dataclass(frozen=True)
class FamilyShape:
    """Hub size, clique count and clique budget as functions of s."""

    s_range: range
    hub: Callable[[int], int]
    parts: Callable[[int], int]
    clique_budget: Callable[[int], int]


def family_parameters(prop: PropertyKind, order: int) -> FamilyShape:
    """Shape of the maximal non-property family at the given order.

    Raises ValueError when the order or the property parameters violate the
    parity and range premises under which the family characterises the
    maximal non-property graphs.
    """
    if isinstance(prop, BipExtendable):
        raise ValueError("bipartite family has no hub-join shape; use enumerate_family")
    if isinstance(prop, PM):
        prop = FactorCritical(0)
    if isinstance(prop, Extendable):
        if order % 2 or order < 2:
            raise ValueError("extendable graphs need positive even order")
        n = order // 2
        if not 1 <= prop.k <= n - 1:
            raise ValueError(f"extendability level must lie in 1..{n - 1}")
        k = prop.k
        return FamilyShape(
            s_range=range(0, n - k),
            hub=lambda s: 2 * k + s,
            parts=lambda s: s + 2,
            clique_budget=lambda s: n - k - s - 1,
        )
    if isinstance(prop, FactorCritical):
        k = prop.k
        if (order - k) % 2:
            raise ValueError("deletion count and order must have equal parity")
        half = (order - k) // 2
        low = 1 if k == 0 else 0  # a hub is needed to keep the graph connected
        if half < low + 1:
            raise ValueError("order too small for a non-empty family")
        return FamilyShape(
            s_range=range(low, half),
            hub=lambda s: k + s,
            parts=lambda s: s + 2,
            clique_budget=lambda s: half - s - 1,
        )
    if isinstance(prop, NKD):
        n, k, d = prop.n, prop.k, prop.d
        if min(n, k, d) < 1:
            raise ValueError("family shape needs n, k, d >= 1")
        if (order - n - d) % 2:
            raise ValueError("order + n + d must be even")
        if order < n + 2 * k + d + 2:
            raise ValueError("order below n + 2k + d + 2")
        half = (order - n - 2 * k - d) // 2
        return FamilyShape(
            s_range=range(0, half),
            hub=lambda s: n + 2 * k + s,
            parts=lambda s: s + d + 2,
            clique_budget=lambda s: half - s - 1,
        )
    raise ValueError(f"no family shape for {prop!r}")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` non-negative parts,
    first coordinate descending, so (total, 0, ..., 0) comes first."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def enumerate_family(prop: PropertyKind, order: int) -> Iterator[ExtremalSpec]:
    """Every family spec for the property at the given order, exactly once.

    Hub-join specs are produced per (s, ordered composition); isomorphic
    duplicates (compositions with equal multisets) are intentionally kept so
    that callers see the full parameter grid.
    """
    if isinstance(prop, BipExtendable):
        if order % 2 or order < 4:
            raise ValueError("balanced bipartite graphs need even order >= 4")
        n = order // 2
        if not 0 <= prop.k <= n - 1:
            raise ValueError(f"extendability level must lie in 0..{n - 1}")
        for s in range(1, n):
            t = n - prop.k - s + 1
            if 1 <= t <= n - 1:
                yield BicliqueDeletedSpec(n, s, t)
        return
    shape = family_parameters(prop, order)
    for s in shape.s_range:
        for halves in compositions(shape.clique_budget(s), shape.parts(s)):
            yield HubJoinSpec(shape.hub(s), halves)


def adjust_maximize(
    fn: Callable[[int], float], parts: int, total: int
) -> tuple[tuple[int, ...], float]:
    """Maximum of sum(fn(x_i)) over compositions of ``total`` into ``parts``
    non-negative integers, for strictly convex ``fn`` (caller-asserted):
    the mass concentrates on a single coordinate."""
    if parts < 2:
        raise ValueError("need at least two parts")
    if total < 1:
        raise ValueError("total must be positive")
    composition = (total,) + (0,) * (parts - 1)
    return composition, fn(total) + (parts - 1) * fn(0)


def max_over_compositions(
    fn: Callable[[int], float], parts: int, total: int
) -> tuple[tuple[int, ...], float]:
    """Brute-force counterpart of adjust_maximize: scan every composition."""
    if parts < 2:
        raise ValueError("need at least two parts")
    if total < 1:
        raise ValueError("total must be positive")
    best: tuple[int, ...] | None = None
    best_value = float("-inf")
    for composition in compositions(total, parts):
        value = sum(fn(x) for x in composition)
        if value > best_value:
            best_value = value
            best = composition
    assert best is not None
    return best, best_value
