"""Matching extendability properties and maximal-non-property testing.

A property kind names one of five graph predicates:

* ``PM`` - has a perfect matching,
* ``Extendable(k)`` - connected, perfectly matchable, and every k-matching
  extends to a perfect matching,
* ``BipExtendable(k)`` - the same predicate, used with a bipartition so that
  maximality only considers edges between the two sides,
* ``FactorCritical(k)`` - deleting any k vertices leaves a perfectly
  matchable graph (k = 0 reduces to PM),
* ``NKD(n, k, d)`` - deleting any n vertices leaves a graph that contains a
  k-matching, every one of which extends to a matching missing exactly d
  vertices.

All checkers are total: inputs that violate an order or parity premise
return False rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .graphs import Bipartition, Graph, add_edge, induced_subgraph
from .matching import _TABLE_LIMIT, matching_table, maximum_matching


@dataclass(frozen=True)
class PM:
    pass


@dataclass(frozen=True)
class Extendable:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("extendability level must be non-negative")


@dataclass(frozen=True)
class BipExtendable:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("extendability level must be non-negative")


@dataclass(frozen=True)
class FactorCritical:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("deletion count must be non-negative")


@dataclass(frozen=True)
class NKD:
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 0 or self.d < 0:
            raise ValueError("parameters must be non-negative")


PropertyKind = Union[PM, Extendable, BipExtendable, FactorCritical, NKD]


def parse_property(text: str) -> PropertyKind:
    """Parse ``pm``, ``ext:K``, ``bipext:K``, ``fc:K`` or ``nkd:N,K,D``."""
    name, _, argument = text.partition(":")
    try:
        if name == "pm":
            if argument:
                raise ValueError
            return PM()
        if name == "ext":
            return Extendable(int(argument))
        if name == "bipext":
            return BipExtendable(int(argument))
        if name == "fc":
            return FactorCritical(int(argument))
        if name == "nkd":
            n, k, d = (int(part) for part in argument.split(","))
            return NKD(n, k, d)
    except ValueError:
        pass
    raise ValueError(
        f"unrecognised property {text!r}; expected pm, ext:K, bipext:K, fc:K or nkd:N,K,D"
    )


def property_label(prop: PropertyKind) -> str:
    if isinstance(prop, PM):
        return "pm"
    if isinstance(prop, Extendable):
        return f"ext:{prop.k}"
    if isinstance(prop, BipExtendable):
        return f"bipext:{prop.k}"
    if isinstance(prop, FactorCritical):
        return f"fc:{prop.k}"
    return f"nkd:{prop.n},{prop.k},{prop.d}"


class _DeficiencyOracle:
    """Answers min-deficiency queries about induced subgraphs of one graph.

    Small orders get the full subset table (one O(2^p) pass, then O(1) per
    query); larger orders fall back to a blossom run per query.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.table = matching_table(g) if g.p <= _TABLE_LIMIT else None

    def min_deficiency(self, mask: int) -> int:
        count = mask.bit_count()
        if self.table is not None:
            return count - 2 * self.table[mask]
        return count - 2 * maximum_matching(induced_subgraph(self.g, mask)).size


def _k_matching_masks(g: Graph, k: int, allowed: int) -> list[int]:
    """Vertex masks of all k-matchings inside the vertex set ``allowed``."""
    edges = [
        (1 << u) | (1 << v)
        for u, v in g.edges()
        if (allowed >> u) & 1 and (allowed >> v) & 1
    ]
    out: list[int] = []
    limit = allowed.bit_count() // 2

    def extend(start: int, used: int, size: int) -> None:
        if size == k:
            out.append(used)
            return
        if size + (len(edges) - start) < k or size + limit - used.bit_count() // 2 < k:
            return
        for i in range(start, len(edges)):
            bits = edges[i]
            if used & bits:
                continue
            extend(i + 1, used | bits, size + 1)

    if k == 0:
        return [0]
    extend(0, 0, 0)
    return out


def has_perfect_matching(g: Graph) -> bool:
    if g.p % 2:
        return False
    return maximum_matching(g).size * 2 == g.p


def is_k_extendable(g: Graph, k: int) -> bool:
    """Connected, perfectly matchable, and every k-matching lies in some
    perfect matching.  Disconnected graphs map to False, any k."""
    if k < 0:
        raise ValueError("extendability level must be non-negative")
    if g.p % 2 or not g.is_connected():
        return False
    oracle = _DeficiencyOracle(g)
    full = (1 << g.p) - 1
    if oracle.min_deficiency(full) != 0:
        return False
    if k == 0:
        return True
    for used in _k_matching_masks(g, k, full):
        if oracle.min_deficiency(full ^ used) != 0:
            return False
    return True


def is_k_factor_critical(g: Graph, k: int) -> bool:
    """Every deletion of exactly k vertices leaves a perfect matching."""
    if k < 0:
        raise ValueError("deletion count must be non-negative")
    if k > g.p or (g.p - k) % 2:
        return False
    if k == 0:
        return has_perfect_matching(g)
    oracle = _DeficiencyOracle(g)
    full = (1 << g.p) - 1
    for removed in combinations(range(g.p), k):
        mask = full
        for v in removed:
            mask ^= 1 << v
        if oracle.min_deficiency(mask) != 0:
            return False
    return True


def is_nkd_graph(g: Graph, n: int, k: int, d: int) -> bool:
    """After deleting any n vertices, a k-matching exists and every
    k-matching extends to a matching missing exactly d vertices."""
    if n < 0 or k < 0 or d < 0:
        raise ValueError("parameters must be non-negative")
    if g.p < n + 2 * k + d + 2 or (g.p - n - d) % 2:
        return False
    if not g.is_connected():
        return False
    oracle = _DeficiencyOracle(g)
    full = (1 << g.p) - 1
    for removed in combinations(range(g.p), n):
        remaining = full
        for v in removed:
            remaining ^= 1 << v
        k_matchings = _k_matching_masks(g, k, remaining)
        if not k_matchings:
            return False
        for used in k_matchings:
            if oracle.min_deficiency(remaining ^ used) > d:
                return False
    return True


def holds(g: Graph, prop: PropertyKind) -> bool:
    """Evaluate a property kind on a graph."""
    if isinstance(prop, PM):
        return has_perfect_matching(g)
    if isinstance(prop, (Extendable, BipExtendable)):
        return is_k_extendable(g, prop.k)
    if isinstance(prop, FactorCritical):
        return is_k_factor_critical(g, prop.k)
    return is_nkd_graph(g, prop.n, prop.k, prop.d)


def is_maximal_non_property(
    g: Graph, prop: PropertyKind, bipartition: Bipartition | None = None
) -> bool:
    """``g`` lacks the property but every admissible missing edge repairs it.

    For ``BipExtendable`` the admissible missing edges are the non-adjacent
    pairs across the given bipartition (required); for all other kinds every
    missing edge is admissible.  A graph with no admissible missing edge is
    maximal by vacuity.
    """
    if isinstance(prop, BipExtendable):
        if bipartition is None:
            raise ValueError("bipartite maximality needs a bipartition")
        bipartition.validate_for(g)
        candidates = [
            (u, v)
            for u in sorted(bipartition.left)
            for v in sorted(bipartition.right)
            if not g.has_edge(u, v)
        ]
    else:
        if bipartition is not None:
            raise ValueError("bipartition only applies to bipext")
        candidates = list(g.non_edges())
    if holds(g, prop):
        return False
    for u, v in candidates:
        if not holds(add_edge(g, u, v), prop):
            return False
    return True
