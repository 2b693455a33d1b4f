"""Matching machinery: blossom maximum matching, Hopcroft-Karp, an
exhaustive oracle, k-matching enumeration, and deficiency arithmetic.

The deficiency of a matching M in G is the number of vertices M leaves
unsaturated; min_deficiency(G) = |V| - 2 * (maximum matching size).  A
matching extends to deficiency d when some superset matching saturates
exactly |V| - d vertices.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .graphs import Bipartition, Graph, delete_vertices


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored sorted as (u, v), u < v."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u >= v:
                raise ValueError("matching edges must be stored as (u, v) with u < v")
            if u in seen or v in seen:
                raise ValueError("matching edges share a vertex")
            seen.add(u)
            seen.add(v)
        if list(self.edges) != sorted(self.edges):
            raise ValueError("matching edges must be sorted")

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Iterable[tuple[int, int]]) -> "Matching":
        """Validated constructor: every pair must be an edge of ``g``."""
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in pairs))
        for u, v in edges:
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
        return cls(edges)


def maximum_matching(g: Graph) -> Matching:
    """Maximum matching by the blossom (odd-cycle contraction) method.

    Runs an alternating BFS from each exposed vertex; when two even-level
    vertices meet, the odd cycle is contracted by redirecting every vertex's
    base to the lowest common ancestor of the meeting pair.  Exactness over
    the full graph census at small orders is enforced by the test suite
    against the exhaustive oracle.
    """
    p = g.p
    rows = g.rows
    match = [-1] * p

    # Greedy seed keeps the number of BFS phases small.
    for v in range(p):
        if match[v] == -1:
            m = rows[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    parent = [-1] * p
    base = list(range(p))

    def lowest_common_base(a: int, b: int) -> int:
        marked = [False] * p
        x = a
        while True:
            x = base[x]
            marked[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if marked[y]:
                return y
            y = parent[match[y]]

    def mark_blossom(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    for root in range(p):
        if match[root] != -1:
            continue
        for i in range(p):
            parent[i] = -1
            base[i] = i
        in_queue = [False] * p
        in_queue[root] = True
        queue: deque[int] = deque([root])
        finish = -1
        while queue and finish == -1:
            v = queue.popleft()
            m = rows[v]
            while m:
                b = m & -m
                to = b.bit_length() - 1
                m ^= b
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Two even vertices meet: contract the blossom.
                    stem = lowest_common_base(v, to)
                    in_blossom = [False] * p
                    mark_blossom(v, stem, to, in_blossom)
                    mark_blossom(to, stem, v, in_blossom)
                    for i in range(p):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        finish = to
                        break
                    partner = match[to]
                    if not in_queue[partner]:
                        in_queue[partner] = True
                        queue.append(partner)
        if finish != -1:
            # Flip matched/unmatched along the alternating path to the root.
            to = finish
            while to != -1:
                v = parent[to]
                nxt = match[v]
                match[v] = to
                match[to] = v
                to = nxt

    return Matching(tuple(sorted((v, match[v]) for v in range(p) if match[v] > v)))


def bipartite_maximum_matching(g: Graph, bipartition: Bipartition) -> Matching:
    """Maximum matching of a bipartite graph by Hopcroft-Karp."""
    bipartition.validate_for(g)
    left = sorted(bipartition.left)
    inf = g.p + 1
    match_left: dict[int, int] = {v: -1 for v in left}
    match_right: dict[int, int] = {v: -1 for v in bipartition.right}
    dist: dict[int, int] = {}

    def bfs() -> bool:
        queue: deque[int] = deque()
        for v in left:
            if match_left[v] == -1:
                dist[v] = 0
                queue.append(v)
            else:
                dist[v] = inf
        found = False
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                w = match_right[u]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return found

    def dfs(v: int) -> bool:
        for u in g.neighbors(v):
            w = match_right[u]
            if w == -1 or (dist[w] == dist[v] + 1 and dfs(w)):
                match_left[v] = u
                match_right[u] = v
                return True
        dist[v] = inf
        return False

    while bfs():
        for v in left:
            if match_left[v] == -1:
                dfs(v)

    pairs = [(v, match_left[v]) for v in left if match_left[v] != -1]
    return Matching(tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))


_TABLE_LIMIT = 20


def matching_table(g: Graph) -> list[int]:
    """f[mask] = maximum matching size of the subgraph induced by ``mask``.

    Exhaustive dynamic programming over vertex subsets: the lowest vertex of
    the mask is either left unsaturated or matched to one of its neighbours
    inside the mask.  One table answers every vertex-deletion query about a
    fixed graph in O(1), which is what the property checkers lean on.
    """
    p = g.p
    if p > _TABLE_LIMIT:
        raise ValueError(f"subset table limited to order {_TABLE_LIMIT}")
    rows = g.rows
    f = [0] * (1 << p)
    for mask in range(3, 1 << p):
        low = mask & -mask
        rest = mask ^ low
        best = f[rest]
        cap = mask.bit_count() // 2
        if best < cap:
            m = rows[low.bit_length() - 1] & rest
            while m:
                b = m & -m
                m ^= b
                value = f[rest ^ b] + 1
                if value > best:
                    best = value
                    if best == cap:
                        break
        f[mask] = best
    return f


def exhaustive_matching_number(g: Graph) -> int:
    """Maximum matching size by exhaustive subset search (oracle).

    Shares no code path with the blossom engine; use it to cross-examine
    maximum_matching on small graphs.
    """
    if g.p == 0:
        return 0
    return matching_table(g)[(1 << g.p) - 1]


def min_deficiency(g: Graph) -> int:
    """|V| minus twice the maximum matching size; same parity as |V|."""
    return g.p - 2 * maximum_matching(g).size


def enumerate_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """All matchings of ``g`` with exactly ``k`` edges, in lexicographic
    order of their sorted edge lists."""
    if k < 0:
        raise ValueError("matching size must be non-negative")
    if k == 0:
        yield Matching(())
        return
    edges = list(g.edges())
    p = g.p
    chosen: list[tuple[int, int]] = []

    def extend(start: int, used: int) -> Iterator[Matching]:
        need = k - len(chosen)
        if need == 0:
            yield Matching(tuple(chosen))
            return
        if (p - used.bit_count()) // 2 < need:
            return
        for i in range(start, len(edges) - need + 1):
            u, v = edges[i]
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            chosen.append((u, v))
            yield from extend(i + 1, used | bits)
            chosen.pop()

    yield from extend(0, 0)


def extends_to_deficiency(g: Graph, matching: Matching, d: int) -> bool:
    """Can ``matching`` grow into a matching of ``g`` that leaves exactly
    ``d`` vertices unsaturated?

    False outright when d is negative or p - 2|matching| - d is odd or
    negative.  Otherwise it reduces to min_deficiency(g - V(matching)) <= d:
    parity lets a maximum matching of the residue be thinned edge by edge
    (two unsaturated vertices at a time) to hit d exactly.
    """
    for u, v in matching.edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the host graph")
    if d < 0:
        return False
    slack = g.p - 2 * matching.size - d
    if slack < 0 or slack % 2:
        return False
    residue = delete_vertices(g, matching.vertices())
    return min_deficiency(residue) <= d
