"""Immutable simple graphs with bit-row adjacency, plus graph6 encoding.

Vertices are always the integers ``0 .. p-1``.  Row ``v`` of the adjacency
is stored as a single Python integer whose bit ``u`` is set exactly when
``u`` and ``v`` are adjacent, which keeps neighbourhood arithmetic (masking,
intersection, frontier expansion) cheap for the exhaustive sweeps this
package runs.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. p-1``.

    Instances are immutable and hashable; every operation returns a new
    graph.  ``rows[v]`` is the neighbourhood of ``v`` as a bit mask.
    """

    p: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError("order must be non-negative")
        if len(self.rows) != self.p:
            raise ValueError("row count does not match order")
        full = (1 << self.p) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices outside 0..{self.p - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            m = row
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")

    # -- basic queries ---------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.rows[v]
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as ordered pairs (u, v) with u < v, lexicographically."""
        for u in range(self.p):
            m = self.rows[u] >> (u + 1)
            while m:
                b = m & -m
                yield (u, u + 1 + b.bit_length() - 1)
                m ^= b

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Yield unordered non-adjacent pairs (u, v), u < v, lexicographically."""
        for u in range(self.p):
            for v in range(u + 1, self.p):
                if not (self.rows[u] >> v) & 1:
                    yield (u, v)

    def is_connected(self) -> bool:
        if self.p <= 1:
            return True
        full = (1 << self.p) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= self.rows[b.bit_length() - 1]
                m ^= b
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.p:
            raise ValueError(f"vertex {v} outside 0..{self.p - 1}")

    def __repr__(self) -> str:  # keeps pytest failure output readable
        return f"Graph(p={self.p}, edges={list(self.edges())})"


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex split; ``left`` and ``right`` must cover the host."""

    left: frozenset[int]
    right: frozenset[int]

    def validate_for(self, g: Graph) -> None:
        if self.left & self.right:
            raise ValueError("bipartition sides overlap")
        if self.left | self.right != set(range(g.p)):
            raise ValueError("bipartition does not cover the vertex set")
        for u in self.left:
            if g.rows[u] & _mask(self.left):
                raise ValueError("edge inside the left side")
        for u in self.right:
            if g.rows[u] & _mask(self.right):
                raise ValueError("edge inside the right side")

    def side_of(self, v: int) -> int:
        """0 for left, 1 for right."""
        if v in self.left:
            return 0
        if v in self.right:
            return 1
        raise ValueError(f"vertex {v} in neither side")


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _vertices_of(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# -- constructions -------------------------------------------------------


def empty_graph(p: int) -> Graph:
    return Graph(p, (0,) * p)


def complete_graph(p: int) -> Graph:
    full = (1 << p) - 1
    return Graph(p, tuple(full ^ (1 << v) for v in range(p)))


def from_edges(p: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * p
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < p and 0 <= v < p):
            raise ValueError(f"edge ({u}, {v}) outside 0..{p - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(p, tuple(rows))


def complete_bipartite(a: int, b: int) -> tuple[Graph, Bipartition]:
    """K_{a,b} with the left side on 0..a-1 and the right side on a..a+b-1."""
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    rows = tuple(right if v < a else left for v in range(a + b))
    bipartition = Bipartition(frozenset(range(a)), frozenset(range(a, a + b)))
    return Graph(a + b, rows), bipartition


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.p."""
    rows = list(g.rows) + [r << g.p for r in h.rows]
    return Graph(g.p + h.p, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    hmask = ((1 << h.p) - 1) << g.p
    gmask = (1 << g.p) - 1
    rows = [r | hmask for r in g.rows]
    rows += [(r << g.p) | gmask for r in h.rows]
    return Graph(g.p + h.p, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.p) - 1
    return Graph(g.p, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("cannot add a loop")
    g._check_vertex(u)
    g._check_vertex(v)
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.p, tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``vertices``, order preserved."""
    drop = set(vertices)
    for v in drop:
        g._check_vertex(v)
    keep = [v for v in range(g.p) if v not in drop]
    return induced_subgraph(g, _mask(keep))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of ``mask``, relabelled in order."""
    keep = list(_vertices_of(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        m = g.rows[v] & mask
        while m:
            b = m & -m
            row |= 1 << index[b.bit_length() - 1]
            m ^= b
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_biclique(g: Graph, s: Iterable[int], t: Iterable[int]) -> Graph:
    """Remove every edge between the vertex sets ``s`` and ``t``."""
    s_set, t_set = set(s), set(t)
    for v in s_set | t_set:
        g._check_vertex(v)
    if s_set & t_set:
        raise ValueError("biclique sides overlap")
    smask, tmask = _mask(s_set), _mask(t_set)
    rows = list(g.rows)
    for v in s_set:
        rows[v] &= ~tmask
    for v in t_set:
        rows[v] &= ~smask
    return Graph(g.p, tuple(rows))


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Relabelled copy where new vertex i is old vertex perm[i]."""
    if sorted(perm) != list(range(g.p)):
        raise ValueError("not a permutation of the vertex set")
    position = {old: new for new, old in enumerate(perm)}
    rows = []
    for old in perm:
        row = 0
        m = g.rows[old]
        while m:
            b = m & -m
            row |= 1 << position[b.bit_length() - 1]
            m ^= b
        rows.append(row)
    return Graph(g.p, tuple(rows))


def bipartition_of(g: Graph) -> Bipartition | None:
    """Two-colour ``g`` if possible, else None.

    Each component is rooted at its smallest vertex, which goes to the left
    side, so the answer is deterministic.  For connected bipartite graphs it
    is the unique bipartition up to swapping sides.
    """
    colour = [-1] * g.p
    for root in range(g.p):
        if colour[root] != -1:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in _vertices_of(g.rows[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    left = frozenset(v for v in range(g.p) if colour[v] == 0)
    right = frozenset(v for v in range(g.p) if colour[v] == 1)
    return Bipartition(left, right)


# -- graph6 --------------------------------------------------------------

_G6_MIN = 63
_G6_MAX = 126


def graph6_encode(g: Graph) -> str:
    """Standard (headerless) graph6 string for graphs of order at most 62."""
    if g.p > 62:
        raise Graph6Error("orders above 62 are not supported")
    bits = []
    for col in range(1, g.p):
        column = g.rows[col]
        for row in range(col):
            bits.append((column >> row) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.p + _G6_MIN)]
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i:i + 6]:
            value = (value << 1) | bit
        out.append(chr(value + _G6_MIN))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a headerless graph6 string.

    Raises Graph6Error with a reason for empty input, bytes outside the
    printable graph6 range, truncated data, trailing garbage, or nonzero
    padding bits.
    """
    if not text:
        raise Graph6Error("empty graph6 string")
    first = ord(text[0])
    if first == _G6_MAX:
        raise Graph6Error("multi-byte order prefix not supported (order > 62)")
    if not _G6_MIN <= first <= _G6_MAX:
        raise Graph6Error(f"byte {first} outside graph6 range 63..126")
    p = first - _G6_MIN
    need_bits = p * (p - 1) // 2
    need_bytes = (need_bits + 5) // 6
    data = text[1:]
    if len(data) < need_bytes:
        raise Graph6Error(
            f"truncated graph6 data: expected {need_bytes} bytes, got {len(data)}"
        )
    if len(data) > need_bytes:
        raise Graph6Error(
            f"trailing garbage after graph6 data: expected {need_bytes} bytes, got {len(data)}"
        )
    bits: list[int] = []
    for ch in data:
        value = ord(ch)
        if not _G6_MIN <= value <= _G6_MAX:
            raise Graph6Error(f"byte {value} outside graph6 range 63..126")
        value -= _G6_MIN
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    for extra in bits[need_bits:]:
        if extra:
            raise Graph6Error("nonzero padding bits")
    rows = [0] * p
    i = 0
    for col in range(1, p):
        for row in range(col):
            if bits[i]:
                rows[col] |= 1 << row
                rows[row] |= 1 << col
            i += 1
    return Graph(p, tuple(rows))
