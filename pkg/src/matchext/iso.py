"""Graph isomorphism utilities sized for exhaustive small-order sweeps.

Two independent routes are provided on purpose: a canonical relabelling
(used to deduplicate enumeration streams and as a dictionary key) and a
direct backtracking matcher with degree pruning.  The test suite plays the
two against each other.
"""

from __future__ import annotations

from .graphs import Graph, graph6_encode, relabel


def canonical_relabel(g: Graph) -> Graph:
    """A canonical isomorph of ``g``.

    The labelling maximises the graph6 bit string (column-major upper
    triangle) over all vertex orders.  The search is level-synchronous:
    partial orders that cannot reach the maximal bit prefix are discarded,
    and candidates that are interchangeable with an already-kept candidate
    (identical adjacency outside the pair) are collapsed, which tames the
    symmetric cases such as complete multipartite graphs.
    """
    p = g.p
    if p <= 1:
        return g
    rows = g.rows
    all_mask = (1 << p) - 1
    # branch = (placed vertices in order, mask of placed vertices)
    branches: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for _level in range(p):
        best_key = -1
        sieved: list[tuple[int, tuple[int, ...], int, list[int]]] = []
        for placed, pmask in branches:
            local_best = -1
            local: list[int] = []
            m = all_mask & ~pmask
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                rv = rows[v]
                key = 0
                for u in placed:
                    key = (key << 1) | ((rv >> u) & 1)
                if key > local_best:
                    local_best = key
                    local = [v]
                elif key == local_best:
                    local.append(v)
            sieved.append((local_best, placed, pmask, local))
            if local_best > best_key:
                best_key = local_best
        next_branches: list[tuple[tuple[int, ...], int]] = []
        for local_best, placed, pmask, local in sieved:
            if local_best != best_key:
                continue
            reps: list[int] = []
            for v in local:
                duplicate = False
                for w in reps:
                    between = all_mask & ~pmask & ~(1 << v) & ~(1 << w)
                    if rows[v] & between == rows[w] & between:
                        duplicate = True
                        break
                if not duplicate:
                    reps.append(v)
            for v in reps:
                next_branches.append((placed + (v,), pmask | (1 << v)))
        branches = next_branches
    return relabel(g, branches[0][0])


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical isomorph; equal iff isomorphic."""
    return graph6_encode(canonical_relabel(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree-sequence pruning.

    Independent of canonical_form; intended for orders up to about 10.
    """
    if g.p != h.p:
        return False
    gdeg = [r.bit_count() for r in g.rows]
    hdeg = [r.bit_count() for r in h.rows]
    if sorted(gdeg) != sorted(hdeg):
        return False
    # Map high-degree vertices first; they are the most constrained.
    order = sorted(range(g.p), key=lambda v: -gdeg[v])
    image = [-1] * g.p
    used = [False] * h.p

    def extend(i: int) -> bool:
        if i == g.p:
            return True
        v = order[i]
        for w in range(h.p):
            if used[w] or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((g.rows[v] >> u) & 1) != ((h.rows[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)
