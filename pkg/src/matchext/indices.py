"""Degree-power sum index: sum of d(v)^alpha over all vertices.

alpha = 1 doubles the edge count, alpha = 2 is the first Zagreb index and
alpha = 3 the forgotten index.  For integer alpha >= 1 the sum is computed
in exact integer arithmetic so that corollary cross-checks at alpha = 1
compare exactly; the float path is used otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class Alpha:
    """A validated exponent: finite and nonzero."""

    value: float

    def __post_init__(self) -> None:
        value = float(self.value)
        if value == 0:
            raise ValueError("exponent must be nonzero")
        if not math.isfinite(value):
            raise ValueError("exponent must be finite")

    def __float__(self) -> float:
        return float(self.value)


def _coerce_alpha(alpha: Alpha | float | int) -> float:
    a = float(alpha)
    if a == 0:
        raise ValueError("exponent must be nonzero")
    if not math.isfinite(a):
        raise ValueError("exponent must be finite")
    return a


def _integer_exponent(a: float) -> int | None:
    if a >= 1 and a.is_integer():
        return int(a)
    return None


def zeroth_order_randic(g: Graph, alpha: Alpha | float | int) -> float:
    """Sum of d(v)^alpha over the vertices of ``g``.

    Raises ValueError for a zero exponent, or for a negative exponent on a
    graph with an isolated vertex (0^alpha is undefined there).  Vertices of
    degree 0 contribute 0 when alpha > 0.
    """
    a = _coerce_alpha(alpha)
    degrees = g.degrees()
    if a < 0 and any(d == 0 for d in degrees):
        raise ValueError("negative exponent on a graph with an isolated vertex")
    ia = _integer_exponent(a)
    if ia is not None:
        return float(sum(d**ia for d in degrees))
    return float(sum(d**a for d in degrees))


def zeroth_order_randic_exact(g: Graph, alpha: int) -> int:
    """Exact integer value of the index for integer alpha >= 1."""
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError("exact path requires an integer exponent >= 1")
    return sum(d**alpha for d in g.degrees())


def index_delta_for_edge(g: Graph, u: int, v: int, alpha: Alpha | float | int) -> float:
    """Index change caused by adding the missing edge (u, v).

    Equals (d_u+1)^alpha + (d_v+1)^alpha - d_u^alpha - d_v^alpha.  Positive
    for alpha > 0; exactly 2 at alpha = 1; negative for alpha < 0 when both
    endpoints already have a neighbour.
    """
    a = _coerce_alpha(alpha)
    if u == v:
        raise ValueError("endpoints must differ")
    g._check_vertex(u)
    g._check_vertex(v)
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    du, dv = g.degree(u), g.degree(v)
    if a < 0 and (du == 0 or dv == 0):
        raise ValueError("negative exponent with an isolated endpoint")
    ia = _integer_exponent(a)
    if ia is not None:
        return float((du + 1) ** ia + (dv + 1) ** ia - du**ia - dv**ia)
    return (du + 1) ** a + (dv + 1) ** a - du**a - dv**a
