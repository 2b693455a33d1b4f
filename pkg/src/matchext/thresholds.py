"""Index thresholds that force matching extendability properties.

For each theorem the module offers two numbers: ``closed_threshold``
evaluates the threshold formula exactly as printed in the source material,
while ``exact_threshold`` maximises the index over the enumerated family of
maximal non-property graphs.  The two usually agree; where they do not the
gap is surfaced as a report field rather than silently repaired.  The
printed perfect-matching branch value and the alpha = 1 perfect-matching
corollary are known to disagree with the family maximum, and dedicated
report helpers expose those gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .extremal import (
    BicliqueDeletedSpec,
    ExtremalSpec,
    HubJoinSpec,
    build_extremal,
    enumerate_family,
)
from .graphs import Graph
from .indices import zeroth_order_randic
from .iso import canonical_form
from .properties import (
    PM,
    BipExtendable,
    Extendable,
    FactorCritical,
    NKD,
    PropertyKind,
)

#: Relative tolerance for threshold equality and tightness comparisons.
THRESHOLD_REL_TOL = 1e-9


class HypothesisError(ValueError):
    """A theorem was queried outside the premises it is stated under."""


@dataclass(frozen=True)
class BipExtendTheorem:
    """Balanced bipartite graphs of order 2n: index forcing k-extendability."""

    n: int
    k: int


@dataclass(frozen=True)
class ExtendableTheorem:
    """Connected graphs of order 2n with a perfect matching: index forcing
    k-extendability."""

    n: int
    k: int


@dataclass(frozen=True)
class PerfectMatchingTheorem:
    """Connected graphs of order 2n: index forcing a perfect matching."""

    n: int


@dataclass(frozen=True)
class FactorCriticalTheorem:
    """Connected graphs of order p: index forcing k-factor-criticality."""

    p: int
    k: int


@dataclass(frozen=True)
class NKDTheorem:
    """Connected graphs of order p: index forcing the (n, k, d) deletion
    extendability property."""

    p: int
    n: int
    k: int
    d: int


TheoremId = Union[
    BipExtendTheorem,
    ExtendableTheorem,
    PerfectMatchingTheorem,
    FactorCriticalTheorem,
    NKDTheorem,
]


@dataclass(frozen=True)
class ThresholdReport:
    closed_form: float | None
    exact: float
    argmax_spec: ExtremalSpec
    discrepancy: float | None

    def to_json_dict(self) -> dict:
        return {
            "closed_form": self.closed_form,
            "exact": self.exact,
            "argmax_spec": spec_to_dict(self.argmax_spec),
            "discrepancy": self.discrepancy,
        }


def spec_to_dict(spec: ExtremalSpec) -> dict:
    if isinstance(spec, HubJoinSpec):
        return {
            "kind": "hub_join",
            "hub": spec.hub,
            "odd_clique_halves": list(spec.odd_clique_halves),
        }
    return {"kind": "biclique_deleted", "n": spec.n, "s": spec.s, "t": spec.t}


def theorem_to_dict(t: TheoremId) -> dict:
    if isinstance(t, BipExtendTheorem):
        return {"id": "bipext", "n": t.n, "k": t.k}
    if isinstance(t, ExtendableTheorem):
        return {"id": "ext", "n": t.n, "k": t.k}
    if isinstance(t, PerfectMatchingTheorem):
        return {"id": "pm", "n": t.n}
    if isinstance(t, FactorCriticalTheorem):
        return {"id": "fc", "p": t.p, "k": t.k}
    return {"id": "nkd", "p": t.p, "n": t.n, "k": t.k, "d": t.d}


def theorem_order(t: TheoremId) -> int:
    if isinstance(t, (BipExtendTheorem, ExtendableTheorem, PerfectMatchingTheorem)):
        return 2 * t.n
    return t.p


def theorem_property(t: TheoremId) -> PropertyKind:
    if isinstance(t, BipExtendTheorem):
        return BipExtendable(t.k)
    if isinstance(t, ExtendableTheorem):
        return Extendable(t.k)
    if isinstance(t, PerfectMatchingTheorem):
        return PM()
    if isinstance(t, FactorCriticalTheorem):
        return FactorCritical(t.k)
    return NKD(t.n, t.k, t.d)


def check_hypotheses(t: TheoremId) -> None:
    """Raise HypothesisError when the theorem premises fail."""
    if isinstance(t, BipExtendTheorem):
        if t.n < 3:
            raise HypothesisError("bipartite theorem needs n >= 3")
        if not 0 <= t.k <= t.n - 1:
            raise HypothesisError(f"extendability level must lie in 0..{t.n - 1}")
    elif isinstance(t, ExtendableTheorem):
        if t.n < 2:
            raise HypothesisError("theorem needs n >= 2")
        if not 1 <= t.k <= t.n - 1:
            raise HypothesisError(f"extendability level must lie in 1..{t.n - 1}")
    elif isinstance(t, PerfectMatchingTheorem):
        if t.n < 2:
            raise HypothesisError("theorem needs n >= 2")
    elif isinstance(t, FactorCriticalTheorem):
        if t.k < 1:
            raise HypothesisError("deletion count must be positive")
        if (t.p - t.k) % 2:
            raise HypothesisError("deletion count and order must have equal parity")
        if t.p < t.k + 2:
            raise HypothesisError("order must be at least k + 2")
    else:
        if min(t.n, t.k, t.d) < 1:
            raise HypothesisError("theorem needs n, k, d >= 1")
        if (t.p - t.n - t.d) % 2:
            raise HypothesisError("order + n + d must be even")
        if t.p < t.n + 2 * t.k + t.d + 2:
            raise HypothesisError("order below n + 2k + d + 2")


def _check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not a > 0:
        raise HypothesisError("thresholds are stated for exponents > 0 only")
    return a


def _pow(base: int, alpha: float) -> float | int:
    """base^alpha with an exact integer path for integer alpha >= 1."""
    if base < 0:
        raise ValueError("negative base in a threshold formula")
    if alpha >= 1 and float(alpha).is_integer():
        return base ** int(alpha)
    return float(base) ** alpha


# -- printed formula components ------------------------------------------


def bip_threshold_printed(n: int, k: int, alpha: float) -> float:
    """The bipartite threshold exactly as stated (k = 0 and k >= 1 forms)."""
    if k == 0:
        return float((n - 1) * _pow(n, alpha) + (n - 1) * _pow(n - 2, alpha) + 2)
    return float(
        (n + k - 1) * _pow(n, alpha)
        + 2 * _pow(k + 1, alpha)
        + (n - k - 1) * _pow(n - 2, alpha)
    )


def beta_extendable(n: int, k: int, alpha: float) -> float:
    return float(
        (n + k - 1) * _pow(2 * n - 1, alpha) + (n - k + 1) * _pow(n + k - 1, alpha)
    )


def zeta_extendable(n: int, k: int, alpha: float) -> float:
    return float(
        2 * k * _pow(2 * n - 1, alpha)
        + _pow(2 * k, alpha)
        + (2 * n - 2 * k - 1) * _pow(2 * n - 2, alpha)
    )


def beta_pm_printed(n: int, alpha: float) -> float:
    """The perfect-matching branch value as printed; its base 2n-4 is a
    documented misprint for 2n-3 and is deliberately left uncorrected."""
    return float(_pow(2 * n - 1, alpha) + (2 * n - 3) * _pow(2 * n - 4, alpha) + 2)


def zeta_pm(n: int, alpha: float) -> float:
    return float((n - 1) * _pow(2 * n - 1, alpha) + (n + 1) * _pow(n - 1, alpha))


def beta_factor_critical(p: int, k: int, alpha: float) -> float:
    hub = (p + k) // 2 - 1
    return float(hub * _pow(p - 1, alpha) + ((p - k) // 2 + 1) * _pow(hub, alpha))


def zeta_factor_critical(p: int, k: int, alpha: float) -> float:
    return float(
        k * _pow(p - 1, alpha) + _pow(k, alpha) + (p - k - 1) * _pow(p - 2, alpha)
    )


def nkd_profile_value(p: int, n: int, k: int, d: int, s: int, alpha: float) -> float:
    """Index of the family member with hub n + 2k + s and one fat clique."""
    return float(
        (n + 2 * k + s) * _pow(p - 1, alpha)
        + (s + d + 1) * _pow(n + 2 * k + s, alpha)
        + (p - n - 2 * k - d - 2 * s - 1) * _pow(p - d - s - 2, alpha)
    )


def closed_threshold(t: TheoremId, alpha: float) -> float:
    """The printed threshold for the theorem at the given exponent.

    For the deletion-extendability theorem the printed form is only claimed
    for alpha >= 1 or, when 0 < alpha < 1, for d <= 2(n + 2k)/(1 - alpha) - 1;
    outside that regime this raises HypothesisError.
    """
    check_hypotheses(t)
    a = _check_alpha(alpha)
    if isinstance(t, BipExtendTheorem):
        return bip_threshold_printed(t.n, t.k, a)
    if isinstance(t, ExtendableTheorem):
        return max(beta_extendable(t.n, t.k, a), zeta_extendable(t.n, t.k, a))
    if isinstance(t, PerfectMatchingTheorem):
        return max(beta_pm_printed(t.n, a), zeta_pm(t.n, a))
    if isinstance(t, FactorCriticalTheorem):
        return max(
            beta_factor_critical(t.p, t.k, a), zeta_factor_critical(t.p, t.k, a)
        )
    if a < 1 and t.d > 2 * (t.n + 2 * t.k) / (1 - a) - 1:
        raise HypothesisError(
            "closed deletion-extendability threshold needs alpha >= 1 or "
            "d <= 2(n + 2k)/(1 - alpha) - 1"
        )
    s_max = (t.p - t.n - 2 * t.k - t.d) // 2 - 1
    return max(
        nkd_profile_value(t.p, t.n, t.k, t.d, s_max, a),
        nkd_profile_value(t.p, t.n, t.k, t.d, 0, a),
    )


def exact_threshold(t: TheoremId, alpha: float) -> ThresholdReport:
    """Maximum index over the enumerated maximal non-property family.

    The enumeration order (s ascending, concentrated compositions first,
    strict improvement to replace) pins the reported argmax to an interval
    endpoint with a concentrated clique profile.
    """
    check_hypotheses(t)
    a = _check_alpha(alpha)
    best = float("-inf")
    best_spec: ExtremalSpec | None = None
    for spec in enumerate_family(theorem_property(t), theorem_order(t)):
        value = zeroth_order_randic(build_extremal(spec), a)
        if value > best:
            best = value
            best_spec = spec
    if best_spec is None:
        raise HypothesisError("the extremal family is empty at this order")
    try:
        closed: float | None = closed_threshold(t, a)
    except HypothesisError:
        closed = None
    discrepancy = None if closed is None else closed - best
    return ThresholdReport(closed, best, best_spec, discrepancy)


# -- profile functions over the family parameter -------------------------


def phi_interval(t: TheoremId) -> tuple[int, int]:
    """Integer endpoints of the family parameter interval for the theorem."""
    check_hypotheses(t)
    if isinstance(t, BipExtendTheorem):
        return (2, t.n - 1) if t.k == 0 else (1, t.n - t.k)
    if isinstance(t, ExtendableTheorem):
        return (0, t.n - t.k - 1)
    if isinstance(t, PerfectMatchingTheorem):
        return (1, t.n - 1)
    if isinstance(t, FactorCriticalTheorem):
        return (0, (t.p - t.k) // 2 - 1)
    return (0, (t.p - t.n - 2 * t.k - t.d) // 2 - 1)


def phi_value(t: TheoremId, x: int, alpha: float) -> float:
    """Index profile of the family member at parameter ``x``.

    Matches the index of the concentrated family member, so the interval
    endpoints reproduce the printed branch values (up to the documented
    perfect-matching misprint).
    """
    a = _check_alpha(alpha)
    if isinstance(t, BipExtendTheorem):
        n, k = t.n, t.k
        return float(
            x * _pow(k + x - 1, a)
            + (n + k - 1) * _pow(n, a)
            + (n - k - x + 1) * _pow(n - x, a)
        )
    if isinstance(t, ExtendableTheorem):
        n, k = t.n, t.k
        return float(
            (x + 2 * k) * _pow(2 * n - 1, a)
            + (x + 1) * _pow(x + 2 * k, a)
            + (2 * n - 2 * k - 2 * x - 1) * _pow(2 * n - x - 2, a)
        )
    if isinstance(t, PerfectMatchingTheorem):
        n = t.n
        return float(
            x * _pow(2 * n - 1, a)
            + (x + 1) * _pow(x, a)
            + (2 * n - 2 * x - 1) * _pow(2 * n - x - 2, a)
        )
    if isinstance(t, FactorCriticalTheorem):
        p, k = t.p, t.k
        return float(
            (x + k) * _pow(p - 1, a)
            + (x + 1) * _pow(x + k, a)
            + (p - k - 2 * x - 1) * _pow(p - x - 2, a)
        )
    return nkd_profile_value(t.p, t.n, t.k, t.d, x, a)


@dataclass(frozen=True)
class ConvexityDiagnostic:
    ok: bool
    interval: tuple[int, int]
    values: tuple[float, ...]
    min_second_difference: float
    endpoint_is_max: bool


def phi_convexity_check(t: TheoremId, alpha: float) -> ConvexityDiagnostic:
    """Numeric convexity and endpoint-maximum check on the integer grid.

    Second differences must be non-negative and the grid maximum must sit at
    an interval endpoint, both up to a relative tolerance.  This replaces
    the analytic second-derivative arguments.
    """
    lo, hi = phi_interval(t)
    values = tuple(phi_value(t, x, alpha) for x in range(lo, hi + 1))
    scale = max((abs(v) for v in values), default=1.0)
    tol = THRESHOLD_REL_TOL * max(scale, 1.0)
    if len(values) >= 3:
        min_second = min(
            values[i - 1] - 2 * values[i] + values[i + 1]
            for i in range(1, len(values) - 1)
        )
    else:
        min_second = 0.0
    endpoint_is_max = (
        not values or max(values) <= max(values[0], values[-1]) + tol
    )
    ok = min_second >= -tol and endpoint_is_max
    return ConvexityDiagnostic(ok, (lo, hi), values, min_second, endpoint_is_max)


# -- exceptional graphs ---------------------------------------------------


def exceptional_specs(t: TheoremId) -> list[ExtremalSpec]:
    """Family specs of the graphs excluded by the theorem's "unless" clause."""
    check_hypotheses(t)
    if isinstance(t, BipExtendTheorem):
        if t.k == 0:
            return [BicliqueDeletedSpec(t.n, 2, t.n - 1)]
        return [BicliqueDeletedSpec(t.n, 1, t.n - t.k)]
    if isinstance(t, ExtendableTheorem):
        n, k = t.n, t.k
        return [
            HubJoinSpec(n + k - 1, (0,) * (n - k + 1)),
            HubJoinSpec(2 * k, (n - k - 1, 0)),
        ]
    if isinstance(t, PerfectMatchingTheorem):
        n = t.n
        return [
            HubJoinSpec(n - 1, (0,) * (n + 1)),
            HubJoinSpec(1, (n - 2, 0, 0)),
        ]
    if isinstance(t, FactorCriticalTheorem):
        p, k = t.p, t.k
        return [
            HubJoinSpec((p + k) // 2 - 1, (0,) * ((p - k) // 2 + 1)),
            HubJoinSpec(k, ((p - k) // 2 - 1, 0)),
        ]
    p, n, k, d = t.p, t.n, t.k, t.d
    return [
        HubJoinSpec((p + n + 2 * k - d) // 2 - 1, (0,) * ((p - n - 2 * k + d) // 2 + 1)),
        HubJoinSpec(n + 2 * k, ((p - n - 2 * k - d) // 2 - 1,) + (0,) * (d + 1)),
    ]


def exceptional_graphs(t: TheoremId) -> list[Graph]:
    """The excluded graphs themselves, deduplicated up to isomorphism."""
    graphs: list[Graph] = []
    seen: set[str] = set()
    for spec in exceptional_specs(t):
        g = build_extremal(spec)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            graphs.append(g)
    return graphs


# -- documented discrepancies ---------------------------------------------


def pm_beta_branch_report(n: int, alpha: float) -> dict:
    """Printed perfect-matching branch value versus the family value.

    The printed branch uses base 2n - 4 where the family member at the low
    interval endpoint has 2n - 3 vertices of degree 2n - 3; the gap is
    reported, never patched.
    """
    check_hypotheses(PerfectMatchingTheorem(n))
    a = _check_alpha(alpha)
    printed = beta_pm_printed(n, a)
    family = phi_value(PerfectMatchingTheorem(n), 1, a)
    return {"printed": printed, "family": family, "gap": printed - family}


def pm_corollary_edge_bound_printed(n: int) -> int:
    """Edge-count bound of the alpha = 1 perfect-matching corollary as
    printed, including its inconsistent middle cases."""
    if n < 2:
        raise HypothesisError("corollary needs n >= 2")
    if n == 2 or n >= 5:
        return (2 * n - 3) * (n - 2) + 2
    return 3 * n * (n - 1)


def pm_corollary_report(n: int) -> dict:
    """Printed alpha = 1 edge bound versus the sharp bound from the family.

    The sharp bound is half the exact alpha = 1 threshold (the index doubles
    the edge count).  At n = 3 the printed value 3n(n-1) = 18 already
    exceeds the 15 possible edges on six vertices; the gap is reported.
    """
    report = exact_threshold(PerfectMatchingTheorem(n), 1.0)
    printed = pm_corollary_edge_bound_printed(n)
    sharp = report.exact / 2
    return {"printed": float(printed), "sharp": sharp, "gap": printed - sharp}
