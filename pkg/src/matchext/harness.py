"""Verification harness: sweep graph populations against the thresholds,
the family characterizations, and the edge-monotonicity of the index.

Reports are plain data with a stable field order.  Counterexample lists
always contain canonical graph6 strings in sorted order, and the JSON
serialisation omits wall-clock timing, so two runs over the same inputs
are byte-identical regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from multiprocessing import Pool

from .enumeration import (
    MAX_BIPARTITE_SIDE,
    MAX_BUILTIN_ORDER,
    balanced_bipartite_classes,
    balanced_bipartite_graphs,
    connected_graph_classes,
    fixed_bipartition,
    graph_classes,
    labeled_graphs,
)
from .extremal import build_extremal, enumerate_family
from .graphs import Bipartition, Graph, bipartition_of, graph6_encode
from .indices import index_delta_for_edge
from .iso import canonical_form
from .properties import (
    BipExtendable,
    Extendable,
    PropertyKind,
    has_perfect_matching,
    holds,
    is_maximal_non_property,
    property_label,
)
from .thresholds import (
    THRESHOLD_REL_TOL,
    BipExtendTheorem,
    HypothesisError,
    TheoremId,
    check_hypotheses,
    closed_threshold,
    exact_threshold,
    exceptional_graphs,
    phi_interval,
    phi_value,
    theorem_order,
    theorem_property,
    theorem_to_dict,
)


@dataclass(frozen=True)
class GraphClassFilter:
    """Which graphs a sweep should visit."""

    order: int
    connected: bool = False
    perfect_matching: bool = False
    bipartite_balanced: bool = False
    dedup: bool = True


def _at_least(value: float, threshold: float) -> bool:
    return value >= threshold - THRESHOLD_REL_TOL * max(1.0, abs(threshold))


def enumerate_graphs(filt: GraphClassFilter) -> Iterator[Graph]:
    """Built-in generator behind the harness.

    Deduplicated mode serves canonical class representatives up to order 8
    (order 4 + 4 for the balanced bipartite population); labelled mode walks
    raw edge subsets and is limited to order 7.
    """
    if filt.order < 0:
        raise ValueError("order must be non-negative")
    if filt.bipartite_balanced:
        if filt.order % 2:
            raise ValueError("balanced bipartite graphs have even order")
        n = filt.order // 2
        if n > MAX_BIPARTITE_SIDE:
            raise ValueError(
                f"built-in bipartite enumeration is limited to side {MAX_BIPARTITE_SIDE}"
            )
        if filt.dedup:
            stream: Iterable[Graph] = balanced_bipartite_classes(n)
        else:
            stream = balanced_bipartite_graphs(n, connected=True)
        if filt.connected:
            pass  # the bipartite populations are connected already
    elif filt.dedup:
        if filt.order > MAX_BUILTIN_ORDER:
            raise ValueError(
                f"built-in enumeration is limited to order {MAX_BUILTIN_ORDER}; "
                "feed larger graphs in as graph6 streams"
            )
        stream = (
            connected_graph_classes(filt.order)
            if filt.connected
            else graph_classes(filt.order)
        )
    else:
        stream = labeled_graphs(filt.order, connected=filt.connected)
    for g in stream:
        if filt.perfect_matching and not has_perfect_matching(g):
            continue
        yield g


def matches_filter(g: Graph, filt: GraphClassFilter) -> bool:
    """Does an externally supplied graph belong to the filtered population?"""
    if g.p != filt.order:
        return False
    if filt.connected and not g.is_connected():
        return False
    if filt.bipartite_balanced:
        bipartition = bipartition_of(g)
        if bipartition is None:
            return False
        if not g.is_connected():
            return False
        half = {len(bipartition.left), len(bipartition.right)}
        if half != {filt.order // 2}:
            return False
    if filt.perfect_matching and not has_perfect_matching(g):
        return False
    return True


def theorem_filter(t: TheoremId) -> GraphClassFilter:
    order = theorem_order(t)
    if isinstance(t, BipExtendTheorem):
        return GraphClassFilter(order, connected=True, bipartite_balanced=True)
    prop = theorem_property(t)
    return GraphClassFilter(
        order, connected=True, perfect_matching=isinstance(prop, Extendable)
    )


@dataclass
class VerificationReport:
    kind: str
    subject: dict
    alphas: list[float]
    graphs_scanned: int
    results: list[dict]
    verdict: str
    wall_time_s: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return self.verdict in ("holds", "vacuous")

    def to_json_dict(self) -> dict:
        # Timing is deliberately left out: identical inputs must serialise
        # to identical bytes.
        return {
            "kind": self.kind,
            "subject": self.subject,
            "alphas": self.alphas,
            "graphs_scanned": self.graphs_scanned,
            "results": self.results,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            [
                "kind",
                "subject",
                "alpha",
                "graphs_scanned",
                "counterexamples",
                "verdict",
            ]
        )
        subject = json.dumps(self.subject, sort_keys=True)
        if not self.results:
            writer.writerow([self.kind, subject, "", self.graphs_scanned, "", self.verdict])
        for row in self.results:
            writer.writerow(
                [
                    self.kind,
                    subject,
                    row.get("alpha", ""),
                    self.graphs_scanned,
                    ";".join(row.get("counterexamples", [])),
                    row.get("verdict", self.verdict),
                ]
            )
        return out.getvalue()

    def to_text(self) -> str:
        lines = [
            f"{self.kind} {json.dumps(self.subject, sort_keys=True)}",
            f"graphs scanned: {self.graphs_scanned}",
        ]
        for row in self.results:
            if "alpha" in row:
                lines.append(f"  alpha={row['alpha']}: verdict={row['verdict']}")
                if row.get("counterexamples"):
                    lines.append(f"    counterexamples: {' '.join(row['counterexamples'])}")
            else:
                for key, value in row.items():
                    lines.append(f"  {key}: {value}")
        lines.append(f"verdict: {self.verdict}")
        lines.append(f"wall time: {self.wall_time_s:.3f}s")
        return "\n".join(lines) + "\n"


def _holds_chunk(payload: tuple[PropertyKind, list[Graph]]) -> list[bool]:
    prop, graphs = payload
    return [holds(g, prop) for g in graphs]


def _maximal_chunk(
    payload: tuple[PropertyKind, Bipartition | None, list[Graph]]
) -> list[bool]:
    prop, bipartition, graphs = payload
    return [is_maximal_non_property(g, prop, bipartition) for g in graphs]


def _parallel_map(worker, payloads: list, jobs: int) -> list:
    if jobs <= 1 or len(payloads) <= 1:
        return [worker(payload) for payload in payloads]
    with Pool(jobs) as pool:
        return pool.map(worker, payloads)


def _chunks(items: list, jobs: int) -> list[list]:
    if not items:
        return []
    size = max(1, -(-len(items) // (jobs * 4)))
    return [items[i : i + size] for i in range(0, len(items), size)]


class _PropertyCache:
    """Lazy, optionally parallel property evaluation over a graph list."""

    def __init__(self, graphs: Sequence[Graph], prop: PropertyKind, jobs: int):
        self.graphs = graphs
        self.prop = prop
        self.jobs = jobs
        self.known: dict[int, bool] = {}

    def prefetch(self, indices: Iterable[int]) -> None:
        todo = sorted(set(indices) - self.known.keys())
        if not todo:
            return
        chunks = _chunks(todo, self.jobs)
        payloads = [(self.prop, [self.graphs[i] for i in chunk]) for chunk in chunks]
        for chunk, flags in zip(chunks, _parallel_map(_holds_chunk, payloads, self.jobs)):
            self.known.update(zip(chunk, flags))

    def __call__(self, i: int) -> bool:
        if i not in self.known:
            self.known[i] = holds(self.graphs[i], self.prop)
        return self.known[i]


def verify_theorem(
    t: TheoremId,
    alphas: Sequence[float],
    source: Iterable[Graph] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check the theorem against every graph in its hypothesis class.

    For each exponent, every scanned graph whose index clears the exact
    (family) threshold must satisfy the property or be isomorphic to an
    exceptional graph; the printed threshold is scanned alongside and its
    disagreements are reported, not judged.  The bipartite theorem
    additionally gets a statement-versus-endpoint adjudication block.
    """
    check_hypotheses(t)
    started = time.perf_counter()
    alpha_list = [float(a) for a in alphas]
    if not alpha_list:
        raise ValueError("at least one exponent is required")
    filt = theorem_filter(t)
    if source is None:
        graphs = list(enumerate_graphs(filt))
    else:
        graphs = [g for g in source if matches_filter(g, filt)]
    prop = theorem_property(t)
    exceptional_keys = {canonical_form(g) for g in exceptional_graphs(t)}
    prop_cache = _PropertyCache(graphs, prop, jobs)
    degree_sequences = [tuple(sorted(g.degrees())) for g in graphs]
    canon_cache: dict[int, str] = {}

    def canon(i: int) -> str:
        if i not in canon_cache:
            canon_cache[i] = canonical_form(graphs[i])
        return canon_cache[i]

    is_bipartite_theorem = isinstance(t, BipExtendTheorem)
    results: list[dict] = []
    for a in alpha_list:
        threshold_report = exact_threshold(t, a)
        try:
            closed: float | None = closed_threshold(t, a)
        except HypothesisError:
            closed = None
        value_cache: dict[tuple[int, ...], float] = {}
        values: list[float] = []
        for ds in degree_sequences:
            v = value_cache.get(ds)
            if v is None:
                v = float(sum(d**a for d in ds)) if a != 1 else float(sum(ds))
                value_cache[ds] = v
            values.append(v)
        above_exact = [i for i, v in enumerate(values) if _at_least(v, threshold_report.exact)]
        above_closed = (
            None
            if closed is None
            else [i for i, v in enumerate(values) if _at_least(v, closed)]
        )
        needed = set(above_exact)
        if above_closed:
            needed.update(above_closed)
        prop_cache.prefetch(needed)

        def offenders(indices: list[int]) -> tuple[list[str], list[str]]:
            bad, excused = set(), set()
            for i in indices:
                if prop_cache(i):
                    continue
                key = canon(i)
                if key in exceptional_keys:
                    excused.add(key)
                else:
                    bad.add(key)
            return sorted(bad), sorted(excused)

        counterexamples, exceptional_matches = offenders(above_exact)
        closed_counterexamples = (
            None if above_closed is None else offenders(above_closed)[0]
        )
        row = {
            "alpha": a,
            "exact_threshold": threshold_report.to_json_dict(),
            "closed_threshold": closed,
            "graphs_above_exact": len(above_exact),
            "graphs_above_closed": None if above_closed is None else len(above_closed),
            "counterexamples": counterexamples,
            "closed_counterexamples": closed_counterexamples,
            "exceptional_matches": exceptional_matches,
            "verdict": "vacuous" if not graphs else ("holds" if not counterexamples else "fails"),
        }
        if is_bipartite_theorem:
            row["adjudication"] = _adjudicate_bipartite(
                t, a, graphs, values, prop_cache, canon, exceptional_keys
            )
        results.append(row)
    verdict = _merge_verdicts(row["verdict"] for row in results)
    return VerificationReport(
        kind="theorem",
        subject=theorem_to_dict(t),
        alphas=alpha_list,
        graphs_scanned=len(graphs),
        results=results,
        verdict=verdict,
        wall_time_s=time.perf_counter() - started,
    )


def _adjudicate_bipartite(
    t: BipExtendTheorem,
    a: float,
    graphs: list[Graph],
    values: list[float],
    prop_cache: _PropertyCache,
    canon,
    exceptional_keys: set[str],
) -> dict:
    """Compare the printed statement threshold with the low-endpoint family
    value and record which one the scanned population supports."""
    stated = closed_threshold(t, a)
    lo, _hi = phi_interval(t)
    endpoint = phi_value(t, lo, a)
    order = sorted(range(len(graphs)), key=lambda i: -values[i])
    sharp = None
    for i in order:
        if not prop_cache(i):
            sharp = values[i]
            break
    tol = THRESHOLD_REL_TOL * max(1.0, abs(sharp if sharp is not None else 1.0))
    if sharp is None:
        sharp_matches = "neither"
    else:
        close_stated = abs(sharp - stated) <= tol
        close_endpoint = abs(sharp - endpoint) <= tol
        sharp_matches = {
            (True, True): "both",
            (True, False): "statement",
            (False, True): "proof_endpoint",
            (False, False): "neither",
        }[(close_stated, close_endpoint)]

    def survives(threshold: float) -> tuple[bool, list[str]]:
        bad = set()
        for i, v in enumerate(values):
            if not _at_least(v, threshold):
                continue
            if prop_cache(i):
                continue
            key = canon(i)
            if key not in exceptional_keys:
                bad.add(key)
        return not bad, sorted(bad)

    stated_ok, stated_bad = survives(stated)
    endpoint_ok, endpoint_bad = survives(endpoint)
    return {
        "statement_threshold": stated,
        "proof_endpoint_threshold": endpoint,
        "sharp_threshold": sharp,
        "sharp_matches": sharp_matches,
        "statement_survives": stated_ok,
        "statement_counterexamples": stated_bad,
        "proof_endpoint_survives": endpoint_ok,
        "proof_endpoint_counterexamples": endpoint_bad,
    }


def _merge_verdicts(verdicts: Iterable[str]) -> str:
    merged = "vacuous"
    for verdict in verdicts:
        if verdict == "fails":
            return "fails"
        if verdict == "holds":
            merged = "holds"
    return merged


def characterization_filter(prop: PropertyKind, order: int) -> GraphClassFilter:
    if isinstance(prop, BipExtendable):
        return GraphClassFilter(order, connected=True, bipartite_balanced=True)
    if isinstance(prop, Extendable):
        return GraphClassFilter(order, connected=True, perfect_matching=True)
    return GraphClassFilter(order, connected=True)


def verify_characterization(
    prop: PropertyKind,
    order: int,
    source: Iterable[Graph] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Exhaustively compare maximal non-property graphs with the family.

    The verdict holds when the two sets coincide up to isomorphism; any
    graph on the wrong side is listed by canonical graph6 string.
    """
    started = time.perf_counter()
    filt = characterization_filter(prop, order)
    if source is None:
        graphs = list(enumerate_graphs(filt))
    else:
        graphs = [g for g in source if matches_filter(g, filt)]
    bipartition = (
        fixed_bipartition(order // 2) if isinstance(prop, BipExtendable) else None
    )
    if bipartition is not None and source is not None:
        # External bipartite graphs may not use the fixed labelling.
        flags = [
            is_maximal_non_property(g, prop, bipartition_of(g)) for g in graphs
        ]
    else:
        chunks = _chunks(list(range(len(graphs))), jobs)
        payloads = [
            (prop, bipartition, [graphs[i] for i in chunk]) for chunk in chunks
        ]
        flag_map: dict[int, bool] = {}
        for chunk, chunk_flags in zip(
            chunks, _parallel_map(_maximal_chunk, payloads, jobs)
        ):
            flag_map.update(zip(chunk, chunk_flags))
        flags = [flag_map[i] for i in range(len(graphs))]
    found = {canonical_form(g) for g, flag in zip(graphs, flags) if flag}
    specs = list(enumerate_family(prop, order))
    family = {canonical_form(build_extremal(spec)) for spec in specs}
    missing = sorted(found - family)
    unexpected = sorted(family - found)
    verdict = "holds" if not missing and not unexpected else "fails"
    result = {
        "maximal_found": sorted(found),
        "family": sorted(family),
        "family_spec_count": len(specs),
        "missing_from_family": missing,
        "unexpected_in_family": unexpected,
        "counterexamples": sorted(set(missing) | set(unexpected)),
        "verdict": verdict,
    }
    return VerificationReport(
        kind="characterization",
        subject={"property": property_label(prop), "order": order},
        alphas=[],
        graphs_scanned=len(graphs),
        results=[result],
        verdict=verdict,
        wall_time_s=time.perf_counter() - started,
    )


def verify_monotonicity(
    order: int,
    alphas: Sequence[float],
    source: Iterable[Graph] | None = None,
) -> VerificationReport:
    """Check the sign of the one-edge index delta over a whole order.

    Positive exponents must increase the index with every added edge
    (by exactly 2 when alpha = 1); negative exponents must decrease it
    whenever both endpoints are already non-isolated.
    """
    started = time.perf_counter()
    alpha_list = [float(a) for a in alphas]
    if not alpha_list:
        raise ValueError("at least one exponent is required")
    graphs = (
        list(enumerate_graphs(GraphClassFilter(order)))
        if source is None
        else [g for g in source if g.p == order]
    )
    results = []
    for a in alpha_list:
        violations: list[dict] = []
        pairs_checked = 0
        for g in graphs:
            for u, v in g.non_edges():
                if a < 0 and (g.degree(u) == 0 or g.degree(v) == 0):
                    continue
                delta = index_delta_for_edge(g, u, v, a)
                pairs_checked += 1
                bad = (
                    delta <= 0
                    if a > 0
                    else delta >= 0
                ) or (a == 1 and delta != 2.0)
                if bad:
                    violations.append(
                        {
                            "graph": graph6_encode(g),
                            "edge": [u, v],
                            "delta": delta,
                        }
                    )
        results.append(
            {
                "alpha": a,
                "pairs_checked": pairs_checked,
                "counterexamples": [json.dumps(v, sort_keys=True) for v in violations],
                "verdict": "vacuous"
                if pairs_checked == 0
                else ("holds" if not violations else "fails"),
            }
        )
    verdict = _merge_verdicts(row["verdict"] for row in results)
    return VerificationReport(
        kind="monotonicity",
        subject={"order": order},
        alphas=alpha_list,
        graphs_scanned=len(graphs),
        results=results,
        verdict=verdict,
        wall_time_s=time.perf_counter() - started,
    )
