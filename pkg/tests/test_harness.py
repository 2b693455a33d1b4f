"""Harness sweeps: population census, theorem verification, the bipartite
adjudication block, characterization checks, and report serialization."""

import json

import pytest

from matchext.graphs import (
    complete_graph,
    empty_graph,
    from_edges,
    graph6_decode,
    join,
    union,
)
from matchext.harness import (
    GraphClassFilter,
    enumerate_graphs,
    matches_filter,
    theorem_filter,
    verify_characterization,
    verify_monotonicity,
    verify_theorem,
)
from matchext.indices import zeroth_order_randic
from matchext.iso import canonical_form
from matchext.properties import PM, BipExtendable, Extendable, holds
from matchext.thresholds import (
    BipExtendTheorem,
    ExtendableTheorem,
    FactorCriticalTheorem,
    NKDTheorem,
    PerfectMatchingTheorem,
)


def _count(filt):
    return sum(1 for _ in enumerate_graphs(filt))


def test_census_graph_classes():
    # classes up to isomorphism, then connected classes, per order
    expect_all = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    expect_connected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    for p, want in expect_all.items():
        assert _count(GraphClassFilter(p)) == want
    for p, want in expect_connected.items():
        assert _count(GraphClassFilter(p, connected=True)) == want


def test_census_order_eight():
    assert _count(GraphClassFilter(8)) == 12346
    assert _count(GraphClassFilter(8, connected=True)) == 11117


def test_census_perfect_matching_filter():
    assert _count(GraphClassFilter(4, connected=True, perfect_matching=True)) == 5
    assert _count(GraphClassFilter(6, connected=True, perfect_matching=True)) == 95
    # odd order: nothing has a perfect matching
    assert _count(GraphClassFilter(5, perfect_matching=True)) == 0


def test_census_labeled():
    assert _count(GraphClassFilter(3, dedup=False)) == 8
    assert _count(GraphClassFilter(4, dedup=False)) == 64
    assert _count(GraphClassFilter(4, connected=True, dedup=False)) == 38


def test_census_balanced_bipartite():
    assert _count(GraphClassFilter(6, bipartite_balanced=True)) == 10
    assert _count(GraphClassFilter(8, bipartite_balanced=True)) == 93


def test_enumeration_limits():
    with pytest.raises(ValueError, match="limited to order 8"):
        list(enumerate_graphs(GraphClassFilter(9)))
    with pytest.raises(ValueError, match="limited to order 7"):
        list(enumerate_graphs(GraphClassFilter(8, dedup=False)))
    with pytest.raises(ValueError, match="even order"):
        list(enumerate_graphs(GraphClassFilter(5, bipartite_balanced=True)))
    with pytest.raises(ValueError, match="side"):
        list(enumerate_graphs(GraphClassFilter(10, bipartite_balanced=True)))


def _cycle(p):
    return from_edges(p, [(i, (i + 1) % p) for i in range(p)])


def test_matches_filter():
    c6 = _cycle(6)
    assert matches_filter(c6, GraphClassFilter(6, connected=True))
    assert matches_filter(c6, GraphClassFilter(6, bipartite_balanced=True))
    assert matches_filter(c6, GraphClassFilter(6, perfect_matching=True))
    assert not matches_filter(c6, GraphClassFilter(8))
    assert not matches_filter(_cycle(5), GraphClassFilter(5, perfect_matching=True))
    # an odd cycle is not bipartite; a star is bipartite but unbalanced
    assert not matches_filter(_cycle(5), GraphClassFilter(5, bipartite_balanced=True))
    star = join(complete_graph(1), empty_graph(3))
    assert not matches_filter(star, GraphClassFilter(4, bipartite_balanced=True))


def test_theorem_filters():
    assert theorem_filter(PerfectMatchingTheorem(3)) == GraphClassFilter(6, connected=True)
    assert theorem_filter(ExtendableTheorem(3, 1)) == GraphClassFilter(
        6, connected=True, perfect_matching=True
    )
    assert theorem_filter(BipExtendTheorem(3, 1)) == GraphClassFilter(
        6, connected=True, bipartite_balanced=True
    )
    assert theorem_filter(FactorCriticalTheorem(7, 1)) == GraphClassFilter(7, connected=True)
    assert theorem_filter(NKDTheorem(8, 1, 1, 1)) == GraphClassFilter(8, connected=True)


def test_verify_theorem_pm_frozen():
    report = verify_theorem(PerfectMatchingTheorem(3), [1.0])
    assert report.kind == "theorem"
    assert report.subject == {"id": "pm", "n": 3}
    assert report.graphs_scanned == 112
    assert report.verdict == "holds"
    assert report.ok
    (row,) = report.results
    assert sorted(row) == [
        "alpha",
        "closed_counterexamples",
        "closed_threshold",
        "counterexamples",
        "exact_threshold",
        "exceptional_matches",
        "graphs_above_closed",
        "graphs_above_exact",
        "verdict",
    ]
    assert row["alpha"] == 1.0
    assert row["exact_threshold"]["exact"] == 18.0
    assert row["closed_threshold"] == 18.0
    assert row["graphs_above_exact"] == 52
    assert row["graphs_above_closed"] == 52
    assert row["counterexamples"] == []
    assert row["closed_counterexamples"] == []
    assert row["exceptional_matches"] == ["E}r?"]
    assert row["verdict"] == "holds"


def test_verify_theorem_excused_graph_is_the_exception():
    g = graph6_decode("E}r?")
    assert canonical_form(g) == "E}r?"
    assert not holds(g, PM())
    assert zeroth_order_randic(g, 1.0) == 18.0
    assert tuple(sorted(g.degrees(), reverse=True)) == (5, 5, 2, 2, 2, 2)


def test_verify_theorem_empty_source_is_vacuous():
    report = verify_theorem(PerfectMatchingTheorem(3), [1.0, 2.0], source=[])
    assert report.graphs_scanned == 0
    assert report.verdict == "vacuous"
    assert report.ok
    assert all(row["verdict"] == "vacuous" for row in report.results)


def test_verify_theorem_source_filtering():
    # wrong order and disconnected graphs are filtered out, K6 survives
    source = [complete_graph(6), complete_graph(4), union(_cycle(3), _cycle(3))]
    report = verify_theorem(PerfectMatchingTheorem(3), [1.0], source=source)
    assert report.graphs_scanned == 1
    assert report.verdict == "holds"


def test_bipartite_adjudication_frozen():
    report = verify_theorem(BipExtendTheorem(4, 1), [1.0])
    assert report.graphs_scanned == 93
    assert report.verdict == "holds"
    (row,) = report.results
    adjudication = row["adjudication"]
    assert adjudication["statement_threshold"] == 24.0
    assert adjudication["proof_endpoint_threshold"] == 26.0
    assert adjudication["sharp_threshold"] == 26.0
    assert adjudication["sharp_matches"] == "proof_endpoint"
    assert adjudication["statement_survives"] is False
    assert adjudication["statement_counterexamples"] == ["Gs`zB?", "Gs`z_O", "Gs`za?"]
    assert adjudication["proof_endpoint_survives"] is True
    assert adjudication["proof_endpoint_counterexamples"] == []
    # the row itself is judged on the family threshold and still holds
    assert row["verdict"] == "holds"
    assert row["counterexamples"] == []


def test_bipartite_statement_counterexamples_reverify():
    """Decode the recorded counterexamples and re-check every claim the
    adjudication makes about them."""
    t = BipExtendTheorem(4, 1)
    filt = theorem_filter(t)
    for token in ("Gs`zB?", "Gs`z_O", "Gs`za?"):
        g = graph6_decode(token)
        assert canonical_form(g) == token
        assert matches_filter(g, filt)
        value = zeroth_order_randic(g, 1.0)
        assert value >= 24.0
        assert value < 26.0
        assert not holds(g, BipExtendable(1))


def test_bipartite_adjudication_statement_agrees_at_4_2():
    report = verify_theorem(BipExtendTheorem(4, 2), [1.0])
    (row,) = report.results
    adjudication = row["adjudication"]
    assert adjudication["sharp_matches"] == "both"
    assert adjudication["statement_survives"] is True
    assert adjudication["statement_threshold"] == adjudication["proof_endpoint_threshold"] == 28.0


def test_verify_theorem_json_determinism_across_jobs():
    t = ExtendableTheorem(3, 1)
    one = verify_theorem(t, [1.0, 0.5], jobs=1)
    two = verify_theorem(t, [1.0, 0.5], jobs=2)
    assert one.to_json() == two.to_json()
    assert one.to_json().endswith("\n")
    payload = json.loads(one.to_json())
    assert sorted(payload) == [
        "alphas",
        "graphs_scanned",
        "kind",
        "results",
        "subject",
        "verdict",
    ]
    assert "wall_time_s" not in one.to_json()


def test_report_csv_and_text_shapes():
    report = verify_theorem(PerfectMatchingTheorem(2), [1.0, 2.0])
    lines = report.to_csv().splitlines()
    assert lines[0] == "kind,subject,alpha,graphs_scanned,counterexamples,verdict"
    assert len(lines) == 3
    assert all(line.startswith("theorem,") for line in lines[1:])
    text = report.to_text()
    assert "graphs scanned:" in text
    assert "wall time:" in text
    assert "verdict: holds" in text


def test_verify_theorem_rejects_empty_alphas():
    with pytest.raises(ValueError, match="at least one exponent"):
        verify_theorem(PerfectMatchingTheorem(2), [])


def test_verify_characterization_builtin():
    report = verify_characterization(PM(), 4)
    assert report.kind == "characterization"
    assert report.subject == {"property": "pm", "order": 4}
    assert report.verdict == "holds"
    (result,) = report.results
    assert result["family_spec_count"] == 1
    assert result["maximal_found"] == result["family"]
    assert result["missing_from_family"] == []
    assert result["unexpected_in_family"] == []
    assert result["counterexamples"] == []
    # the unique maximal non-PM class at order 4 is the star
    star = join(complete_graph(1), empty_graph(3))
    assert result["family"] == [canonical_form(star)]


def test_verify_characterization_extendable_frozen():
    report = verify_characterization(Extendable(1), 6)
    (result,) = report.results
    assert result["maximal_found"] == ["E~z_", "E~~?"]
    assert report.verdict == "holds"


def test_verify_characterization_partial_source_fails():
    report = verify_characterization(PM(), 4, source=[_cycle(4)])
    assert report.verdict == "fails"
    assert not report.ok
    (result,) = report.results
    assert result["maximal_found"] == []
    assert result["unexpected_in_family"] == result["family"]


def test_verify_characterization_bipartite_external_relabel():
    """External bipartite graphs may carry any labelling; the harness must
    recover a bipartition instead of assuming the fixed one."""
    from matchext.extremal import BicliqueDeletedSpec, build_biclique_deleted
    from matchext.iso import canonical_relabel

    member, _ = build_biclique_deleted(BicliqueDeletedSpec(3, 2, 2))
    scrambled = canonical_relabel(member)
    report = verify_characterization(BipExtendable(0), 6, source=[scrambled])
    assert report.graphs_scanned == 1
    (result,) = report.results
    assert result["maximal_found"] == [canonical_form(member)]
    assert result["missing_from_family"] == []


def test_verify_monotonicity_frozen():
    report = verify_monotonicity(5, [1.0, 2.0, -1.0])
    assert report.kind == "monotonicity"
    assert report.subject == {"order": 5}
    assert report.graphs_scanned == 34
    assert report.verdict == "holds"
    by_alpha = {row["alpha"]: row for row in report.results}
    assert by_alpha[1.0]["pairs_checked"] == 170
    assert by_alpha[2.0]["pairs_checked"] == 170
    # negative exponents skip additions that touch an isolated vertex
    assert by_alpha[-1.0]["pairs_checked"] == 109
    assert all(row["verdict"] == "holds" for row in report.results)
    assert all(row["counterexamples"] == [] for row in report.results)


def test_verify_monotonicity_vacuous_without_pairs():
    report = verify_monotonicity(1, [1.0])
    assert report.verdict == "vacuous"
    assert report.ok
