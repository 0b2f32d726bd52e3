"""Generating and invariable generating graphs and their containments."""

import itertools

import pytest

import supergraphs as sg
from supergraphs.generation import (
    containment_checks,
    equality_scan,
    generating_graph,
    invariable_generating_graph,
)


def test_generating_graph_cyclic5_complete():
    assert generating_graph(sg.cyclic(5)).num_edges == 10


def test_generating_graph_identity_isolated_iff_noncyclic():
    s3 = sg.symmetric(3)
    assert generating_graph(s3).degree(0) == 0
    c6 = sg.cyclic(6)
    assert generating_graph(c6).degree(0) == 2  # e with either generator


def test_generating_graph_s3():
    got = generating_graph(sg.symmetric(3))
    assert got.num_edges == 9
    # transpositions at indices 1,2,5; rotations at 3,4 (lex order of perms)
    transpositions, rotations = {1, 2, 5}, {3, 4}
    expected = {tuple(sorted(p)) for p in itertools.combinations(transpositions, 2)}
    expected |= {tuple(sorted((t, r))) for t in transpositions for r in rotations}
    assert set(got.edges()) == expected


def test_invariable_generating_graph_s3():
    got = invariable_generating_graph(sg.symmetric(3))
    transpositions, rotations = {1, 2, 5}, {3, 4}
    expected = {tuple(sorted((t, r))) for t in transpositions for r in rotations}
    assert set(got.edges()) == expected
    assert got.num_edges == 6


def test_invariable_generating_graph_abelian_equals_generating():
    for group in (sg.cyclic(6), sg.product(sg.cyclic(2), sg.cyclic(4))):
        assert (
            invariable_generating_graph(group).edges()
            == generating_graph(group).edges()
        )


def test_invariable_generating_graph_q8():
    got = invariable_generating_graph(sg.quaternion(2))
    # pairs taken from two different axes {a,a^3}, {b,a^2 b}, {ab, a^3 b}
    axes = [(1, 3), (4, 6), (5, 7)]
    expected = set()
    for first, second in itertools.combinations(axes, 2):
        expected |= {tuple(sorted((x, y))) for x in first for y in second}
    assert set(got.edges()) == expected
    assert got.num_edges == 12


def test_igg_contained_in_generating_graph():
    for group in (sg.symmetric(3), sg.dihedral(4), sg.quaternion(2), sg.alternating(4)):
        igg = set(invariable_generating_graph(group).edges())
        gen = set(generating_graph(group).edges())
        assert igg <= gen


def test_fixed_representative_scan_equals_full_double_scan():
    """Scanning y over its class with x pinned equals the full conjugate scan."""
    for group in (sg.symmetric(3), sg.dihedral(4), sg.quaternion(2), sg.alternating(4)):
        assert group.order <= 24
        order = group.order
        igg = invariable_generating_graph(group)
        for x, y in itertools.combinations(range(order), 2):
            full = all(
                len(group.pair_subgroup_members(group.conjugate(x, g), group.conjugate(y, h)))
                == order
                for g in range(order)
                for h in range(order)
            )
            assert igg.has_edge(x, y) == full


def test_containment_s3_minimal_non_abelian():
    reports = {(r.kind, r.check): r for r in containment_checks(sg.symmetric(3))}
    r = reports[("abelian", "generating-vs-base")]
    assert r.applicable and r.contained and r.equal
    r = reports[("abelian", "invariable-vs-super")]
    assert r.applicable and r.contained and r.equal
    # S3 is solvable, so the solvable kind is skipped
    assert not reports[("solvable", "generating-vs-base")].applicable


def test_containment_abelian_group_all_skipped():
    for report in containment_checks(sg.cyclic(6)):
        assert not report.applicable


def test_containment_d10_nilpotent_applicable():
    reports = {(r.kind, r.check): r for r in containment_checks(sg.dihedral(5))}
    r = reports[("nilpotent", "generating-vs-base")]
    assert r.applicable and r.contained
    r = reports[("nilpotent", "invariable-vs-super")]
    assert r.applicable and r.contained


def test_containment_a5_solvable_kind():
    reports = {(r.kind, r.check): r for r in containment_checks(sg.alternating(5))}
    for check in ("generating-vs-base", "invariable-vs-super"):
        r = reports[("solvable", check)]
        assert r.applicable and r.contained
        assert not r.violations
    # A5 is minimal non-solvable: equality in the generating-graph containment
    assert reports[("solvable", "generating-vs-base")].equal


def test_equality_scan_flags_s3():
    report = equality_scan([{"kind": "symmetric", "n": 3}])
    assert report.passed
    assert {"group": "S3", "kind": "abelian"} in report.equality_groups


def test_equality_scan_skips_abelian_entirely():
    report = equality_scan([{"kind": "cyclic", "n": 6}])
    assert report.passed
    assert report.equality_groups == []
    assert all(not r.get("applicable", False) for r in report.records)


def test_equality_scan_records_d10_and_bad_specs():
    report = equality_scan([{"kind": "dihedral", "n": 5}, {"kind": "cyclic", "n": 10**6}])
    kinds = {r["kind"] for r in report.records if r.get("applicable")}
    assert "nilpotent" in kinds and "abelian" in kinds
    assert any("skipped" in r for r in report.records)
