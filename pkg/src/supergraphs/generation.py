"""Generating and invariable generating graphs, and their containment in the
complements of base graphs and conjugacy supergraphs.

Two elements are joined in the generating graph when they generate the whole
group; in the invariable generating graph when every pair of conjugates does.
For a group that is not abelian/nilpotent/solvable, the generating graph sits
inside the complement of the matching base graph (equality exactly for the
minimal non-A groups), and the invariable generating graph sits inside the
complement of the conjugacy supergraph of the same kind.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .constructions import build_base_graph, build_supergraph
from .graphs import Graph
from .groups import FiniteGroup, InvalidGroupSpec, SizeCapError, make_group

GENERATION_KINDS = ("abelian", "nilpotent", "solvable")

_BASE_FOR_KIND = {"abelian": "commuting", "nilpotent": "nilpotent", "solvable": "solvable"}


def generating_graph(group: FiniteGroup) -> Graph:
    """g ~ h iff the pair generates the whole group."""
    group.require_enumerable()
    order = group.order
    edges = [
        (g, h)
        for g, h in itertools.combinations(range(order), 2)
        if len(group.pair_subgroup_members(g, h)) == order
    ]
    return Graph(group.labels(), edges)


def _conjugates(group: FiniteGroup, g: int) -> tuple[int, ...]:
    return tuple(sorted({group.conjugate(g, x) for x in range(group.order)}))


def invariable_generating_graph(group: FiniteGroup) -> Graph:
    """x ~ y iff every conjugate pair generates the group.

    The condition is invariant under simultaneous conjugation, so x stays
    fixed while y runs over its conjugacy class.
    """
    group.require_enumerable()
    order = group.order
    classes = {g: _conjugates(group, g) for g in range(order)}
    edges = []
    for x, y in itertools.combinations(range(order), 2):
        if all(
            len(group.pair_subgroup_members(x, y2)) == order for y2 in classes[y]
        ):
            edges.append((x, y))
    return Graph(group.labels(), edges)


@dataclass(frozen=True)
class ContainmentReport:
    group_label: str
    kind: str
    check: str  # "generating-vs-base" | "invariable-vs-super"
    applicable: bool
    contained: bool
    equal: bool
    violations: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_label,
            "kind": self.kind,
            "check": self.check,
            "applicable": self.applicable,
            "contained": self.contained,
            "equal": self.equal,
            "violations": [list(v) for v in self.violations],
        }


def _containment(small: Graph, big: Graph) -> tuple[bool, bool, tuple]:
    small_edges = set(small.edges())
    big_edges = set(big.edges())
    violations = tuple(sorted(small_edges - big_edges))
    return (not violations, small_edges == big_edges, violations)


def _group_has_property(group: FiniteGroup, kind: str) -> bool:
    flags = group.whole_group_flags()
    if kind == "abelian":
        return flags.is_abelian
    if kind == "nilpotent":
        return flags.is_nilpotent
    return flags.is_solvable


def containment_checks(group: FiniteGroup) -> list[ContainmentReport]:
    """Both containments for each applicable kind.

    Kinds whose property the whole group already has are skipped (reported as
    not applicable): the containments are only claimed for non-A groups.
    """
    reports = []
    gen = None
    igg = None
    for kind in GENERATION_KINDS:
        if _group_has_property(group, kind):
            for check in ("generating-vs-base", "invariable-vs-super"):
                reports.append(
                    ContainmentReport(group.label, kind, check, False, True, False, ())
                )
            continue
        if gen is None:
            gen = generating_graph(group)
            igg = invariable_generating_graph(group)
        base_complement = build_base_graph(group, _BASE_FOR_KIND[kind]).complement()
        contained, equal, violations = _containment(gen, base_complement)
        reports.append(
            ContainmentReport(
                group.label, kind, "generating-vs-base", True, contained, equal, violations
            )
        )
        super_complement = build_supergraph(
            group, _BASE_FOR_KIND[kind], "conjugacy"
        ).complement()
        contained, equal, violations = _containment(igg, super_complement)
        reports.append(
            ContainmentReport(
                group.label, kind, "invariable-vs-super", True, contained, equal, violations
            )
        )
    return reports


@dataclass
class ScanReport:
    records: list[dict] = field(default_factory=list)
    equality_groups: list[dict] = field(default_factory=list)
    passed: bool = True

    def to_json_dict(self) -> dict:
        return {
            "records": self.records,
            "equality_groups": self.equality_groups,
            "passed": self.passed,
        }


def equality_scan(specs: list[dict]) -> ScanReport:
    """Empirical scan for groups whose invariable generating graph equals the
    complement of a conjugacy supergraph; no classification is claimed."""
    report = ScanReport()
    for spec in specs:
        try:
            group = make_group(spec)
        except (InvalidGroupSpec, SizeCapError) as exc:
            report.records.append({"spec": spec, "skipped": str(exc)})
            continue
        for rep in containment_checks(group):
            if rep.check != "invariable-vs-super":
                continue
            record = {
                "group": group.label,
                "kind": rep.kind,
                "applicable": rep.applicable,
                "contained": rep.contained,
                "equal": rep.equal,
            }
            report.records.append(record)
            report.passed &= (not rep.applicable) or rep.contained
            if rep.applicable and rep.equal:
                report.equality_groups.append({"group": group.label, "kind": rep.kind})
    return report
