"""Group construction, element structure, and subgroup classification."""

import itertools
import random

import pytest

import supergraphs as sg
from supergraphs.groups import (
    InvalidGroupSpec,
    SizeCapError,
    closure_set,
    make_group,
)

NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def catalog():
    return [
        sg.cyclic(6),
        sg.symmetric(3),
        sg.dihedral(4),
        sg.quaternion(2),
        sg.dihedral(5),
        sg.alternating(4),
        sg.symmetric(4),
        sg.product(sg.cyclic(2), sg.cyclic(4)),
    ]


# --- constructors ---


def test_dihedral_presentation():
    d = sg.dihedral(5)
    assert d.order == 10
    assert d.element_order(1) == 5  # a
    assert d.element_order(5) == 2  # b
    # b a b^-1 = a^-1
    b, a = 5, 1
    assert d.mul(d.mul(b, a), d.inv(b)) == d.inv(a)


def test_quaternion_presentation():
    q = sg.quaternion(2)
    a, b = 1, 4
    assert q.order == 8
    assert q.mul(a, a) == q.mul(b, b)  # a^n = b^2
    sq = q.mul(a, a)
    assert q.mul(sq, sq) == 0  # (a^n)^2 = e
    assert q.mul(q.mul(b, a), q.inv(b)) == q.inv(a)
    assert q.element_order(b) == 4


def test_quaternion_requires_n_at_least_two():
    with pytest.raises(InvalidGroupSpec):
        sg.quaternion(1)


def test_product_order_multiplies():
    g = sg.product(sg.dihedral(3), sg.cyclic(2))
    assert g.order == 12
    assert g.element_label(0) == "(e,e)"


def test_make_group_specs():
    assert make_group({"kind": "dihedral", "n": 5}).order == 10
    assert make_group({"kind": "quaternion", "n": 3}).order == 12
    assert make_group({"kind": "symmetric", "n": 4}).order == 24
    assert make_group({"kind": "alternating", "n": 5}).order == 60
    assert (
        make_group({"kind": "product", "of": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 4}]}).order
        == 8
    )
    g = make_group({"kind": "permgens", "degree": 3, "gens": [[[1, 2]], [[1, 2, 3]]]})
    assert g.order == 6
    # generators acting on a subset of the points: <(123),(12)(34)> = A4 in S7
    g = make_group(
        {"kind": "permgens", "degree": 7, "gens": [[[1, 2, 3]], [[1, 2], [3, 4]]]}
    )
    assert g.order == 12
    nested = make_group(
        {
            "kind": "product",
            "of": [
                {"kind": "cyclic", "n": 2},
                {"kind": "product", "of": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 2}]},
            ],
        }
    )
    assert nested.order == 8 and nested.whole_group_flags().is_abelian
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "nonsense"})
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "cyclic"})
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "permgens", "degree": 3, "gens": [[[1, 5]]]})


def test_table_group_validation():
    c3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert make_group({"kind": "table", "rows": c3}).order == 3
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "table", "rows": [[0, 1], [1, 1]]})
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "table", "rows": [[1, 0], [0, 1]]})  # 0 not identity
    with pytest.raises(InvalidGroupSpec):
        make_group({"kind": "table", "rows": NON_ASSOCIATIVE_LOOP})


def test_element_cap_and_env_override(monkeypatch):
    with pytest.raises(SizeCapError):
        sg.cyclic(30000)
    monkeypatch.setenv("SUPERGRAPH_CAP", "50000")
    assert sg.cyclic(30000).order == 30000


def test_symmetric_beyond_cap_supports_small_closures():
    s8 = sg.symmetric(8)  # order 40320 > default cap; rank-indexed
    assert s8.rep == "permutation"
    with pytest.raises(SizeCapError):
        s8.conjugacy_classes()
    sub = s8.generated_subgroup(
        [s8.index_of((1, 2, 0, 3, 4, 5, 6, 7)), s8.index_of((0, 1, 2, 4, 5, 6, 7, 3))]
    )
    assert sub.order == 15
    assert sg.classify_subgroup(sub).is_cyclic


# --- element structure ---


def test_element_orders():
    d = sg.dihedral(5)
    assert d.element_order(0) == 1
    assert sg.element_order(d, 1) == 5
    q = sg.quaternion(2)
    assert all(q.element_order(i) == 4 for i in (4, 5, 6, 7))


def test_centralizers_dihedral():
    d5 = sg.dihedral(5)
    c_b = sg.centralizer(d5, 5)
    assert c_b.members == (0, 5)
    d4 = sg.dihedral(4)
    assert len(sg.centralizer(d4, 2).members) == 8  # a^2 is central
    assert len(sg.centralizer(d4, 0).members) == 8


def test_conjugacy_class_sizes():
    assert sorted(c.size for c in sg.dihedral(5).conjugacy_classes()) == [1, 2, 2, 5]
    assert sorted(c.size for c in sg.quaternion(2).conjugacy_classes()) == [1, 1, 2, 2, 2]
    assert [c.size for c in sg.cyclic(6).conjugacy_classes()] == [1] * 6


def test_class_ordering_and_representatives():
    classes = sg.quaternion(2).conjugacy_classes()
    assert [c.members for c in classes] == [(0,), (2,), (1, 3), (4, 6), (5, 7)]
    assert all(c.representative == min(c.members) for c in classes)


def test_generated_subgroups():
    d5 = sg.dihedral(5)
    assert sg.generated_subgroup(d5, [1]).order == 5
    s3 = sg.symmetric(3)
    t = s3.index_of((1, 0, 2))
    r = s3.index_of((1, 2, 0))
    assert sg.generated_subgroup(s3, [t, r]).order == 6


def test_classify_subgroup_flags():
    s3 = sg.symmetric(3)
    flags = s3.whole_group_flags()
    assert flags.is_solvable and not flags.is_nilpotent
    q8 = sg.quaternion(2)
    assert q8.whole_group_flags().is_nilpotent
    s5 = sg.symmetric(5)
    sub = s5.generated_subgroup(
        [s5.index_of((1, 2, 0, 3, 4)), s5.index_of((1, 2, 3, 4, 0))]
    )
    assert sub.order == 60
    flags = sg.classify_subgroup(sub)
    assert not flags.is_solvable and not flags.is_nilpotent


@pytest.mark.parametrize(
    "group_fn,cyclic,abelian,nilpotent,solvable",
    [
        (lambda: sg.cyclic(6), True, True, True, True),
        (lambda: sg.product(sg.cyclic(2), sg.cyclic(3)), True, True, True, True),
        (lambda: sg.product(sg.cyclic(2), sg.cyclic(4)), False, True, True, True),
        (lambda: sg.dihedral(4), False, False, True, True),  # 2-group
        (lambda: sg.dihedral(8), False, False, True, True),
        (lambda: sg.quaternion(2), False, False, True, True),
        (lambda: sg.quaternion(4), False, False, True, True),
        (lambda: sg.dihedral(3), False, False, False, True),
        (lambda: sg.dihedral(6), False, False, False, True),
        (lambda: sg.alternating(4), False, False, False, True),
        (lambda: sg.symmetric(4), False, False, False, True),
        (lambda: sg.alternating(5), False, False, False, False),
    ],
)
def test_whole_group_flags_known_values(group_fn, cyclic, abelian, nilpotent, solvable):
    flags = group_fn().whole_group_flags()
    assert flags == sg.SubgroupFlags(cyclic, abelian, nilpotent, solvable)


def test_classify_flag_monotonicity():
    """cyclic => abelian => nilpotent => solvable on a spread of subgroups."""
    for group in catalog():
        rng = random.Random(7)
        pairs = list(itertools.combinations(range(group.order), 2))
        for g, h in rng.sample(pairs, min(40, len(pairs))):
            sub = group.generated_subgroup([g, h])
            f = sg.classify_subgroup(sub)
            assert (not f.is_cyclic or f.is_abelian)
            assert (not f.is_abelian or f.is_nilpotent)
            assert (not f.is_nilpotent or f.is_solvable)


def test_orbit_stabilizer():
    """|class| * |centralizer| = |G| for every class of every catalog group."""
    for group in catalog():
        for cls in group.conjugacy_classes():
            assert cls.size * len(group.centralizer(cls.representative).members) == group.order


def _axiom_check(group):
    n = group.order
    rows = [group.multiplication_row(i) for i in range(n)]
    for i in range(n):
        assert rows[0][i] == i and rows[i][0] == i
        assert rows[i][group.inv(i)] == 0 and rows[group.inv(i)][i] == 0
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            assert rab == [ra[rb[c]] for c in range(n)], (a, b)


def test_group_axioms_exhaustive_small():
    """Associativity/identity/inverse checked exhaustively up to order 200."""
    groups = catalog() + [sg.dihedral(50), sg.quaternion(3), sg.symmetric(4)]
    for group in groups:
        assert group.order <= 200
        _axiom_check(group)


def test_group_axioms_spot_checked_larger():
    group = sg.cyclic(2048)
    rng = random.Random(11)
    for _ in range(500):
        a, b, c = (rng.randrange(group.order) for _ in range(3))
        assert group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c))


def test_product_classes_are_pairwise_products():
    g, h = sg.symmetric(3), sg.cyclic(4)
    prod = sg.product(g, h)
    expected = set()
    for cg in g.conjugacy_classes():
        for ch in h.conjugacy_classes():
            expected.add(
                frozenset(a * h.order + b for a in cg.members for b in ch.members)
            )
    actual = {frozenset(c.members) for c in prod.conjugacy_classes()}
    assert actual == expected


def test_closure_set_generic():
    members = closure_set(lambda a, b: (a + b) % 7, 0, [3])
    assert members == set(range(7))
