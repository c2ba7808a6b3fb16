"""Moebius maps, subgroup catalog, closure, conjugation, degenerate orbits."""

import random

import pytest

from symloci.cyclotomic import Cyclotomic
from symloci.forms import P1Point, RationalMap
from symloci.moebius import (
    CapExceeded,
    FiniteSubgroup,
    MoebiusMap,
    UnliftableInField,
    classify_finite_subgroup,
    conjugate_map,
    degenerate_orbits,
    generate_closure,
    standard_subgroup,
)


def test_projective_equality():
    m1 = MoebiusMap(1, 2, 3, 4)
    m2 = MoebiusMap(Cyclotomic.zeta(4), Cyclotomic.zeta(4) * 2, Cyclotomic.zeta(4) * 3, Cyclotomic.zeta(4) * 4)
    assert m1 == m2
    assert hash(m1) == hash(m2)
    assert m1 != MoebiusMap(1, 2, 3, 5)
    with pytest.raises(ValueError):
        MoebiusMap(1, 2, 2, 4)


def test_compose_inverse_apply():
    rng = random.Random(1)
    for _ in range(6):
        m = MoebiusMap(rng.randint(1, 4), rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 4) + 5)
        assert m.compose(m.inverse()).is_identity()
        p = P1Point.affine(rng.randint(-5, 5))
        q = m.apply(p)
        assert m.inverse().apply(q) == p


def test_standard_subgroup_orders():
    assert standard_subgroup("cyclic", 3).order == 3
    assert standard_subgroup("cyclic", 1).order == 1
    assert standard_subgroup("dihedral", 5).order == 10
    assert standard_subgroup("tetra").order == 12
    assert standard_subgroup("octa").order == 24
    assert standard_subgroup("icosa").order == 60


def test_platonic_censuses():
    assert standard_subgroup("tetra").order_census() == {1: 1, 2: 3, 3: 8}
    assert standard_subgroup("octa").order_census() == {1: 1, 2: 9, 3: 8, 4: 6}
    assert standard_subgroup("icosa").order_census() == {1: 1, 2: 15, 3: 20, 5: 24}


def test_generate_closure_quoted_generators():
    i = Cyclotomic.zeta(4)
    g = generate_closure([MoebiusMap.scaling(-1), MoebiusMap(i, i, 1, -1)], cap=100)
    assert g.order == 12
    assert generate_closure([MoebiusMap.identity()], cap=10).order == 1
    with pytest.raises(CapExceeded):
        generate_closure([MoebiusMap(1, 1, 0, 1)], cap=50)


def test_classification():
    assert classify_finite_subgroup(standard_subgroup("tetra")) == "tetra"
    assert classify_finite_subgroup(standard_subgroup("octa")) == "octa"
    assert classify_finite_subgroup(standard_subgroup("icosa")) == "icosa"
    assert classify_finite_subgroup(standard_subgroup("cyclic", 6)) == "cyclic:6"
    for m in (2, 3, 4, 6):
        assert classify_finite_subgroup(standard_subgroup("dihedral", m)) == f"dihedral:{m}"
    # order 4: cyclic vs dihedral(2) distinguished by census
    assert classify_finite_subgroup(standard_subgroup("cyclic", 4)) == "cyclic:4"


def test_conjugate_examples():
    z2 = RationalMap.from_zpoly([1, 0, 0], [0, 0, 1])
    assert conjugate_map(z2, MoebiusMap.inversion()).proportional_to(z2)
    assert conjugate_map(z2, MoebiusMap.identity()).proportional_to(z2)
    zp1 = RationalMap.from_zpoly([1, 1], [0, 1])
    from fractions import Fraction

    half = RationalMap.from_zpoly([1, Fraction(1, 2)], [0, 1])
    assert conjugate_map(zp1, MoebiusMap.scaling(2)).proportional_to(half)


def test_conjugation_right_action():
    rng = random.Random(9)
    phi = RationalMap.from_zpoly([1, 2, -1], [3, 0, 1])
    for _ in range(6):
        f = MoebiusMap(rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(3, 5))
        h = MoebiusMap(rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(3, 5))
        lhs = conjugate_map(conjugate_map(phi, f), h)
        rhs = conjugate_map(phi, f.compose(h))
        assert lhs.proportional_to(rhs)


def test_conjugation_preserves_ratd_membership():
    phi = RationalMap.from_zpoly([1, 0, 2], [0, 1, 1])
    assert phi.is_in_ratd()
    f = MoebiusMap(1, 2, 1, 3)
    assert conjugate_map(phi, f).is_in_ratd()


def test_sl2_lift():
    i = Cyclotomic.zeta(4)
    m = MoebiusMap(i, i, 1, -1)  # det -2i
    g = m.sl2_lift()
    assert g.det() == 1
    assert g == m  # projectively unchanged
    m2 = MoebiusMap.scaling(Cyclotomic.zeta(5))
    assert m2.sl2_lift().det() == 1
    bad = MoebiusMap(Cyclotomic.zeta(5) + 1, 0, 0, 1)  # det not rational * root of unity
    with pytest.raises(UnliftableInField):
        bad.sl2_lift()


def test_fixed_points_exact():
    m = MoebiusMap.scaling(Cyclotomic.zeta(3))
    pts = m.fixed_points()
    assert set(pts) == {P1Point.affine(0), P1Point.infinity()}
    inv = MoebiusMap.inversion()  # fixes +-1
    assert set(inv.fixed_points()) == {P1Point.affine(1), P1Point.affine(-1)}
    i = Cyclotomic.zeta(4)
    rot = MoebiusMap(i, i, 1, -1)
    for p in rot.fixed_points():
        assert rot.apply(p) == p


def test_fixed_points_of_every_platonic_element():
    for kind in ("tetra", "octa"):
        g = standard_subgroup(kind)
        for e in g.elements:
            if e.is_identity():
                continue
            pts = e.fixed_points()
            assert len(pts) == 2
            for p in pts:
                assert e.apply(p) == p


def test_degenerate_orbit_structure():
    expected = {
        "tetra": ([4, 4, 6], 14),
        "octa": ([6, 8, 12], 26),
        "icosa": ([12, 20, 30], 62),
    }
    for kind, (sizes, total) in expected.items():
        g = standard_subgroup(kind)
        orbs = degenerate_orbits(g)
        assert [d.degree for d, _ in orbs] == sizes
        assert sum(d.degree for d, _ in orbs) == total == g.order + 2
        for div, stab in orbs:
            assert stab * div.degree == g.order
            p = div.support()[0]
            assert g.stabilizer_order(p) == stab


def test_degenerate_orbits_dihedral_cyclic():
    d3 = degenerate_orbits(standard_subgroup("dihedral", 3))
    assert sorted(d.degree for d, _ in d3) == [2, 3, 3]
    assert sum(d.degree for d, _ in d3) == 8  # |G| + 2
    c4 = degenerate_orbits(standard_subgroup("cyclic", 4))
    assert sorted(d.degree for d, _ in c4) == [1, 1]


def test_group_json_roundtrip():
    g = standard_subgroup("dihedral", 3)
    g2 = FiniteSubgroup.from_json(g.to_json())
    assert g2.order == 6 and g2.label == "dihedral:3"
    assert classify_finite_subgroup(g2) == "dihedral:3"
