"""Normal coordinates of closed curves: tracing, rounds, pants."""

import json

import pytest

from pantskt.curves import (Curve, MultiCurveReport, disjoint_union_vector,
                            is_admissible, normalize, puncture_sides,
                            round_coords, round_curve, validate_pants)
from pantskt.errors import (DuplicateIsotopyClass, Empty, NonNormal,
                            NotConnected, NotDisjoint, NotEssential,
                            WrongCount)
from pantskt.surface import PuncturedSphere

S4 = PuncturedSphere(4)
S8 = PuncturedSphere(8)


def test_admissibility():
    assert is_admissible(S4, (0, 1, 0, 1, 1, 1))
    assert not is_admissible(S4, (1, 1, 0, 1, 1, 1))  # odd triangle sum
    assert not is_admissible(S4, (0, 3, 0, 1, 1, 1))  # one side too heavy


def test_round_coords_frozen():
    assert round_coords(S4, {1, 2}) == (0, 1, 0, 1, 1, 1)
    assert round_coords(S4, {2, 3}) == (1, 0, 1, 0, 1, 1)
    assert round_coords(S8, {1, 2}) == (0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1,
                                        1, 1, 1, 1, 1, 1)
    assert round_coords(S8, {2, 3, 4}) == (1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0,
                                           0, 0, 1, 1, 0, 0, 0)
    assert round_coords(S8, {4, 5}) == (0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0,
                                        0, 0, 1, 1, 0, 0)


def test_round_curve_blocks():
    with pytest.raises(NotEssential):
        round_curve(S8, {3})
    with pytest.raises(NotEssential):
        round_curve(S8, {1, 2, 3, 4, 5, 6, 7})
    with pytest.raises(NonNormal):
        round_curve(S8, {2, 4})
    # a block may wrap around the end of the circle
    c = round_curve(S8, {8, 1})
    assert c.norm() == 12


def test_route_frozen():
    c = Curve(S4, (0, 1, 0, 1, 1, 1))
    stops, tris = c.route_data()
    assert stops == [(1, 0), (4, 0), (3, 0), (5, 0)]
    assert tris == [0, 1, 3, 2]
    assert c.norm() == 4
    assert c.sides().inside == frozenset({1, 2})


def test_curve_errors():
    with pytest.raises(Empty):
        Curve(S4, (0, 0, 0, 0, 0, 0))
    with pytest.raises(NonNormal):
        Curve(S4, (1, 1, 1, 1, 1, 1))
    with pytest.raises(NotConnected):
        Curve(S4, (0, 2, 0, 2, 2, 2))  # doubled round curve
    with pytest.raises(NotEssential):
        Curve(S8, tuple(round_coords(S8, {1, 2, 3, 4, 5, 6, 7})))
    with pytest.raises(NonNormal):
        Curve(S4, (0, 1, 0, 1, 1))  # wrong length
    with pytest.raises(NonNormal):
        Curve(S4, (0, 1, 0, 1, 1, -1))


def test_normalize():
    c = normalize(S4, (0, 1, 0, 1, 1, 1))
    assert isinstance(c, Curve)
    rep = normalize(S4, (0, 2, 0, 2, 2, 2))
    assert isinstance(rep, MultiCurveReport)
    assert rep.total() == 2
    assert rep.entries[0][1] == 2  # one class, multiplicity two
    assert len(rep.essential_curves()) == 2
    peri = normalize(S8, round_coords(S8, {1, 2, 3, 4, 5, 6, 7}))
    assert isinstance(peri, MultiCurveReport)
    assert peri.essential_curves() == []
    with pytest.raises(Empty):
        normalize(S4, (0,) * 6)


def test_eq_hash_json():
    a = Curve(S4, (0, 1, 0, 1, 1, 1))
    b = round_curve(S4, {1, 2})
    assert a == b and hash(a) == hash(b)
    assert a != round_curve(S4, {2, 3})
    doc = json.loads(json.dumps(a.to_json()))
    assert Curve.from_json(doc) == a
    assert doc["format"] == "pants-kt/1"


def test_puncture_sides():
    ps = puncture_sides(round_curve(S8, {2, 3, 4}))
    assert ps.inside == frozenset({2, 3, 4})
    assert ps.outside == frozenset({1, 5, 6, 7, 8})
    assert not ps.two_insides
    ps4 = puncture_sides(round_curve(S4, {1, 2}))
    assert ps4.inside == frozenset({1, 2})
    assert ps4.two_insides


def test_disjoint_union():
    r12 = round_curve(S8, {1, 2})
    r123 = round_curve(S8, {1, 2, 3})
    total, comps = disjoint_union_vector([r12, r123])
    assert total == tuple(x + y for x, y in zip(r12.coords, r123.coords))
    assert len(comps) == 2
    with pytest.raises(NotDisjoint):
        disjoint_union_vector([r12, round_curve(S8, {2, 3})])


def pants8():
    return [round_curve(S8, b) for b in
            ({1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {5, 6}, {5, 6, 7})]


def test_validate_pants():
    regs = validate_pants(S8, pants8())
    assert regs.count() == 6
    with pytest.raises(WrongCount):
        validate_pants(S8, pants8()[:4])
    bad = pants8()
    bad[3] = round_curve(S8, {1, 2})
    with pytest.raises(DuplicateIsotopyClass):
        validate_pants(S8, bad)
    crossing = pants8()
    crossing[3] = round_curve(S8, {4, 5})
    with pytest.raises(NotDisjoint):
        validate_pants(S8, crossing)
    # on a sphere any n-3 distinct disjoint essential curves are pants
    S6 = PuncturedSphere(6)
    for family in ([{1, 2}, {4, 5}, {1, 2, 3}],
                   [{1, 2}, {4, 5}, {3, 4, 5}],
                   [{1, 2}, {1, 2, 3}, {1, 2, 3, 4}]):
        regs = validate_pants(S6, [round_curve(S6, b) for b in family])
        assert regs.count() == 4
