"""Trivial tangles, disc classes, and the shadow destabilization search."""

import random

import pytest

from pantskt.arrangement import Arc, frontier_curve, geometric_intersection
from pantskt.census import arcs_between, curves_up_to
from pantskt.curves import round_curve
from pantskt.errors import (InvalidTangle, NotDisjoint, SurfaceMismatch,
                            WrongCount)
from pantskt.farey import Slope, slope_to_curve
from pantskt.pants import validate_pants
from pantskt.surface import PuncturedSphere
from pantskt.tangles import (DiscClass, ReducingClass, TrivialTangle,
                             disc_class, in_disc_set, is_shadow,
                             reducing_class, shadow_weight,
                             stabilization_check)

S4 = PuncturedSphere(4)
S6 = PuncturedSphere(6)
S8 = PuncturedSphere(8)


def straight(surface, u, v):
    return sorted(arcs_between(surface, u, v, 4),
                  key=lambda a: (a.norm(), a.coords))[0]


def plat(surface):
    return TrivialTangle(surface, [straight(surface, k, k + 1)
                                   for k in range(1, surface.n, 2)])


# --- construction and matching ---

def test_plat_matching():
    t = plat(S8)
    assert t.matching() == frozenset(frozenset(p) for p in
                                     [(1, 2), (3, 4), (5, 6), (7, 8)])
    assert t.bridge == 4


def test_matching_covers_every_label():
    t = TrivialTangle(S6, [straight(S6, 1, 4), straight(S6, 2, 3),
                           straight(S6, 5, 6)])
    seen = sorted(p for pair in t.matching() for p in pair)
    assert seen == list(range(1, 7))
    assert t.partner(1) == 4 and t.partner(4) == 1


def test_wrong_shadow_count():
    with pytest.raises(WrongCount):
        TrivialTangle(S6, [straight(S6, 1, 2), straight(S6, 3, 4)])


def test_ends_must_partition():
    with pytest.raises(InvalidTangle):
        TrivialTangle(S6, [straight(S6, 1, 2), straight(S6, 2, 3),
                           straight(S6, 5, 6)])


def test_crossing_shadows_rejected():
    crossing = [a for a in arcs_between(S6, 1, 4, 8)
                if geometric_intersection(a, straight(S6, 2, 3)) > 0]
    with pytest.raises(NotDisjoint):
        TrivialTangle(S6, [crossing[0], straight(S6, 2, 3),
                           straight(S6, 5, 6)])


def test_shadow_surface_mismatch():
    with pytest.raises(SurfaceMismatch):
        TrivialTangle(S6, [straight(S8, 1, 2), straight(S6, 3, 4),
                           straight(S6, 5, 6)])


def test_tangle_json_round_trip():
    t = plat(S8)
    assert TrivialTangle.from_json(t.to_json()) == t


# --- disc classes ---

def test_compressing_round_curves():
    t = plat(S8)
    for block in ({1, 2}, {3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}):
        assert disc_class(round_curve(S8, block), t) is DiscClass.COMPRESSING


def test_frontier_of_shadow_is_compressing():
    for t in (plat(S8), TrivialTangle(S6, [straight(S6, 1, 4),
                                           straight(S6, 2, 3),
                                           straight(S6, 5, 6)])):
        for shadow in t.shadows:
            assert disc_class(frontier_curve(shadow), t) is \
                DiscClass.COMPRESSING


def test_cut_curve():
    # an odd round curve splitting exactly one matched pair
    t = plat(S8)
    c = round_curve(S8, {2, 3, 4})
    assert shadow_weight(c, t) == 1
    assert disc_class(c, t) is DiscClass.CUT


def test_none_class():
    t = plat(S8)
    c = round_curve(S8, {2, 3})
    assert shadow_weight(c, t) == 2
    assert disc_class(c, t) is DiscClass.NONE


def test_disc_class_surface_mismatch():
    with pytest.raises(SurfaceMismatch):
        disc_class(round_curve(S6, {1, 2}), plat(S8))


def test_slope_characterization_on_4_punctures():
    # a straight two-strand tangle compresses only along slope 0, and no
    # essential curve on four punctures is odd, so nothing bounds a cut
    t = plat(S4)
    zero = slope_to_curve(Slope(0, 1))
    for c in curves_up_to(S4, 12):
        want = DiscClass.COMPRESSING if c == zero else DiscClass.NONE
        assert disc_class(c, t) is want


# --- disc sets ---

def test_in_disc_set_nested_frontiers():
    t = plat(S8)
    p = validate_pants([round_curve(S8, b) for b in
                        ({1, 2}, {3, 4}, {5, 6}, {1, 2, 3, 4},
                         {1, 2, 3, 4, 5, 6})])
    assert in_disc_set(p, t)
    assert in_disc_set(p, t, "compressing")


def test_in_disc_set_rejects_none_curve():
    t = plat(S8)
    p = validate_pants([round_curve(S8, b) for b in
                        ({2, 3}, {5, 6}, {2, 3, 4, 5, 6}, {2, 3, 4, 5},
                         {1, 2, 3, 4, 5, 6})])
    assert disc_class(p.curves[0], t) is DiscClass.NONE
    assert not in_disc_set(p, t)


def test_in_disc_set_cut_vs_compressing():
    t = plat(S8)
    p = validate_pants([round_curve(S8, b) for b in
                        ({1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 5},
                         {1, 2, 3, 4, 5, 6})])
    assert in_disc_set(p, t)
    assert not in_disc_set(p, t, "compressing")
    with pytest.raises(ValueError):
        in_disc_set(p, t, "everything")


# --- reducing classes ---

def test_reducing_and_cut_reducing():
    t1, t2 = plat(S8), plat(S8)
    assert reducing_class(round_curve(S8, {1, 2}), t1, t2) is \
        ReducingClass.REDUCING
    assert reducing_class(round_curve(S8, {1, 2, 3}), t1, t2) is \
        ReducingClass.CUT_REDUCING
    assert reducing_class(round_curve(S8, {2, 3}), t1, t2) is \
        ReducingClass.NEITHER


def test_reducing_class_symmetric():
    t1 = plat(S8)
    t2 = TrivialTangle(S8, [straight(S8, 2, 3), straight(S8, 4, 5),
                            straight(S8, 6, 7), straight(S8, 1, 8)])
    rng = random.Random(0)
    pool = curves_up_to(S8, 8)
    for c in rng.sample(sorted(pool, key=lambda x: x.coords), 12):
        assert reducing_class(c, t1, t2) is reducing_class(c, t2, t1)


def test_mixed_classes_are_neither():
    t1 = plat(S8)
    t2 = TrivialTangle(S8, [straight(S8, 2, 3), straight(S8, 4, 5),
                            straight(S8, 6, 7), straight(S8, 1, 8)])
    c = round_curve(S8, {1, 2})
    assert disc_class(c, t1) is DiscClass.COMPRESSING
    assert disc_class(c, t2) is DiscClass.CUT
    assert reducing_class(c, t1, t2) is ReducingClass.NEITHER


# --- shadows and stabilization ---

def test_presented_shadows_are_shadows():
    t = plat(S8)
    for a in t.shadows:
        assert is_shadow(a, t)


def test_foreign_arc_not_shadow():
    t = plat(S8)
    assert not is_shadow(straight(S8, 2, 3), t)


def test_alternative_shadow_recognized():
    t = plat(S8)
    alts = [a for a in arcs_between(S8, 1, 2, 8)
            if a != t.shadows[0] and is_shadow(a, t)]
    assert alts, "some slid copy of the first strand should satisfy"
    for a in alts:
        assert all(geometric_intersection(a, s) == 0 for s in t.shadows)


def test_stabilization_witness_found():
    t = plat(S8)
    shifted = TrivialTangle(S8, [straight(S8, 2, 3), straight(S8, 4, 5),
                                 straight(S8, 6, 7), straight(S8, 1, 8)])
    got = stabilization_check(t, t, shifted, 4)
    assert got is not None
    alpha, gamma = got
    shared = set(alpha.ends) & set(gamma.ends)
    assert len(shared) == 1
    assert geometric_intersection(alpha, gamma) == 0
    assert is_shadow(alpha, t) and is_shadow(gamma, shifted)


def test_stabilization_identical_tangles_none():
    t = plat(S8)
    assert stabilization_check(t, t, t, 4) is None


def test_stabilization_norm_zero_empty():
    t = plat(S8)
    shifted = TrivialTangle(S8, [straight(S8, 2, 3), straight(S8, 4, 5),
                                 straight(S8, 6, 7), straight(S8, 1, 8)])
    assert stabilization_check(t, t, shifted, 0) is None
