"""Trivial tangles as complete shadow arc collections on the sphere.

A trivial tangle is a ball with boundary-parallel strands.  Pushing a
system of bridge discs onto the boundary sphere records the tangle as b
pairwise disjoint shadow arcs matching the 2b punctures in pairs, and
every tangle here is presented that way.  Cutting the sphere along a
complete collection leaves a single disk, so any arc that is disjoint
from the collection and joins two matched punctures can be slid across
the other bridge discs onto the strand it parallels; we use this to
recognize shadows of a tangle beyond the arcs it was presented with.

Disc classes follow the shadow criterion: a curve bounds a compressing
disc when it can be isotoped off the whole shadow union, and a cut disc
when the minimal total intersection is exactly one.  A curve disjoint
from the shadows visibly compresses (push the spanned disk below the
bridge sphere); we adopt the converse as the working definition of
membership, which on the four-punctured sphere reproduces the slope
characterization of compressing boundaries for a two-strand tangle.

The shadows are disjoint, so a geodesic representative of a curve
realizes the minimal intersection with all of them at once and the
total minimum is the sum of the pairwise minima.
"""

import enum

from .arrangement import Arc, geometric_intersection
from .census import arcs_between
from .curves import puncture_sides
from .errors import InvalidTangle, NotDisjoint, SurfaceMismatch, WrongCount
from .surface import PuncturedSphere

FORMAT = "pants-kt/1"


class DiscClass(enum.Enum):
    COMPRESSING = "compressing"
    CUT = "cut"
    NONE = "none"


class ReducingClass(enum.Enum):
    REDUCING = "reducing"
    CUT_REDUCING = "cut-reducing"
    NEITHER = "neither"


class TrivialTangle:
    """b disjoint shadow arcs matching the 2b punctures in pairs."""

    __slots__ = ("surface", "shadows")

    def __init__(self, surface, shadows):
        shadows = tuple(sorted(
            shadows, key=lambda a: (min(a.ends), max(a.ends), a.coords,
                                    -1 if a.hug is None else a.hug)))
        for a in shadows:
            if not isinstance(a, Arc):
                raise InvalidTangle("shadows must be arcs")
            if a.surface.n != surface.n:
                raise SurfaceMismatch("shadow on the wrong sphere")
        if surface.n % 2 or len(shadows) != surface.n // 2:
            raise WrongCount("need %d shadows on %d punctures"
                             % (surface.n // 2, surface.n))
        seen = sorted(p for a in shadows for p in a.ends)
        if seen != list(range(1, surface.n + 1)):
            raise InvalidTangle("shadow ends must match the punctures "
                                "in pairs")
        for i, a in enumerate(shadows):
            for b in shadows[i + 1:]:
                if geometric_intersection(a, b) != 0:
                    raise NotDisjoint("shadows %s and %s cross" % (a, b))
        self.surface = surface
        self.shadows = shadows

    @property
    def bridge(self):
        return self.surface.n // 2

    def matching(self):
        """The puncture pairing induced by the shadows."""
        return frozenset(frozenset(a.ends) for a in self.shadows)

    def partner(self, p):
        for a in self.shadows:
            if p in a.ends:
                return a.ends[0] if a.ends[1] == p else a.ends[1]
        raise KeyError(p)

    def key(self):
        return tuple((min(a.ends), max(a.ends), a.coords,
                      -1 if a.hug is None else a.hug) for a in self.shadows)

    def __eq__(self, other):
        return (isinstance(other, TrivialTangle)
                and other.surface.n == self.surface.n
                and other.key() == self.key())

    def __hash__(self):
        return hash((self.surface.n, self.key()))

    def __repr__(self):
        pairs = "".join(sorted("{%d,%d}" % (min(a.ends), max(a.ends))
                               for a in self.shadows))
        return "TrivialTangle(n=%d, %s)" % (self.surface.n, pairs)

    def to_json(self):
        return {"format": FORMAT, "n": self.surface.n,
                "shadows": [a.to_json() for a in self.shadows]}

    @staticmethod
    def from_json(doc):
        surface = PuncturedSphere(doc["n"])
        return TrivialTangle(surface,
                             [Arc.from_json(a) for a in doc["shadows"]])


def shadow_weight(c, t):
    """Minimal total intersection of the curve with the shadow union."""
    if c.surface.n != t.surface.n:
        raise SurfaceMismatch("curve and tangle on different spheres")
    return sum(geometric_intersection(c, a) for a in t.shadows)


def disc_class(c, t):
    """Which c-disc the curve bounds in the tangle, if any."""
    w = shadow_weight(c, t)
    if w == 0:
        cls = DiscClass.COMPRESSING
    elif w == 1:
        cls = DiscClass.CUT
    else:
        cls = DiscClass.NONE
    sides = puncture_sides(c)
    odd = len(sides.inside) % 2
    # a cut disc meets one strand, splitting exactly one matched pair
    assert cls != DiscClass.COMPRESSING or not odd
    assert cls != DiscClass.CUT or odd
    return cls


def in_disc_set(p, t, kind="c"):
    """Whether every curve of the decomposition bounds a disc of the kind.

    kind "c" accepts compressing and cut discs alike; kind "compressing"
    restricts to the compressing ones.
    """
    if kind not in ("c", "compressing"):
        raise ValueError("kind must be 'c' or 'compressing'")
    for c in p.curves:
        cls = disc_class(c, t)
        if cls is DiscClass.NONE:
            return False
        if kind == "compressing" and cls is not DiscClass.COMPRESSING:
            return False
    return True


def reducing_class(c, t1, t2):
    """Classify a curve against the two tangles it separates."""
    d1, d2 = disc_class(c, t1), disc_class(c, t2)
    if d1 is DiscClass.COMPRESSING and d2 is DiscClass.COMPRESSING:
        return ReducingClass.REDUCING
    if d1 is DiscClass.CUT and d2 is DiscClass.CUT:
        return ReducingClass.CUT_REDUCING
    return ReducingClass.NEITHER


def is_shadow(a, t):
    """Whether the arc is a shadow of one of the tangle's strands.

    True when the arc joins a matched pair and misses the presented
    collection; sliding across the other bridge discs then carries it
    onto the strand it parallels.
    """
    if a.surface.n != t.surface.n:
        raise SurfaceMismatch("arc and tangle on different spheres")
    if frozenset(a.ends) not in t.matching():
        return False
    return all(geometric_intersection(a, s) == 0 for s in t.shadows)


def stabilization_check(t1, t2, t3, norm_bound=8):
    """Search for a destabilizing pair of shadow arcs among the tangles.

    A shadow arc of two of the tangles together with a shadow arc of the
    third sharing exactly one endpoint and no interior points witnesses
    a stabilization.  The search runs over arcs up to the norm bound and
    finding nothing proves nothing.  Returns (alpha, gamma) or None.
    """
    if norm_bound <= 0:
        return None
    tangles = (t1, t2, t3)
    surface = t1.surface
    for third in range(3):
        ta, tb = (tangles[i] for i in range(3) if i != third)
        tc = tangles[third]
        for pair in sorted(ta.matching() & tb.matching(), key=sorted):
            u, v = sorted(pair)
            for alpha in arcs_between(surface, u, v, norm_bound):
                if not (is_shadow(alpha, ta) and is_shadow(alpha, tb)):
                    continue
                for end in (u, v):
                    w = tc.partner(end)
                    if w in pair:
                        continue
                    for gamma in arcs_between(surface, end, w, norm_bound):
                        if not is_shadow(gamma, tc):
                            continue
                        if geometric_intersection(alpha, gamma) == 0:
                            return alpha, gamma
    return None
