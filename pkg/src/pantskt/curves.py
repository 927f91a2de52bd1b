"""Normal coordinates for curves on the fan-triangulated sphere.

A multicurve is recorded by its vector of intersection numbers with the
3n-6 edges.  A vector is admissible when every triangle sees an even
total and satisfies the triangle inequalities; admissible vectors are in
bijection with isotopy classes of reduced normal multicurves, which is
the canonical form used everywhere in this package.

Inside a triangle with side weights (w_a, w_b, w_c) the strands split
into corner families: the corner opposite side a carries
x_a = (w_b + w_c - w_a) / 2 parallel arcs.  Slots on an edge are numbered
0..w-1 from the tail of the edge; the corner family at the tail occupies
the low slots, the head family the high slots, and matching a slot
through its two corner arcs traces out the components.

A curve component is peripheral when its vector equals the vector of a
small circle around one puncture; such components are never accepted as
Curve values.  Trivial (nullhomotopic) components do not exist in reduced
normal form.
"""

from .errors import (Empty, NonNormal, NotConnected, NotEssential,
                     SurfaceMismatch, WrongCount, NotDisjoint,
                     DuplicateIsotopyClass, NotPants)
from .surface import PuncturedSphere

FORMAT = "pants-kt/1"


# --- admissibility and corner counts ---

def is_admissible(surface, w):
    if len(w) != len(surface.edges):
        return False
    if any((not isinstance(x, int)) or x < 0 for x in w):
        return False
    for tri in surface.triangles:
        a, b, c = (w[e] for e in tri.sides)
        if (a + b + c) % 2:
            return False
        if a > b + c or b > a + c or c > a + b:
            return False
    return True


def corner_count(surface, w, tid, v):
    """Number of arcs cutting the corner at vertex v of triangle tid."""
    tri = surface.triangles[tid]
    i = tri.verts.index(v)
    a = w[tri.sides[i]]
    b, c = (w[tri.sides[k]] for k in range(3) if k != i)
    x = (b + c - a) // 2
    assert x >= 0
    return x


def _corner_of_slot(surface, w, tid, eid, slot):
    """(vertex, rank) of the corner arc through (eid, slot) inside tid."""
    tri = surface.triangles[tid]
    e = surface.edges[eid]
    x_tail = corner_count(surface, w, tid, e.tail)
    if slot < x_tail:
        return e.tail, slot
    return e.head, w[eid] - 1 - slot


def _slot_of_corner(surface, w, tid, eid, v, rank):
    e = surface.edges[eid]
    if v == e.tail:
        return rank
    return w[eid] - 1 - rank


# --- tracing ---

def trace(surface, w):
    """Split an admissible vector into traced components.

    Returns a list of (coords, stops, triangles):
      stops      cyclic list of (edge id, slot),
      triangles  triangles[i] hosts the strand from stops[i] to stops[i+1],
      coords     the component's own coordinate vector.
    """
    if not is_admissible(surface, w):
        raise NonNormal("vector violates the matching conditions")
    todo = set()
    for eid in range(len(surface.edges)):
        for slot in range(w[eid]):
            todo.add((eid, slot))
    comps = []
    while todo:
        eid, slot = min(todo)
        tid = surface.edge_tris[eid][0]
        stops = []
        tris = []
        state = (eid, slot, tid)
        while True:
            ceid, cslot, ctid = state
            stops.append((ceid, cslot))
            tris.append(ctid)
            todo.discard((ceid, cslot))
            v, rank = _corner_of_slot(surface, w, ctid, ceid, cslot)
            tri = surface.triangles[ctid]
            nxt_e = [s for s in tri.sides_at(v) if s != ceid]
            assert len(nxt_e) == 1
            nxt_e = nxt_e[0]
            nxt_slot = _slot_of_corner(surface, w, ctid, nxt_e, v, rank)
            nxt_tid = surface.other_triangle(nxt_e, ctid)
            state = (nxt_e, nxt_slot, nxt_tid)
            if state == (eid, slot, tid):
                break
        coords = [0] * len(surface.edges)
        for se, _ in stops:
            coords[se] += 1
        comps.append((tuple(coords), stops, tris))
    return comps


def round_coords(surface, block):
    """Vector of the circle separating the puncture set block from the
    rest: weight 1 on every edge with exactly one endpoint inside."""
    block = set(block)
    w = []
    for e in surface.edges:
        w.append(1 if (e.tail in block) != (e.head in block) else 0)
    return tuple(w)


def _peripheral_vertex(surface, coords):
    """The puncture a component is parallel to, or None."""
    support = [e for e, x in enumerate(coords) if x]
    if not support or any(x != 1 for x in coords if x):
        return None
    ends = set(surface.edges[support[0]].endpoints())
    for eid in support[1:]:
        ends &= set(surface.edges[eid].endpoints())
        if not ends:
            return None
    for v in ends:
        if coords == round_coords(surface, {v}):
            return v
    return None


# --- the Curve type ---

class Curve:
    """A single essential simple closed curve in reduced normal form."""

    __slots__ = ("surface", "coords", "_route")

    def __init__(self, surface, coords):
        coords = tuple(int(x) for x in coords)
        if not any(coords):
            raise Empty("empty coordinate vector")
        if not is_admissible(surface, coords):
            raise NonNormal("vector violates the matching conditions")
        comps = trace(surface, coords)
        if len(comps) != 1:
            raise NotConnected("%d components" % len(comps))
        if _peripheral_vertex(surface, coords) is not None:
            raise NotEssential("peripheral curve")
        self.surface = surface
        self.coords = coords
        self._route = None

    def route_data(self):
        """(stops, triangles) of the traced cycle."""
        if self._route is None:
            comps = trace(self.surface, self.coords)
            self._route = (comps[0][1], comps[0][2])
        return self._route

    @property
    def n(self):
        return self.surface.n

    def norm(self):
        return sum(self.coords)

    def sides(self):
        return puncture_sides(self)

    def __eq__(self, other):
        return (isinstance(other, Curve) and other.surface.n == self.surface.n
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.surface.n, self.coords))

    def __repr__(self):
        return "Curve(n=%d, %s)" % (self.surface.n, list(self.coords))

    def to_json(self):
        return {"format": FORMAT, "n": self.surface.n,
                "coords": list(self.coords)}

    @staticmethod
    def from_json(doc):
        return Curve(PuncturedSphere(doc["n"]), doc["coords"])


def round_curve(surface, block):
    """The curve enclosing a cyclically consecutive block of punctures."""
    block = sorted(set(block))
    n = surface.n
    if not 2 <= len(block) <= n - 2:
        raise NotEssential("block of %d punctures" % len(block))
    gaps = sum(1 for a, b in zip(block, block[1:]) if b != a + 1)
    # consecutive cyclically: one interior gap is fine only when the block
    # wraps around from n back to 1
    wraps = block[0] == 1 and block[-1] == n
    if gaps > (1 if wraps else 0):
        raise NonNormal("block %r is not consecutive" % (block,))
    return Curve(surface, round_coords(surface, block))


class MultiCurveReport:
    """Outcome of normalizing a vector that is not a single essential
    curve: the traced components with multiplicities."""

    def __init__(self, surface, entries):
        self.surface = surface
        # entries: list of (coords, multiplicity, peripheral_vertex_or_None)
        self.entries = entries

    def total(self):
        return sum(m for _, m, _ in self.entries)

    def essential_curves(self):
        out = []
        for coords, mult, periph in self.entries:
            if periph is None:
                out.extend([Curve(self.surface, coords)] * mult)
        return out

    def __repr__(self):
        return "MultiCurveReport(%d components)" % self.total()


def normalize(surface, w):
    """Canonical form of an admissible vector.

    Returns the Curve when the vector encodes one essential curve, else a
    MultiCurveReport.  Raises Empty on the zero vector and NonNormal on
    inadmissible input.
    """
    w = tuple(int(x) for x in w)
    if len(w) != len(surface.edges):
        raise NonNormal("wrong vector length")
    if not any(w):
        raise Empty("empty coordinate vector")
    if not is_admissible(surface, w):
        raise NonNormal("vector violates the matching conditions")
    comps = trace(surface, w)
    if len(comps) == 1 and _peripheral_vertex(surface, comps[0][0]) is None:
        return Curve(surface, comps[0][0])
    counted = {}
    order = []
    for coords, _, _ in comps:
        if coords not in counted:
            counted[coords] = 0
            order.append(coords)
        counted[coords] += 1
    entries = [(c, counted[c], _peripheral_vertex(surface, c)) for c in order]
    return MultiCurveReport(surface, entries)


# --- complementary regions ---

class Regions:
    """Complementary regions of an admissible multicurve vector.

    Cells are corner pieces and triangle centers glued across edges.  The
    structure answers which punctures share a region and which curve
    components bound it.
    """

    def __init__(self, surface, w, comp_of=None):
        self.surface = surface
        self.w = tuple(w)
        if not is_admissible(surface, self.w):
            raise NonNormal("vector violates the matching conditions")
        if comp_of is None:
            comp_of = {}
            for ci, (_, stops, _) in enumerate(trace(surface, self.w)):
                for st in stops:
                    comp_of[st] = ci
        self.comp_of = comp_of
        self._build()

    def _cell_corner(self, tid, v, depth):
        return ("c", tid, v, depth)

    def _cell_center(self, tid):
        return ("z", tid)

    def cell_of_interval(self, tid, eid, k):
        surface, w = self.surface, self.w
        e = surface.edges[eid]
        x_tail = corner_count(surface, w, tid, e.tail)
        if k < x_tail:
            return self._cell_corner(tid, e.tail, k)
        if k > x_tail:
            return self._cell_corner(tid, e.head, w[eid] - k)
        return self._cell_center(tid)

    def _find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.parent[ra] = rb

    def _build(self):
        surface, w = self.surface, self.w
        self.parent = {}
        for tri in surface.triangles:
            self.parent[self._cell_center(tri.tid)] = self._cell_center(tri.tid)
            for v in tri.verts:
                for d in range(corner_count(surface, w, tri.tid, v)):
                    c = self._cell_corner(tri.tid, v, d)
                    self.parent[c] = c
        for eid in range(len(surface.edges)):
            t1, t2 = surface.edge_tris[eid]
            for k in range(w[eid] + 1):
                self._union(self.cell_of_interval(t1, eid, k),
                            self.cell_of_interval(t2, eid, k))

        # region of each puncture
        self.region_of_puncture = {}
        for v in range(1, surface.n + 1):
            eid = surface.vertex_star(v)[0]
            e = surface.edges[eid]
            k = 0 if e.tail == v else w[eid]
            tid = surface.edge_tris[eid][0]
            self.region_of_puncture[v] = self._find(
                self.cell_of_interval(tid, eid, k))

        # adjacency between regions through each corner arc
        self.region_comps = {}
        self._regions = set(self._find(c) for c in self.parent)
        for r in self._regions:
            self.region_comps[r] = set()
        for tri in surface.triangles:
            for v in tri.verts:
                x = corner_count(surface, w, tri.tid, v)
                sides = tri.sides_at(v)
                for d in range(x):
                    inner = self._cell_corner(tri.tid, v, d)
                    outer = (self._cell_corner(tri.tid, v, d + 1)
                             if d + 1 < x else self._cell_center(tri.tid))
                    slot = _slot_of_corner(surface, w, tri.tid, sides[0], v, d)
                    comp = self.comp_of[(sides[0], slot)]
                    self.region_comps[self._find(inner)].add(comp)
                    self.region_comps[self._find(outer)].add(comp)

    def regions(self):
        return sorted(self._regions, key=repr)

    def punctures_of(self, region):
        return frozenset(v for v, r in self.region_of_puncture.items()
                         if r == region)

    def count(self):
        return len(self._regions)


class PunctureBipartition:
    """The two puncture sets cut out by a separating curve.

    inside is the smaller side, or the lexicographically earlier one when
    the two sides have the same size, in which case two_insides is set.
    """

    __slots__ = ("inside", "outside", "two_insides")

    def __init__(self, side_a, side_b):
        a, b = frozenset(side_a), frozenset(side_b)
        if len(a) > len(b) or (len(a) == len(b)
                               and sorted(a) > sorted(b)):
            a, b = b, a
        self.inside = a
        self.outside = b
        self.two_insides = len(a) == len(b)

    def __repr__(self):
        flag = ", either side" if self.two_insides else ""
        return "PunctureBipartition(%s | %s%s)" % (
            sorted(self.inside), sorted(self.outside), flag)


def puncture_sides(curve):
    regs = Regions(curve.surface, curve.coords)
    assert regs.count() == 2, "a curve on the sphere has two sides"
    r1, r2 = regs.regions()
    return PunctureBipartition(regs.punctures_of(r1), regs.punctures_of(r2))


# --- disjoint unions and pants decompositions ---

def disjoint_union_vector(curves):
    """Sum the vectors and check the union is realized disjointly.

    Disjoint normal curves add coordinatewise, and conversely the traced
    components of the sum must reproduce the given multiset; otherwise
    some pair is forced to intersect.
    """
    surface = curves[0].surface
    for c in curves[1:]:
        if c.surface is not surface:
            raise SurfaceMismatch("curves on different spheres")
    total = [0] * len(surface.edges)
    for c in curves:
        for e, x in enumerate(c.coords):
            total[e] += x
    comps = trace(surface, total)
    got = sorted(c[0] for c in comps)
    want = sorted(c.coords for c in curves)
    if got != want:
        raise NotDisjoint("curves are not simultaneously disjoint")
    return tuple(total), comps


def validate_pants(surface, curves):
    """Check that the curves form a pants decomposition.

    n-3 distinct, pairwise disjoint essential curves whose complement is
    all pairs of pants: every region has puncture count plus adjacent
    component count equal to three.  Returns the Regions structure.
    """
    if len(curves) != surface.n - 3:
        raise WrongCount("expected %d curves, got %d"
                         % (surface.n - 3, len(curves)))
    seen = set()
    for c in curves:
        if c.surface is not surface:
            raise SurfaceMismatch("curve on a different sphere")
        if c.coords in seen:
            raise DuplicateIsotopyClass(repr(list(c.coords)))
        seen.add(c.coords)
    total, comps = disjoint_union_vector(curves)
    comp_of = {}
    for ci, (_, stops, _) in enumerate(comps):
        for st in stops:
            comp_of[st] = ci
    regs = Regions(surface, total, comp_of)
    if regs.count() != len(curves) + 1:
        raise NotPants("expected %d regions, found %d"
                       % (len(curves) + 1, regs.count()))
    for r in regs.regions():
        ends = len(regs.punctures_of(r)) + len(regs.region_comps[r])
        if ends != 3:
            raise NotPants("region with %d ends" % ends)
    return regs
