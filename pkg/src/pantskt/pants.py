"""Pants decompositions and bounded search in the pants graph.

A pants decomposition of the n-punctured sphere is a set of n-3
disjoint, pairwise non-isotopic essential curves cutting the sphere
into three-ended pieces.  An A-move replaces one curve by another that
meets it in exactly two points and misses the rest; decompositions and
A-moves form a connected graph, locally infinite because the new curve
can spiral arbitrarily around the old one.  Every enumeration and
search here is therefore truncated by a coordinate norm bound, and a
failed search is evidence of distance, never proof.

Neighbor enumeration works inside the four-ended piece supporting the
moved curve c.  Replacements pair the four ends across c in two ways,
and each pairing is a single orbit of the Dehn twist along c, so one
seed per pairing plus twist saturation lists everything up to norm.
Seeds come from the frontier of a low-norm arc joining punctures behind
the paired ends, with a strand switch absorbing each end that is a
curve rather than a puncture.
"""

from .arrangement import (frontier_curve, geometric_intersection,
                          itinerary_class, surgery_classes,
                          twisted_itineraries)
from .census import arcs_between
from .curves import FORMAT, Curve, validate_pants as _pants_regions
from .errors import (CurveNotInDecomposition, InvalidStep, KTError,
                     SurfaceMismatch, WrongCount)
from .surface import PuncturedSphere

DEFAULT_NORM_BOUND = 24
_SEED_CAPS = (8, 10, 12, 14)
_arc_lists = {}
_neighbor_cache = {}


class PantsDecomposition:
    """n-3 disjoint essential curves in canonical coordinate order."""

    __slots__ = ("surface", "curves")

    def __init__(self, surface, curves):
        curves = sorted(curves, key=lambda c: c.coords)
        _pants_regions(surface, curves)
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "curves", tuple(curves))

    def __setattr__(self, name, value):
        raise AttributeError("PantsDecomposition is immutable")

    def key(self):
        return tuple(c.coords for c in self.curves)

    def replace(self, removed, added):
        rest = [c for c in self.curves if c != removed]
        if len(rest) != len(self.curves) - 1:
            raise CurveNotInDecomposition(repr(removed))
        return PantsDecomposition(self.surface, rest + [added])

    def __eq__(self, other):
        return (isinstance(other, PantsDecomposition)
                and other.surface.n == self.surface.n
                and other.key() == self.key())

    def __hash__(self):
        return hash((self.surface.n, self.key()))

    def __repr__(self):
        return "PantsDecomposition(n=%d, %d curves)" % (
            self.surface.n, len(self.curves))

    def to_json(self):
        return {"format": FORMAT,
                "curves": [c.to_json() for c in self.curves]}

    @staticmethod
    def from_json(doc):
        curves = [Curve.from_json(c) for c in doc["curves"]]
        if not curves:
            raise WrongCount("empty pants decomposition")
        return PantsDecomposition(curves[0].surface, curves)


def validate_pants(curves):
    """Build a PantsDecomposition, naming the violated rule on failure."""
    curves = list(curves)
    if not curves:
        raise WrongCount("no curves")
    return PantsDecomposition(curves[0].surface, curves)


class AMove:
    """One pants-graph edge: removed is swapped for added."""

    __slots__ = ("source", "removed", "added")

    def __init__(self, source, removed, added):
        self.source = source
        self.removed = removed
        self.added = added

    @property
    def index(self):
        return self.source.curves.index(self.removed)

    def result(self):
        return self.source.replace(self.removed, self.added)

    def __repr__(self):
        return "AMove(%s -> %s)" % (list(self.removed.coords),
                                    list(self.added.coords))


class PantsPath:
    """A walk in the pants graph with its certifying move list."""

    __slots__ = ("vertices", "moves")

    def __init__(self, vertices, moves):
        self.vertices = list(vertices)
        self.moves = list(moves)

    def __len__(self):
        return len(self.moves)

    def to_json(self):
        return {"format": FORMAT,
                "vertices": [v.to_json() for v in self.vertices],
                "moves": [{"removed": m.index, "added": m.added.to_json()}
                          for m in self.moves]}

    @staticmethod
    def from_json(doc):
        vertices = [PantsDecomposition.from_json(v)
                    for v in doc["vertices"]]
        moves = []
        for v, m in zip(vertices, doc["moves"]):
            moves.append(AMove(v, v.curves[m["removed"]],
                               Curve.from_json(m["added"])))
        return PantsPath(vertices, moves)


def is_a_move(p, q):
    """The A-move carrying p to q, or None when they are not adjacent."""
    if p.surface.n != q.surface.n:
        raise SurfaceMismatch("decompositions on different spheres")
    left = set(p.curves) - set(q.curves)
    right = set(q.curves) - set(p.curves)
    if len(left) != 1 or len(right) != 1:
        return None
    removed, added = left.pop(), right.pop()
    if geometric_intersection(removed, added) != 2:
        return None
    return AMove(p, removed, added)


def _far_block(o, c):
    """The block of punctures that o cuts off away from c."""
    ob = o.sides()
    cb = c.sides()
    for blk in (ob.inside, ob.outside):
        if blk <= cb.inside or blk <= cb.outside:
            return blk
    raise AssertionError("curves are not disjoint")


def _piece_ends(p, c):
    """The four ends of the 4-ended piece supporting c, two per side.

    Each end is a puncture of the sphere or another curve of p; a curve
    end carries the punctures behind it.
    """
    others = [o for o in p.curves if o != c]
    blocks = {o: _far_block(o, c) for o in others}
    sides = []
    cb = c.sides()
    for side in (cb.inside, cb.outside):
        inside = [o for o in others if blocks[o] <= side]
        maximal = [o for o in inside
                   if not any(blocks[o] < blocks[w] for w in inside)]
        covered = frozenset().union(*(blocks[o] for o in maximal)) \
            if maximal else frozenset()
        ends = [("curve", o, blocks[o]) for o in maximal]
        ends += [("puncture", u, frozenset([u])) for u in sorted(side - covered)]
        ends.sort(key=lambda e: min(e[2]))
        if len(ends) != 2:
            raise AssertionError("piece with %d ends" % len(ends))
        sides.append(ends)
    return sides


def _dual_seed(p, c, end_u, end_v, chain_u, chain_v):
    """One curve dual to c pairing the two given ends, by arc frontier.

    The arc runs between punctures behind the ends, crossing c once,
    every chain curve once and nothing else; its frontier meets each
    chain curve twice, and a strand switch along the outermost chain
    curve on each side absorbs that side's chain.  Returns None when no
    qualifying arc exists under the cap schedule.
    """
    surface = p.surface
    u, v = min(end_u[2]), min(end_v[2])
    others = [o for o in p.curves if o != c]
    absorb = [e[1] for e in (end_u, end_v) if e[0] == "curve"]
    hit = set(chain_u) | set(chain_v)
    for cap in _SEED_CAPS:
        key = (surface.n, u, v, cap)
        if key not in _arc_lists:
            _arc_lists[key] = sorted(arcs_between(surface, u, v, cap),
                                     key=lambda a: (a.norm(), a.coords))
        for arc in _arc_lists[key]:
            if geometric_intersection(c, arc) != 1:
                continue
            if any(geometric_intersection(o, arc) != (1 if o in hit else 0)
                   for o in others):
                continue
            stack = [frontier_curve(arc)]
            for w in absorb:
                nxt = []
                for z in stack:
                    for t in surgery_classes(z, w):
                        if (geometric_intersection(t, w) == 0
                                and geometric_intersection(t, c) == 2):
                            nxt.append(t)
                stack = nxt
            for z in sorted(stack, key=lambda t: (t.norm(), t.coords)):
                if z in p.curves or geometric_intersection(z, c) != 2:
                    continue
                if all(geometric_intersection(z, o) == 0 for o in others):
                    return z
    return None


def _twist_orbit(seed, c, norm_bound):
    """All curves of the seed's twist orbit along c up to the norm."""
    surface = c.surface
    out = set()
    if seed.norm() <= norm_bound:
        out.add(seed)
    for plus in (True, False):
        rises, last = 0, seed.norm()
        for k in range(1, 300):
            # past the bound and climbing for two steps: twist norms
            # grow linearly once aligned, so nothing below is missed
            if last > norm_bound and rises >= 2:
                break
            walk = twisted_itineraries(seed, c, count=k)[0 if plus else 1]
            x = itinerary_class(surface, *walk)
            assert isinstance(x, Curve), "twist left the curve class"
            if x.norm() <= norm_bound:
                out.add(x)
            rises = rises + 1 if x.norm() > last else 0
            last = x.norm()
    return out


def a_move_neighbors(p, moved, norm_bound=DEFAULT_NORM_BOUND):
    """Every curve replacing moved in p with norm up to norm_bound.

    Complete within the bound: both end pairings of the supporting
    piece are seeded and twist-saturated past the bound.
    """
    if moved not in p.curves:
        raise CurveNotInDecomposition(repr(moved))
    others = frozenset(o.coords for o in p.curves if o != moved)
    ck = (p.surface.n, moved.coords, others, norm_bound)
    if ck in _neighbor_cache:
        return set(_neighbor_cache[ck])
    (ea1, ea2), (eb1, eb2) = _piece_ends(p, moved)
    chains = {}
    for end in (ea1, ea2, eb1, eb2):
        if end[0] == "curve":
            u = min(end[2])
            chains[end] = [o for o in p.curves
                           if o != moved and u in _far_block(o, moved)]
        else:
            chains[end] = []
    out = set()
    for end_u, end_v in ((ea1, eb1), (ea1, eb2)):
        seed = _dual_seed(p, moved, end_u, end_v,
                          chains[end_u], chains[end_v])
        if seed is None:
            raise KTError("no dual seed for one end pairing; raise the "
                          "arc cap schedule")
        out |= _twist_orbit(seed, moved, norm_bound)
    _neighbor_cache[ck] = frozenset(out)
    return out


def _expand(p, norm_bound):
    """Sorted A-move neighbors of a decomposition."""
    out = []
    for c in p.curves:
        for z in a_move_neighbors(p, c, norm_bound):
            out.append((p.replace(c, z), c, z))
    out.sort(key=lambda t: t[0].key())
    return out


def bounded_distance(p, q, radius, norm_bound=DEFAULT_NORM_BOUND):
    """Shortest pants-graph path up to the given radius and curve norm.

    Returns (distance, PantsPath) or None.  Grows balls around both
    ends to half the radius; a shared vertex or a crossing edge between
    the two ball boundaries certifies every distance up to the radius,
    and no path under the norm bound is missed.  Ties break toward the
    lexicographically least meeting point, so results are stable.
    """
    if p.surface.n != q.surface.n:
        raise SurfaceMismatch("decompositions on different spheres")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if p == q:
        return 0, PantsPath([p], [])
    sides = ({p: (0, None)}, {q: (0, None)})
    fronts = [[p], [q]]
    depth = [0, 0]
    best = None  # (total, tiebreak key, vertex a, vertex b)

    def settle(total, xa, xb):
        nonlocal best
        cand = (total, xa.key() + xb.key(), xa, xb)
        if best is None or cand[:2] < best[:2]:
            best = cand

    # balls of combined depth 2*(radius//2); any path up to that length
    # has a vertex visible from both sides, whatever the split
    while depth[0] + depth[1] < 2 * (radius // 2):
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        if not fronts[side]:
            side = 1 - side
        if not fronts[side]:
            break
        here, there = sides[side], sides[1 - side]
        layer = {}
        for v in sorted(fronts[side], key=lambda x: x.key()):
            for nb, _, _ in _expand(v, norm_bound):
                if nb not in here and nb not in layer:
                    layer[nb] = (depth[side] + 1, v)
        depth[side] += 1
        here.update(layer)
        fronts[side] = sorted(layer, key=lambda x: x.key())
        for nb in fronts[side]:
            if nb in there:
                settle(here[nb][0] + there[nb][0], nb, nb)
    # odd radius: a path of full length needs one crossing edge between
    # the ball boundaries; its endpoints lie at maximal depth on both
    # sides, else a shorter path through them would have met already.
    # Adjacent vertices share all curves but one, so a join on
    # drop-one-curve keys finds every candidate pair
    if radius % 2 == 1 and best is None:
        subs = {}
        for xa in fronts[0]:
            ka = xa.key()
            for i in range(len(ka)):
                subs.setdefault(ka[:i] + ka[i + 1:], []).append((xa, i))
        for xb in fronts[1]:
            kb = xb.key()
            for i in range(len(kb)):
                for xa, j in subs.get(kb[:i] + kb[i + 1:], ()):
                    ca, cb = xa.curves[j], xb.curves[i]
                    if ca == cb:
                        continue
                    if geometric_intersection(ca, cb) != 2:
                        continue
                    total = sides[0][xa][0] + 1 + sides[1][xb][0]
                    if total <= radius:
                        settle(total, xa, xb)
    if best is None:
        return None

    def walk_back(side_map, v):
        chain = [v]
        while side_map[chain[-1]][1] is not None:
            chain.append(side_map[chain[-1]][1])
        return chain

    _, _, xa, xb = best
    route = walk_back(sides[0], xa)[::-1]
    tail = walk_back(sides[1], xb)
    route += tail[1:] if xa == xb else tail
    moves = []
    for u, v in zip(route, route[1:]):
        mv = is_a_move(u, v)
        assert mv is not None, "reconstructed path has a non-edge"
        moves.append(mv)
    assert len(moves) == best[0]
    return best[0], PantsPath(route, moves)


def verify_path(path):
    """Check every step of a path and summarize what it moves.

    Raises InvalidStep at the first consecutive pair that is not the
    recorded A-move; otherwise reports length, the move sequence, and
    the split into moved and unmoved curves.
    """
    vertices, moves = path.vertices, path.moves
    if len(vertices) != len(moves) + 1:
        raise InvalidStep(len(moves))
    for i, (u, v, mv) in enumerate(zip(vertices, vertices[1:], moves)):
        got = is_a_move(u, v)
        if got is None or mv.removed != got.removed \
                or mv.added != got.added:
            raise InvalidStep(i)
    unmoved = set(vertices[0].curves)
    for v in vertices[1:]:
        unmoved &= set(v.curves)
    # every step retires at most one starting curve, so the length
    # bounds the moved count from above
    moved = set(vertices[0].curves) - unmoved
    return {"ok": True, "length": len(moves),
            "moves": [(mv.removed, mv.added) for mv in moves],
            "moved": moved, "unmoved": unmoved}
