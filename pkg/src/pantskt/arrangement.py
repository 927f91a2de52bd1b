"""Exact overlay geometry: drawing strands, removing bigons, counting.

A curve or arc is realized as a polyline with rational coordinates in the
doubled-polygon chart of its surface.  Strands cross triangulation edges
at chosen parameters (the two objects of an overlay use disjoint parameter
windows, so their edge points never coincide), and inside a triangle a
strand is a straight segment, so every crossing is computed by exact
segment arithmetic.

Minimal position comes from the bigon criterion: while the complement of
the two drawn objects has a two-sided disk face free of punctures (a bigon
between two crossings, or a half-bigon wedged at a puncture both arcs end
on), the first object is redrawn parallel to the second across that face
and the crossing pair (or single crossing) disappears.  Faces are read off
combinatorially: the four germs at a crossing are cyclically ordered by
the crossing sign corrected for the mirrored lower sheet, and a face is an
orbit of dart -> previous-germ(reverse(dart)), which keeps the face on the
left of its boundary.  Punctures are located inside faces by exact ray
probes cast from strand-free edges or vertices, so a face is simplified
only when it really is empty.  Whatever survives is the geometric
intersection number.
"""

import bisect
from fractions import Fraction

from .errors import NonNormal, SurfaceMismatch, WrongCount
from .geom import add, crossing_sign, interpolate, orient, scale, seg_params, sub
from .surface import PuncturedSphere
from .curves import FORMAT, Curve, MultiCurveReport, normalize

F0 = Fraction(0)
F1 = Fraction(1)
FHALF = Fraction(1, 2)


class _Degenerate(Exception):
    """A drawn contact that is neither a proper crossing nor a shared
    endpoint; the caller redraws with nudged bends or smaller offsets."""


# --- normal arcs ---

def _arc_corner_data(surface, w, ends_in):
    """Corner counts of an arc placement, or None if inconsistent.

    ends_in maps (triangle, vertex) to the number of end segments the
    placement puts there.  Besides the matching equations this enforces
    embeddedness: an end segment crosses every corner arc at its own
    vertex, so those corner counts must vanish.
    """
    x = {}
    for tri in surface.triangles:
        eps = [ends_in.get((tri.tid, v), 0) for v in tri.verts]
        ws = [w[e] for e in tri.sides]
        for k in range(3):
            num = (ws[(k + 1) % 3] + ws[(k + 2) % 3] - ws[k]
                   + eps[k] - eps[(k + 1) % 3] - eps[(k + 2) % 3])
            if num < 0 or num % 2:
                return None
            cnt = num // 2
            if eps[k] and cnt:
                return None
            x[(tri.tid, tri.verts[k])] = cnt
    return x


def _arc_walk(surface, w, x, ends_in, start, goal):
    """Trace the arc from its end segment at start = (tid, vertex).

    Slot layout on a side, seen from the triangle: corner arcs at the
    tail, then end segments, then corner arcs at the head.  Returns
    (stops, hosts) with hosts one longer than stops (hosts[0] carries the
    start end segment), or None when the walk does not realize a single
    embedded arc ending at goal.
    """
    t_p, p = start
    total = sum(w)
    tri = surface.triangles[t_p]
    e0 = tri.side_opposite(p)
    if w[e0] == 0:
        return None
    slot = x[(t_p, surface.edges[e0].tail)]
    stops = [(e0, slot)]
    hosts = [t_p]
    seen = set()
    eid = e0
    tid = surface.other_triangle(e0, t_p)
    while True:
        if (eid, slot, tid) in seen or len(stops) > total:
            return None
        seen.add((eid, slot, tid))
        hosts.append(tid)
        tri = surface.triangles[tid]
        edge = surface.edges[eid]
        vopp = tri.verts[tri.sides.index(eid)]
        xt = x[(tid, edge.tail)]
        eps = ends_in.get((tid, vopp), 0)
        if slot < xt:
            v, rank = edge.tail, slot
        elif slot < xt + eps:
            # the strand is this triangle's end segment
            if (tid, vopp) == goal and len(stops) == total:
                return stops, hosts
            return None
        else:
            v, rank = edge.head, w[eid] - 1 - slot
        nxt = [s for s in tri.sides_at(v) if s != eid]
        assert len(nxt) == 1
        ne = nxt[0]
        slot = rank if surface.edges[ne].tail == v else w[ne] - 1 - rank
        stops.append((ne, slot))
        eid = ne
        tid = surface.other_triangle(ne, tid)


def _arc_trace(surface, w, ends):
    """Stops and hosts of the embedded arc with these coordinates.

    The pair of triangles carrying the two end segments is found by
    enumeration; exactly one placement may trace the whole vector as a
    single arc (the two end segments of one triangle would cross, so a
    shared triangle is never tried).
    """
    p, q = ends
    results = []
    tris_p = [t.tid for t in surface.triangles if p in t.verts]
    tris_q = [t.tid for t in surface.triangles if q in t.verts]
    for tp in tris_p:
        for tq in tris_q:
            if tp == tq:
                continue
            ends_in = {(tp, p): 1, (tq, q): 1}
            x = _arc_corner_data(surface, w, ends_in)
            if x is None:
                continue
            got = _arc_walk(surface, w, x, ends_in, (tp, p), (tq, q))
            if got is not None:
                results.append(got)
    if not results:
        raise NonNormal("coordinates do not trace a single arc "
                        "between punctures %d and %d" % (p, q))
    if len(results) > 1:
        raise NonNormal("ambiguous arc coordinates")
    return results[0]


class Arc:
    """An embedded arc joining two distinct punctures, rel endpoints.

    coords counts crossings with the triangulation edges, like a curve's
    normal coordinates; the zero vector means the arc runs parallel to an
    edge joining its endpoints.  The upper and lower diagonals between the
    same pair are different classes with the same zero vector, so the
    parallel edge id is part of the data (.hug); by default the ring edge
    or the upper diagonal is taken.  Arcs that cross something have hug
    None.
    """

    __slots__ = ("surface", "ends", "coords", "hug", "_route")

    def __init__(self, surface, ends, coords, hug=None):
        p, q = int(ends[0]), int(ends[1])
        n = surface.n
        if not (1 <= p <= n and 1 <= q <= n) or p == q:
            raise NonNormal("arc ends must be two distinct punctures")
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(surface.edges):
            raise NonNormal("wrong vector length")
        if any(c < 0 for c in coords):
            raise NonNormal("negative coordinate")
        if any(coords):
            if hug is not None:
                raise NonNormal("a parallel edge only goes with the zero vector")
            route = _arc_trace(surface, coords, (p, q))
        else:
            joining = [e.eid for e in surface.edges
                       if {e.tail, e.head} == {p, q}]
            if not joining:
                raise NonNormal("zero vector, but no edge joins the ends")
            if hug is None:
                hug = joining[0]
            elif hug not in joining:
                raise NonNormal("edge %d does not join the ends" % hug)
            route = ([], [surface.edge_tris[hug][0]])
        self.surface = surface
        self.ends = (p, q)
        self.coords = coords
        self.hug = hug
        self._route = route

    def route_data(self):
        """(stops, hosts); hosts[i] carries the strand into stops[i] and
        hosts[-1] the end segment reaching ends[1]."""
        return self._route

    @property
    def n(self):
        return self.surface.n

    def norm(self):
        return sum(self.coords)

    def __eq__(self, other):
        return (isinstance(other, Arc) and other.surface.n == self.surface.n
                and set(other.ends) == set(self.ends)
                and other.coords == self.coords and other.hug == self.hug)

    def __hash__(self):
        return hash((self.surface.n, frozenset(self.ends), self.coords,
                     self.hug))

    def __repr__(self):
        extra = ", hug=%d" % self.hug if self.hug is not None else ""
        return "Arc(n=%d, %d-%d, %s%s)" % (
            self.surface.n, self.ends[0], self.ends[1], list(self.coords),
            extra)

    def to_json(self):
        doc = {"format": FORMAT, "n": self.surface.n,
               "ends": [self.ends[0], self.ends[1]],
               "coords": list(self.coords)}
        if self.hug is not None:
            doc["hug"] = self.hug
        return doc

    @staticmethod
    def from_json(doc):
        return Arc(PuncturedSphere(doc["n"]), doc["ends"], doc["coords"],
                   doc.get("hug"))


# --- drawing ---

def _stop_param(weight, slot, win):
    # window 0 fills (0, 1/2) of the edge, window 1 fills (1/2, 1)
    return (Fraction(win) + Fraction(slot + 1, weight + 1)) / 2


class _Drawn:
    """A polyline realization: items, their points, per-piece hosts.

    Items are ("stop", edge id, param), ("bend", triangle id) or
    ("end", puncture); pts holds their coordinates and hosts[i] the
    triangle of the segment pts[i] -> pts[i+1] (cyclically when closed).
    """

    __slots__ = ("closed", "items", "pts", "hosts")

    def __init__(self, closed, items, pts, hosts):
        self.closed = closed
        self.items = items
        self.pts = pts
        self.hosts = hosts

    def npieces(self):
        return len(self.items) if self.closed else len(self.items) - 1

    def piece(self, i):
        if self.closed:
            return self.pts[i], self.pts[(i + 1) % len(self.pts)]
        return self.pts[i], self.pts[i + 1]


def _draw(surface, obj, win, nudge=0):
    """Realize a Curve or Arc as a polyline in parameter window win."""
    if isinstance(obj, Curve):
        stops, tris = obj.route_data()
        items, pts = [], []
        for eid, slot in stops:
            par = _stop_param(obj.coords[eid], slot, win)
            items.append(("stop", eid, par))
            pts.append(surface.edge_point(eid, par))
        return _Drawn(True, items, pts, list(tris))
    p, q = obj.ends
    stops, hosts = obj.route_data()
    items = [("end", p)]
    pts = [surface.vertex_point(p)]
    if not stops:
        tid = hosts[0]
        mid = interpolate(surface.vertex_point(p), surface.vertex_point(q),
                          FHALF)
        frac = Fraction(1 + win, 3) * Fraction(32, 32 + nudge)
        items.append(("bend", tid))
        pts.append(interpolate(surface.triangle_centroid(tid), mid, frac))
        hosts = [tid, tid]
    else:
        for eid, slot in stops:
            par = _stop_param(obj.coords[eid], slot, win)
            items.append(("stop", eid, par))
            pts.append(surface.edge_point(eid, par))
        hosts = list(hosts)
    items.append(("end", q))
    pts.append(surface.vertex_point(q))
    return _Drawn(False, items, pts, hosts)


class _Crossing:
    __slots__ = ("posA", "posB", "tid", "pt", "sign")


class _Overlay:
    """Two drawn objects with exact crossing and face combinatorics."""

    def __init__(self, surface, da, db):
        self.surface = surface
        self.objs = [da, db]
        self._rebuild()

    # --- crossings ---

    def _rebuild(self):
        surface = self.surface
        by_tri = {}
        for oi in (0, 1):
            d = self.objs[oi]
            for i in range(d.npieces()):
                by_tri.setdefault(d.hosts[i], []).append((oi, i))
        crossings = []
        for tid in sorted(by_tri):
            segs = by_tri[tid]
            for a_ in range(len(segs)):
                o1, i1 = segs[a_]
                p0, p1 = self.objs[o1].piece(i1)
                for b_ in range(a_ + 1, len(segs)):
                    o2, i2 = segs[b_]
                    q0, q1 = self.objs[o2].piece(i2)
                    tu = seg_params(p0, p1, q0, q1)
                    if tu is None:
                        assert not (orient(p0, p1, q0) == 0
                                    and orient(p0, p1, q1) == 0), \
                            "collinear strands"
                        continue
                    t, u = tu
                    in_t = F0 < t < F1
                    in_u = F0 < u < F1
                    if in_t and in_u:
                        if o1 == o2:
                            raise AssertionError("object crosses itself")
                        c = _Crossing()
                        c.posA = (i1, t)
                        c.posB = (i2, u)
                        c.tid = tid
                        c.pt = interpolate(p0, p1, t)
                        c.sign = (crossing_sign(sub(p1, p0), sub(q1, q0))
                                  * surface.sheet_sign(tid))
                        crossings.append(c)
                    elif in_t and (u == F0 or u == F1):
                        raise _Degenerate
                    elif in_u and (t == F0 or t == F1):
                        raise _Degenerate
        crossings.sort(key=lambda c: c.posA)
        self.crossings = crossings
        self._by_tri = by_tri
        self._faces = None

    def _drawn_ends(self, oi):
        d = self.objs[oi]
        return d.items[0][1], d.items[-1][1]

    # --- faces ---

    def _outs(self, oi, r, m):
        """(forward, backward) outgoing darts of object oi at rank r."""
        if self.objs[oi].closed:
            return (oi, r, 1), (oi, (r - 1) % m, -1)
        return (oi, r + 1, 1), (oi, r, -1)

    def _build_faces(self):
        m = len(self.crossings)
        assert m > 0
        order = [sorted(range(m), key=lambda k: self.crossings[k].posA),
                 sorted(range(m), key=lambda k: self.crossings[k].posB)]
        cpos = [[getattr(self.crossings[k], at) for k in order[oi]]
                for oi, at in ((0, "posA"), (1, "posB"))]
        rank = [{k: r for r, k in enumerate(order[oi])} for oi in (0, 1)]
        nodeseq = []
        for oi in (0, 1):
            seq = [("x", k) for k in order[oi]]
            if not self.objs[oi].closed:
                p, q = self._drawn_ends(oi)
                seq = [("p", p)] + seq + [("p", q)]
            nodeseq.append(seq)
        sprev = {}
        for k in range(m):
            af, ab = self._outs(0, rank[0][k], m)
            bf, bb = self._outs(1, rank[1][k], m)
            if self.crossings[k].sign > 0:
                ring = [af, bf, ab, bb]
            else:
                ring = [af, bb, ab, bf]
            for idx, dd in enumerate(ring):
                sprev[dd] = ring[idx - 1]
        pnode_count = 0
        dangles = {}
        for oi in (0, 1):
            if self.objs[oi].closed:
                continue
            p, q = self._drawn_ends(oi)
            dangles.setdefault(("p", p), []).append((oi, 0, 1))
            dangles.setdefault(("p", q), []).append((oi, m, -1))
        for ds in dangles.values():
            pnode_count += 1
            for idx, dd in enumerate(ds):
                sprev[dd] = ds[idx - 1]
        darts = []
        nedges = 0
        for oi in (0, 1):
            cnt = m if self.objs[oi].closed else m + 1
            nedges += cnt
            for j in range(cnt):
                darts.append((oi, j, 1))
                darts.append((oi, j, -1))
        face_of = {}
        faces = []
        for d0 in darts:
            if d0 in face_of:
                continue
            cyc = []
            d = d0
            while d not in face_of:
                face_of[d] = len(faces)
                cyc.append(d)
                d = sprev[(d[0], d[1], -d[2])]
            assert d == d0
            faces.append(cyc)
        # all faces are disks: the union is connected, so Euler checks out
        assert len(faces) == nedges - (m + pnode_count) + 2
        self._order = order
        self._cpos = cpos
        self._rank = rank
        self._nodeseq = nodeseq
        self._faces = faces
        self._face_of = face_of

    def _dart_nodes(self, d):
        oi, j, s = d
        seq = self._nodeseq[oi]
        if self.objs[oi].closed:
            a, b = seq[j], seq[(j + 1) % len(seq)]
        else:
            a, b = seq[j], seq[j + 1]
        return (a, b) if s > 0 else (b, a)

    def _two_dart_faces(self):
        out = []
        for fid, cyc in enumerate(self._faces):
            if len(cyc) != 2:
                continue
            d1, d2 = cyc
            if d2 == (d1[0], d1[1], -d1[2]):
                continue  # turning around a dangling end
            dA, dB = (d1, d2) if d1[0] == 0 else (d2, d1)
            assert dA[0] == 0 and dB[0] == 1
            u, v = self._dart_nodes(dA)
            assert self._dart_nodes(dB) == (v, u)
            kinds = (u[0], v[0])
            if kinds == ("x", "x"):
                if u == v:
                    continue  # a single crossing looping on itself
                out.append((fid, dA, dB, "full"))
            else:
                assert kinds != ("p", "p")
                out.append((fid, dA, dB, "half"))
        return out

    # --- puncture location ---

    def _locate_free_punctures(self):
        """Face id of every puncture that is not an arc endpoint.

        Strand-free cells (free punctures, edges without stops, triangles
        without segments) are merged into zones; each zone is anchored by
        one exact ray probe shot into an adjacent hosting triangle.
        """
        surface = self.surface
        endpoints = set()
        for oi in (0, 1):
            if not self.objs[oi].closed:
                endpoints.update(self._drawn_ends(oi))
        free = [v for v in range(1, surface.n + 1) if v not in endpoints]
        if not free:
            return {}
        stop_edges = set()
        for oi in (0, 1):
            for it in self.objs[oi].items:
                if it[0] == "stop":
                    stop_edges.add(it[1])
        hosting = set(self._by_tri)
        parent = {}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        elems = ([("P", v) for v in free]
                 + [("E", e.eid) for e in surface.edges
                    if e.eid not in stop_edges]
                 + [("T", t.tid) for t in surface.triangles
                    if t.tid not in hosting])
        for el in elems:
            parent[el] = el
        for e in surface.edges:
            if e.eid in stop_edges:
                continue
            for tid in surface.edge_tris[e.eid]:
                if tid not in hosting:
                    union(("E", e.eid), ("T", tid))
            for v in (e.tail, e.head):
                if ("P", v) in parent:
                    union(("E", e.eid), ("P", v))
        groups = {}
        for el in elems:
            groups.setdefault(find(el), []).append(el)
        taus = [FHALF, Fraction(1, 3), Fraction(2, 3),
                Fraction(1, 5), Fraction(4, 5), Fraction(2, 7)]
        out = {}
        for els in groups.values():
            vs = [el[1] for el in els if el[0] == "P"]
            if not vs:
                continue
            fid = None
            for el in els:
                if el[0] == "E":
                    for tid in surface.edge_tris[el[1]]:
                        if tid not in hosting:
                            continue
                        for tau in taus:
                            fid = self._probe(
                                surface.edge_point(el[1], tau), tid)
                            if fid is not None:
                                break
                        if fid is not None:
                            break
                elif el[0] == "P":
                    for tri in surface.triangles:
                        if el[1] in tri.verts and tri.tid in hosting:
                            fid = self._probe(
                                surface.vertex_point(el[1]), tri.tid)
                            if fid is not None:
                                break
                if fid is not None:
                    break
            assert fid is not None, "failed to anchor a puncture zone"
            for v in vs:
                out[v] = fid
        return out

    def _probe(self, p0, tid):
        """Face on the p0 side of the first strand a ray into tid meets."""
        segs = self._by_tri.get(tid, ())
        for oj, j in segs:
            a, b = self.objs[oj].piece(j)
            for tf in (FHALF, Fraction(1, 3), Fraction(2, 3)):
                hit = self._first_hit(p0, interpolate(a, b, tf), segs)
                if hit is None:
                    continue
                oj2, j2, u = hit
                a2, b2 = self.objs[oj2].piece(j2)
                s = orient(a2, b2, p0)
                if s == 0:
                    continue
                s *= self.surface.sheet_sign(tid)
                je = self._edge_index(oj2, (j2, u))
                return self._face_of[(oj2, je, 1 if s > 0 else -1)]
        return None

    def _first_hit(self, p0, q0, segs):
        best = None
        for oj, j in segs:
            a, b = self.objs[oj].piece(j)
            tu = seg_params(p0, q0, a, b)
            if tu is None:
                continue
            t, u = tu
            if not (F0 < t <= F1):
                continue
            if u == F0 or u == F1:
                return None  # ray through a polyline corner: retry
            if not (F0 < u < F1):
                continue
            if best is not None and t == best[0]:
                return None  # ray through a crossing: retry
            if best is None or t < best[0]:
                best = (t, oj, j, u)
        if best is None:
            return None
        return best[1], best[2], best[3]

    def _edge_index(self, oi, pos):
        """Strand-edge index of a position along object oi."""
        cp = self._cpos[oi]
        k = bisect.bisect(cp, pos)
        if self.objs[oi].closed:
            return (k - 1) % len(cp)
        return k

    # --- reduction ---

    def reduce(self):
        rounds = 0
        while self.crossings:
            self._build_faces()
            cands = self._two_dart_faces()
            if not cands:
                break
            occupied = set(self._locate_free_punctures().values())
            pick = None
            for cand in cands:
                if cand[0] not in occupied:
                    pick = cand
                    break
            if pick is None:
                break
            want = len(self.crossings) - (2 if pick[3] == "full" else 1)
            saved = self.objs[0]
            done = False
            for attempt in range(7):
                try:
                    nd = self._surgery_result(pick, attempt)
                except _Degenerate:
                    continue
                self.objs[0] = nd
                try:
                    self._rebuild()
                    ok = len(self.crossings) == want
                except (_Degenerate, AssertionError):
                    # oversized offsets can graze or cross other strands;
                    # shrink and retry
                    ok = False
                if ok:
                    done = True
                    break
                self.objs[0] = saved
                self._rebuild()
                self._build_faces()
            if not done:
                raise AssertionError("bigon removal failed to converge")
            rounds += 1
            assert rounds < 100000

    def _strand_span(self, oi, j):
        """Exclusive natural-position bounds of strand edge j, the wrap
        flag, and the natural from/to nodes."""
        m = len(self.crossings)
        seq = self._nodeseq[oi]
        cp = self._cpos[oi]
        if self.objs[oi].closed:
            return (cp[j], cp[(j + 1) % m], j == m - 1,
                    seq[j], seq[(j + 1) % m])
        lo = cp[j - 1] if j >= 1 else (0, F0)
        hi = cp[j] if j < m else (len(self.objs[oi].items) - 1, F0)
        return lo, hi, False, seq[j], seq[j + 1]

    @staticmethod
    def _inside(key, lo, hi, wrap):
        if wrap:
            return key > lo or key < hi
        return lo < key < hi

    def _span_items(self, oi, lo, hi, wrap):
        d = self.objs[oi]
        out = [i for i in range(len(d.items))
               if self._inside((i, F0), lo, hi, wrap)]
        if wrap:
            out = ([i for i in out if (i, F0) > lo]
                   + [i for i in out if (i, F0) < hi])
        return out

    def _piece_events(self, piece, t_at):
        """Nearest object-0 crossing parameters around t_at on a piece."""
        prev_t, next_t = F0, F1
        for c in self.crossings:
            if c.posA[0] != piece:
                continue
            t = c.posA[1]
            if t < t_at and t > prev_t:
                prev_t = t
            if t > t_at and t < next_t:
                next_t = t
        return prev_t, next_t

    @staticmethod
    def _gap(pool, eid, par):
        lst = pool[eid]
        i = bisect.bisect_left(lst, par)
        assert i < len(lst) and lst[i] == par
        lo = lst[i - 1] if i > 0 else F0
        hi = lst[i + 1] if i + 1 < len(lst) else F1
        return min(par - lo, hi - par)

    def _inside_tri(self, tid, p):
        tri = self.surface.triangles[tid]
        cs = [self.surface.vertex_point(v) for v in tri.verts]
        s = orient(cs[0], cs[1], cs[2])
        return all(orient(cs[k], cs[(k + 1) % 3], p) == s for k in range(3))

    def _surgery_result(self, pick, attempt):
        """Object 0 redrawn across the two-dart face pick.

        The replaced stretch of object 0 is rerouted parallel to object
        1's stretch, on the side of object 1 away from the face, with
        stop parameters offset by a third of the local gap (halved per
        retry) and short connection bends inside the dead crossings'
        triangles.
        """
        _, dA, dB, kind = pick
        surface = self.surface
        A, B = self.objs
        # connection bends land this far into the flanking old pieces;
        # retries pull them toward the dead crossings
        lam = Fraction(1, 2 ** (attempt + 1))
        loA, hiA, wrapA, nfA, nhA = self._strand_span(0, dA[1])
        loB, hiB, wrapB, nfB, nhB = self._strand_span(1, dB[1])
        assert {nfA, nhA} == {nfB, nhB}
        side_want = dA[2]
        reverse_b = nfB != nfA
        bis = self._span_items(1, loB, hiB, wrapB)
        if reverse_b:
            bis.reverse()
        LB = len(B.items)

        def b_end_host(label):
            if B.items[0] == ("end", label):
                return B.hosts[0]
            assert B.items[-1] == ("end", label)
            return B.hosts[-1]

        # boundary data of the replaced stretch, traversal = A-natural
        if nfA[0] == "x":
            k = nfA[1]
            t_s = self.crossings[k].tid
            start_pt = self.crossings[k].pt
            pc, tc = self.crossings[k].posA
            assert A.hosts[pc] == t_s
            prev_t, _ = self._piece_events(pc, tc)
            a0, a1 = A.piece(pc)
            pre = (("bend", t_s), interpolate(a0, a1, tc - (tc - prev_t) * lam),
                   t_s)
        else:
            t_s = b_end_host(nfA[1])
            start_pt = surface.vertex_point(nfA[1])
            pre = None
        if nhA[0] == "x":
            k = nhA[1]
            t_e = self.crossings[k].tid
            end_pt = self.crossings[k].pt
            pe, te = self.crossings[k].posA
            assert A.hosts[pe] == t_e
            _, next_t = self._piece_events(pe, te)
            a0, a1 = A.piece(pe)
            post = (("bend", t_e), interpolate(a0, a1, te + (next_t - te) * lam),
                    t_e)
        else:
            t_e = b_end_host(nhA[1])
            end_pt = surface.vertex_point(nhA[1])
            post = None

        pool = {}
        for oi in (0, 1):
            for it in self.objs[oi].items:
                if it[0] == "stop":
                    pool.setdefault(it[1], []).append(it[2])
        for lst in pool.values():
            lst.sort()

        nbr = [start_pt] + [B.pts[bi] for bi in bis] + [end_pt]
        repl = []
        for t_idx, bi in enumerate(bis):
            it = B.items[bi]
            if not reverse_b:
                lp = bi % LB if B.closed else bi
                g1 = B.pts[(bi + 1) % LB] if B.closed else B.pts[bi + 1]
            else:
                lp = (bi - 1) % LB if B.closed else bi - 1
                g1 = B.pts[(bi - 1) % LB] if B.closed else B.pts[bi - 1]
            g0 = B.pts[bi]
            h_after = B.hosts[lp]
            if it[0] == "stop":
                eid, par = it[1], it[2]
                dlt = self._gap(pool, eid, par) / (3 * 2 ** attempt)
                chosen = None
                for cand in (par + dlt, par - dlt):
                    cp_ = surface.edge_point(eid, cand)
                    if (orient(g0, g1, cp_) * surface.sheet_sign(h_after)
                            == side_want):
                        assert chosen is None
                        chosen = (("stop", eid, cand), cp_, h_after)
                assert chosen is not None
                repl.append(chosen)
            elif it[0] == "bend":
                tid = it[1]
                dvec = sub(nbr[t_idx + 2], nbr[t_idx])
                sg = surface.sheet_sign(tid) * side_want
                vec = (-dvec[1] * sg, dvec[0] * sg)
                eps = Fraction(1, 2 ** (6 + 3 * attempt))
                p_new = None
                for _ in range(40):
                    cand = add(B.pts[bi], scale(vec, eps))
                    if self._inside_tri(tid, cand):
                        p_new = cand
                        break
                    eps /= 8
                if p_new is None:
                    raise _Degenerate
                repl.append((("bend", tid), p_new, h_after))
            else:
                raise AssertionError("end item inside a stretch")
        if repl:
            assert repl[-1][2] == t_e
        else:
            assert t_s == t_e

        new_i, new_p, new_h = [], [], []

        def emit(item, pt_, h):
            new_i.append(item)
            new_p.append(pt_)
            new_h.append(h)

        def emit_old(i):
            h = A.hosts[i] if i < len(A.hosts) else None
            emit(A.items[i], A.pts[i], h)

        la = len(A.items)
        if A.closed:
            if wrapA:
                kept = [i for i in range(la) if hiA <= (i, F0) <= loA]
                for i in kept:
                    emit_old(i)
                emit(*pre)
                for r in repl:
                    emit(*r)
                emit(*post)
            else:
                for i in range(la):
                    if (i, F0) < loA:
                        emit_old(i)
                emit(*pre)
                for r in repl:
                    emit(*r)
                emit(*post)
                for i in range(la):
                    if (i, F0) > hiA:
                        emit_old(i)
            return _Drawn(True, new_i, new_p, new_h)
        for i in range(la):
            if (i, F0) <= loA:
                emit_old(i)
        if pre is None:
            new_h[-1] = t_s  # the kept end feeds straight into the stretch
        else:
            emit(*pre)
        for r in repl:
            emit(*r)
        if post is not None:
            emit(*post)
        for i in range(la):
            if (i, F0) >= hiA:
                emit_old(i)
        new_h.pop()
        return _Drawn(False, new_i, new_p, new_h)

# --- itinerary normalization ---

def reduce_caps(surface, edges_, hosts, closed, ends=None):
    """Remove backtracking from a polyline's edge itinerary.

    edges_ lists the edges crossed in order; for a closed polyline
    hosts[i] is the triangle between edges_[i] and edges_[i+1]
    (cyclically), for an open one hosts[i] is the triangle entering
    edges_[i] with one trailing entry after the last crossing, and ends
    names the boundary punctures.

    A consecutive repeat e, e cuts off a disk slab against e and goes
    away; on an open polyline a first (last) crossing over an edge
    incident to the start (end) puncture peels the same way.  Neither
    move ever sweeps over a puncture, so the class is preserved, and the
    result with no caps left is the normal itinerary of the class.
    """
    edges_ = list(edges_)
    hosts = list(hosts)
    if closed:
        while edges_:
            k = len(edges_)
            hit = None
            for i in range(k):
                if edges_[i] == edges_[(i + 1) % k]:
                    hit = i
                    break
            if hit is None:
                break
            i = hit
            j = (i + 1) % k
            if k == 2:
                edges_, hosts = [], []
                continue
            tout = surface.other_triangle(edges_[i], hosts[i])
            assert hosts[(i - 1) % k] == tout and hosts[j] == tout
            for idx in sorted((i, j), reverse=True):
                del edges_[idx]
                del hosts[idx]
        return edges_, hosts
    p_end, q_end = ends
    while edges_:
        e0 = surface.edges[edges_[0]]
        if p_end in (e0.tail, e0.head):
            assert surface.other_triangle(edges_[0], hosts[0]) == hosts[1]
            del edges_[0]
            del hosts[0]
            continue
        el = surface.edges[edges_[-1]]
        if q_end in (el.tail, el.head):
            assert surface.other_triangle(edges_[-1], hosts[-1]) == hosts[-2]
            del edges_[-1]
            del hosts[-1]
            continue
        hit = None
        for i in range(len(edges_) - 1):
            if edges_[i] == edges_[i + 1]:
                hit = i
                break
        if hit is None:
            break
        i = hit
        tout = surface.other_triangle(edges_[i], hosts[i + 1])
        assert hosts[i] == tout and hosts[i + 2] == tout
        del edges_[i + 1]
        del edges_[i]
        del hosts[i + 2]
        del hosts[i + 1]
    return edges_, hosts


def itinerary_class(surface, edges_, hosts):
    """Class of a closed polyline: a Curve, a MultiCurveReport, or None
    when the polyline bounds a disk."""
    e2, _ = reduce_caps(surface, edges_, hosts, True)
    if not e2:
        return None
    w = [0] * len(surface.edges)
    for e in e2:
        w[e] += 1
    return normalize(surface, w)


def arc_itinerary_class(surface, edges_, hosts, ends):
    """Arc class of an open polyline itinerary between two punctures."""
    e2, h2 = reduce_caps(surface, edges_, hosts, False, ends)
    zero = [0] * len(surface.edges)
    if not e2:
        tri = surface.triangles[h2[0]]
        for eid in tri.sides:
            edge = surface.edges[eid]
            if {edge.tail, edge.head} == set(ends):
                return Arc(surface, ends, zero, eid)
        raise AssertionError("reduced arc itinerary lost its ends")
    w = list(zero)
    for e in e2:
        w[e] += 1
    return Arc(surface, ends, w)


# --- public entry points ---

def minimal_overlay(a, b):
    """Draw a and b together and reduce the pair to minimal position."""
    if a.surface.n != b.surface.n:
        raise SurfaceMismatch("n=%d against n=%d" % (a.surface.n,
                                                     b.surface.n))
    surface = a.surface
    for nudge in range(32):
        try:
            ov = _Overlay(surface, _draw(surface, a, 0, nudge),
                          _draw(surface, b, 1, nudge))
        except _Degenerate:
            has_bend = ((isinstance(a, Arc) and a.hug is not None)
                        or (isinstance(b, Arc) and b.hug is not None))
            assert has_bend, "unexpected contact between drawn strands"
            continue
        ov.reduce()
        return ov
    raise AssertionError("could not draw the overlay without contacts")


_cache = {}


def _obj_key(x):
    if isinstance(x, Curve):
        return ("c", x.surface.n, x.coords)
    if isinstance(x, Arc):
        return ("a", x.surface.n, tuple(sorted(x.ends)), x.coords,
                -1 if x.hug is None else x.hug)
    raise TypeError("expected a Curve or an Arc")


def geometric_intersection(a, b):
    """Minimal number of transverse crossings between the classes of a
    and b (rel endpoints for arcs; crossings at a shared endpoint do not
    count)."""
    ka, kb = _obj_key(a), _obj_key(b)
    if a.surface.n != b.surface.n:
        raise SurfaceMismatch("n=%d against n=%d" % (a.surface.n,
                                                     b.surface.n))
    if ka == kb:
        return 0
    key = (ka, kb) if ka < kb else (kb, ka)
    if key not in _cache:
        _cache[key] = len(minimal_overlay(a, b).crossings)
    return _cache[key]


def intersection_with_arc(curve, arc):
    """Minimal crossings of a curve with an arc, rel the arc's ends."""
    return geometric_intersection(curve, arc)


def twisted_itineraries(d, c, count=1):
    """Closed itineraries of the two Dehn twists of curve d along curve c.

    Returns (plus, minus).  Each is an (edges, hosts) walk built from a
    minimal overlay by splicing a full copy of c into d at every
    crossing.  A twist makes every strand of d spiral around the annulus
    of c to the same side, so the parametrized direction of each splice
    is the crossing sign for plus and its opposite for minus; splicing c
    one fixed way at every crossing is not a twist when signs disagree.
    With count = k the splice repeats k times, giving the k-th power of
    the twist from a single overlay, which is far cheaper than twisting
    the already twisted curve again.  Feed the walks to itinerary_class
    to normalize.  When i(d, c) = 0 both walks are d itself."""
    ov = minimal_overlay(d, c)
    dd, cc = ov.objs
    ld, lc = len(dd.items), len(cc.items)
    assert all(it[0] == "stop" for it in cc.items)
    base = []
    for j, it in enumerate(dd.items):
        if it[0] == "stop":
            base.append(((j, F0), "stop", (it[1], dd.hosts[(j - 1) % ld])))
    for x in ov.crossings:
        base.append((x.posA, "splice", x))
    base.sort(key=lambda ev: ev[0])
    out = []
    for backward in (False, True):
        edges_, in_hosts = [], []
        for _, kind, payload in base:
            if kind == "stop":
                edges_.append(payload[0])
                in_hosts.append(payload[1])
                continue
            pb = payload.posB[0]
            back = backward ^ (payload.sign < 0)
            for k in range(count * lc):
                j = (pb - k) % lc if back else (pb + 1 + k) % lc
                edges_.append(cc.items[j][1])
                in_hosts.append(cc.hosts[j if back else (j - 1) % lc])
        kk = len(edges_)
        out.append((edges_, [in_hosts[(i + 1) % kk] for i in range(kk)]))
    return out[0], out[1]


def _wrap(surface, v, tri, edges_, in_hosts, skip=None):
    """Append a rotational-order wrap around puncture v to a walk.

    The wrap starts and ends in sector tri, crossing every star edge of
    v exactly once.  With skip set the wrap starts in the sector just
    after the skipped edge, omits it, and ends on its far side."""
    star = surface.vertex_star(v)
    sect = surface.star_sectors(v)
    m = len(star)
    if skip is None:
        j0 = sect.index(tri)
        span = m
    else:
        j0 = star.index(skip)
        span = m - 1
    for r in range(span):
        edges_.append(star[(j0 + 1 + r) % m])
        in_hosts.append(sect[(j0 + r) % m])


def frontier_curve(arc):
    """Frontier of a regular neighborhood of an arc and its two ends.

    The boundary of a thin disk around puncture-arc-puncture is one
    curve: two parallel copies of the arc joined by a wrap around each
    end.  Both wraps follow the rotational order of the surface, so the
    walk closes into an embedded curve; a hug arc's wraps skip the
    hugged edge.  Crossing counts double: i(frontier, x) = 2 i(arc, x).
    """
    surface = arc.surface
    p, q = arc.ends
    stops, hosts = arc.route_data()
    edges_, in_hosts = [], []
    if arc.hug is not None:
        sect_p = surface.star_sectors(p)
        sect_q = surface.star_sectors(q)
        ip = surface.vertex_star(p).index(arc.hug)
        iq = surface.vertex_star(q).index(arc.hug)
        # the wrap at p ends on the far flank of the hugged edge, where
        # the wrap at q picks up, and vice versa
        assert sect_p[ip - 1] == sect_q[iq] and sect_q[iq - 1] == sect_p[ip]
        _wrap(surface, p, None, edges_, in_hosts, skip=arc.hug)
        _wrap(surface, q, None, edges_, in_hosts, skip=arc.hug)
    else:
        for i in range(len(stops) - 1, -1, -1):
            edges_.append(stops[i][0])
            in_hosts.append(hosts[i + 1])
        _wrap(surface, p, hosts[0], edges_, in_hosts)
        for i in range(len(stops)):
            edges_.append(stops[i][0])
            in_hosts.append(hosts[i])
        _wrap(surface, q, hosts[-1], edges_, in_hosts)
    kk = len(edges_)
    hosts_out = [in_hosts[(i + 1) % kk] for i in range(kk)]
    out = itinerary_class(surface, edges_, hosts_out)
    assert isinstance(out, Curve), "frontier walk did not close up"
    return out


def surgery_classes(d, c):
    """Curves cut from two curves meeting twice, by switching strands.

    Requires i(d, c) = 2.  Each candidate walk follows one of the two
    arcs of d between the crossings and closes along one of the two
    arcs of c; the distinct essential single curves among the four
    normalized results are returned.  Strand switches that produce disk
    walks or multicurves are dropped.
    """
    ov = minimal_overlay(d, c)
    dd, cc = ov.objs
    if len(ov.crossings) != 2:
        raise WrongCount("surgery needs exactly two crossings, got %d"
                         % len(ov.crossings))
    x1, x2 = sorted(ov.crossings, key=lambda x: x.posA)

    def segment(drawn, lo, hi, attr, backward=False):
        """Stops of a drawn curve strictly between two crossing
        positions, cyclically from lo to hi, with entering hosts."""
        ln = len(drawn.items)
        evs = [((j, F0), j) for j in range(ln)
               if drawn.items[j][0] == "stop"]
        evs.append((lo, "lo"))
        evs.append((hi, "hi"))
        evs.sort(key=lambda ev: ev[0])
        k0 = next(i for i, ev in enumerate(evs) if ev[1] == "lo")
        seg = []
        for k in range(1, len(evs)):
            tag = evs[(k0 + k) % len(evs)][1]
            if tag == "hi":
                break
            if tag != "lo":
                seg.append(tag)
        out = []
        if backward:
            for j in reversed(seg):
                out.append((drawn.items[j][1], drawn.hosts[j]))
        else:
            for j in seg:
                out.append((drawn.items[j][1],
                            drawn.hosts[(j - 1) % ln]))
        return out

    found = []
    for first, second in ((x1, x2), (x2, x1)):
        dseg = segment(dd, first.posA, second.posA, "posA")
        for backward in (False, True):
            if backward:
                cseg = segment(cc, first.posB, second.posB, "posB",
                               backward=True)
            else:
                cseg = segment(cc, second.posB, first.posB, "posB")
            pieces = dseg + cseg
            if not pieces:
                continue
            edges_ = [e for e, _ in pieces]
            in_hosts = [h for _, h in pieces]
            kk = len(edges_)
            hosts_out = [in_hosts[(i + 1) % kk] for i in range(kk)]
            try:
                got = itinerary_class(d.surface, edges_, hosts_out)
            except NonNormal:
                # a bad strand switch can close up into an immersed
                # walk with no caps to peel; not a curve, drop it
                continue
            if isinstance(got, Curve) and got not in found:
                found.append(got)
    return found
