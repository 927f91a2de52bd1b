"""Slopes and the Farey graph.

Slopes p/q (reduced, q >= 0, with 1/0 the point at infinity) label the
essential curves on the four-punctured sphere.  Two slopes span an edge of
the Farey graph when |ps - qr| = 1, which happens exactly when the curves
meet in two points, i.e. when the pair is an A-move.  Distance is computed
two independent ways: a continued-fraction pivot count (fast, produces an
explicit geodesic) and breadth-first search in a box-capped copy of the
graph (slow, no shared logic); tests demand agreement.
"""

from math import gcd

from .errors import InvalidSlope, SurfaceMismatch
from .curves import Curve
from .surface import PuncturedSphere


class Slope:
    """Reduced fraction p/q with q >= 0; 1/0 is the single slope at infinity."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        if q == 0:
            if p == 0:
                raise InvalidSlope("0/0 is not a slope")
            p = 1
        if q < 0:
            p, q = -p, -q
        g = gcd(abs(p), q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    def __eq__(self, other):
        return isinstance(other, Slope) and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "Slope(%d, %d)" % (self.p, self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        return "%d/%d" % (self.p, self.q)

    def is_infinity(self):
        return self.q == 0


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


def parse_slope(text):
    """Parse 'P/Q', a bare integer, or 'inf' into a Slope."""
    text = text.strip()
    if text in ("inf", "-inf", "1/0", "-1/0", "oo"):
        return INFINITY
    if "/" in text:
        a, _, b = text.partition("/")
        try:
            return Slope(int(a), int(b))
        except ValueError:
            raise InvalidSlope("cannot parse slope %r" % text)
    try:
        return Slope(int(text), 1)
    except ValueError:
        raise InvalidSlope("cannot parse slope %r" % text)


def farey_adjacent(a, b):
    """Edge test: |det| = 1 for the integer vectors (p, q)."""
    return abs(a.p * b.q - a.q * b.p) == 1


def _nearest(p, q):
    # floor(p/q + 1/2); any tie direction is fine for the pivot count
    return (2 * p + q) // (2 * q)


def _to_infinity_matrix(b):
    # unimodular [[v, -u], [-s, r]] sending b = r/s to 1/0
    r, s = b.p, b.q
    if s == 0:
        return (1, 0, 0, 1)
    # extended gcd: r*v - s*u = 1
    old_r, rr = r, s
    old_u, uu = 1, 0
    while rr:
        k = old_r // rr
        old_r, rr = rr, old_r - k * rr
        old_u, uu = uu, old_u - k * uu
    # old_r = gcd = +-1, old_u * r = old_r (mod s)
    if old_r < 0:
        old_u = -old_u
    v = old_u
    u = (r * v - 1) // s
    assert r * v - s * u == 1
    return (v, -u, -s, r)


def _apply(m, s):
    a, b, c, d = m
    num = a * s.p + b * s.q
    den = c * s.p + d * s.q
    if num == 0 and den == 0:
        raise AssertionError("matrix not invertible")
    return Slope(num, den)


def farey_geodesic(a, b):
    """A geodesic [a, ..., b] through nearest-integer continued-fraction pivots."""
    if a == b:
        return [a]
    m = _to_infinity_matrix(b)
    minv = (m[3], -m[1], -m[2], m[0])
    x = _apply(m, a)
    path = _geodesic_to_infinity(x.p, x.q)
    return [_apply(minv, s) for s in path]


def _geodesic_to_infinity(p, q):
    if q == 0:
        return [INFINITY]
    if q == 1:
        return [Slope(p, 1), INFINITY]
    n = _nearest(p, q)
    r = p - n * q
    # U(z) = -1/(z - n) sends n to infinity; |r| <= q/2 < q so this terminates
    np, nq = (-q, r) if r > 0 else (q, -r)
    sub = _geodesic_to_infinity(np, nq)
    # pull back through U^{-1}(w) = n - 1/w and append the final hop to infinity
    out = []
    for w in sub:
        out.append(Slope(n * w.p - w.q, w.p))
    out.append(INFINITY)
    return out


def farey_distance(a, b):
    """Graph distance between two slopes (continued-fraction route)."""
    if a == b:
        return 0
    m = _to_infinity_matrix(b)
    x = _apply(m, a)
    p, q = x.p, x.q
    steps = 0
    while q >= 2:
        n = _nearest(p, q)
        r = p - n * q
        p, q = (-q, r) if r > 0 else (q, -r)
        steps += 1
    return steps + (1 if q == 1 else 0)


def _one_neighbor(s):
    # some r0/s0 with p*s0 - q*r0 = 1
    if s.q == 0:
        return (0, 1)
    p, q = s.p, s.q
    old_r, rr = p, q
    old_u, uu = 1, 0
    old_v, vv = 0, 1
    while rr:
        k = old_r // rr
        old_r, rr = rr, old_r - k * rr
        old_u, uu = uu, old_u - k * uu
        old_v, vv = vv, old_v - k * vv
    # old_u * p + old_v * q = old_r = +-1
    if old_r < 0:
        old_u, old_v = -old_u, -old_v
    # p * s0 - q * r0 = 1 with s0 = old_u, r0 = -old_v
    assert p * old_u - q * (-old_v) == 1
    return (-old_v, old_u)


def farey_neighbors(s, cap):
    """All neighbors of s with |numerator| <= cap and denominator <= cap."""
    r0, s0 = _one_neighbor(s)
    out = []
    # family (r0 + k p)/(s0 + k q); bound k by both coordinate caps
    p, q = s.p, s.q
    ks = set()
    for base, step in ((r0, p), (s0, q)):
        if step != 0:
            lo = (-cap - base) / step
            hi = (cap - base) / step
            if lo > hi:
                lo, hi = hi, lo
            ks.add((int(lo) - 2, int(hi) + 2))
    if not ks:
        return out
    lo = max(k[0] for k in ks)
    hi = min(k[1] for k in ks)
    for k in range(lo, hi + 1):
        num, den = r0 + k * p, s0 + k * q
        if num == 0 and den == 0:
            continue
        v = Slope(num, den)
        if abs(v.p) <= cap and v.q <= cap:
            out.append(v)
    return out


def bfs_distances(source, cap):
    """Distances from source to every slope in the |p|,|q| <= cap box via BFS."""
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in farey_neighbors(v, cap):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def bfs_distance(a, b, cap):
    """BFS route distance, or None if b is unreachable inside the box."""
    if a == b:
        return 0
    dist = {a: 0}
    frontier = [a]
    while frontier:
        nxt = []
        for v in frontier:
            for w in farey_neighbors(v, cap):
                if w == b:
                    return dist[v] + 1
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return None


def slope_to_curve(s, surface=None):
    """The curve of slope s on the four-punctured sphere.

    Slope 0/1 is the round curve about punctures {1,2}; slope 1/0 the round
    curve about {2,3}; in general the edge weights against the fan
    triangulation are [|p|, |q|, |p|, |q|, |q-p|, |q+p|].
    """
    if surface is None:
        surface = PuncturedSphere(4)
    if surface.n != 4:
        raise SurfaceMismatch("slopes parametrize curves on the 4-punctured sphere")
    p, q = s.p, s.q
    return Curve(surface, (abs(p), abs(q), abs(p), abs(q),
                           abs(q - p), abs(q + p)))


def curve_to_slope(c):
    """Inverse of slope_to_curve; raises InvalidSlope if c is not a slope curve."""
    a, b, a2, b2, u, l = c.coords
    if a != a2 or b != b2:
        raise InvalidSlope("not a slope curve")
    for p in {a, -a}:
        if abs(b - p) == u and abs(b + p) == l:
            return Slope(p, b)
    raise InvalidSlope("not a slope curve")
