"""Exact planar geometry over the rationals.

Points are pairs of Fractions.  Every predicate is exact; nothing in the
package ever compares floats.  The punctured sphere is drawn as a convex
polygon (one sheet for each hemisphere), so all the geometry we ever need
is segment against segment inside a triangle.
"""

from fractions import Fraction

Frac = Fraction


def pt(x, y):
    return (Fraction(x), Fraction(y))


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def scale(a, s):
    s = Fraction(s)
    return (a[0] * s, a[1] * s)


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def orient(a, b, c):
    """Sign of the signed area of the triangle a, b, c."""
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def interpolate(a, b, t):
    t = Fraction(t)
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def circle_point(t):
    """Rational point on the unit circle with tan-half-angle parameter t.

    t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).  Strictly increasing in angle for
    t >= 0, which is all we use: puncture k sits at parameter k-1.
    """
    t = Fraction(t)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def seg_params(p, q, a, b):
    """Intersection parameters of segment p->q with segment a->b.

    Returns (t, u) with p + t(q-p) = a + u(b-a) when the supporting lines
    are not parallel, else None.  Callers decide which parameter ranges
    count as a crossing.
    """
    r = sub(q, p)
    s = sub(b, a)
    den = cross(r, s)
    if den == 0:
        return None
    qp = sub(a, p)
    t = cross(qp, s) / den
    u = cross(qp, r) / den
    return (t, u)


def seg_crossing(p, q, a, b):
    """Proper interior crossing of two segments, or None.

    Proper means both parameters are strictly inside (0, 1).  Shared
    endpoints and touchings do not count; the overlay machinery arranges
    its polylines so that those are the only degenerate contacts.
    """
    tu = seg_params(p, q, a, b)
    if tu is None:
        return None
    t, u = tu
    if 0 < t < 1 and 0 < u < 1:
        return (t, u, interpolate(p, q, t))
    return None


def crossing_sign(dir_a, dir_b):
    """+1 when dir_b points to the left of dir_a in the chart, else -1."""
    v = cross(dir_a, dir_b)
    assert v != 0, "transversality violated"
    return 1 if v > 0 else -1
