"""Bounded-norm censuses of normal curves and arcs.

Enumeration is a depth-first sweep over edge-weight vectors in an order
that completes triangles as early as possible, so the per-triangle matching
conditions prune most of the tree.  The strict constructors (Curve, Arc)
stay the arbiters of validity; the sweep only has to be complete, not
exact, on the loosened conditions it checks inline.
"""

from .arrangement import Arc
from .curves import Curve
from .errors import KTError


def _sweep_order(surface):
    """Edge order that finishes triangles early, with completion checkpoints.

    Returns (order, checks) where order is a permutation of edge ids and
    checks[k] lists the triangles all of whose sides are assigned once the
    first k+1 edges of the order are set.
    """
    order = []
    seen = set()
    pos = {}
    for tri in surface.triangles:
        for e in tri.sides:
            if e not in seen:
                seen.add(e)
                pos[e] = len(order)
                order.append(e)
    checks = [[] for _ in order]
    for tri in surface.triangles:
        checks[max(pos[e] for e in tri.sides)].append(tuple(tri.sides))
    return order, checks


def _curve_triangle_ok(a, b, c):
    s = a + b + c
    if s % 2:
        return False
    m = max(a, b, c)
    return 2 * m <= s


def _arc_triangle_ok(a, b, c, loose):
    # loose triangles may absorb an end segment: odd sum, one extra crossing
    s = a + b + c
    m = max(a, b, c)
    if s % 2 == 0:
        return 2 * m <= s
    return loose and 2 * m <= s + 1


def admissible_vectors(surface, norm_bound):
    """All nonzero weight vectors of total weight <= norm_bound that satisfy
    the per-triangle matching conditions."""
    order, checks = _sweep_order(surface)
    ne = len(order)
    w = {}
    out = []

    def place(k, budget):
        if k == ne:
            if any(w.values()):
                out.append(tuple(w[e] for e in range(ne)))
            return
        eid = order[k]
        for val in range(budget + 1):
            w[eid] = val
            ok = True
            for sides in checks[k]:
                a, b, c = (w[e] for e in sides)
                if not _curve_triangle_ok(a, b, c):
                    ok = False
                    break
            if ok:
                place(k + 1, budget - val)
        del w[eid]

    place(0, norm_bound)
    return out


def curves_up_to(surface, norm_bound):
    """Every essential connected curve of norm <= norm_bound, as Curve values."""
    out = []
    for w in admissible_vectors(surface, norm_bound):
        try:
            out.append(Curve(surface, w))
        except KTError:
            continue
    return out


def _arc_vectors(surface, u, v, norm_bound):
    # end segments live in triangles incident to an endpoint, at most one per
    # endpoint, and each makes its triangle's weight sum odd; everywhere else
    # the plain matching conditions hold
    order, checks = _sweep_order(surface)
    ne = len(order)
    masks = {}
    for t in surface.triangles:
        masks[tuple(t.sides)] = ((u in t.verts) and 1 or 0) | \
                                ((v in t.verts) and 2 or 0)
    w = {}
    out = []

    def place(k, budget, cu, cv, cb):
        if k == ne:
            if any(w.values()) and cu + cv + cb == 2:
                out.append(tuple(w[e] for e in range(ne)))
            return
        eid = order[k]
        for val in range(budget + 1):
            w[eid] = val
            ok = True
            ncu, ncv, ncb = cu, cv, cb
            for sides in checks[k]:
                a, b, c = (w[e] for e in sides)
                s = a + b + c
                m = max(a, b, c)
                if s % 2 == 0:
                    if 2 * m > s:
                        ok = False
                        break
                    continue
                mask = masks[sides]
                if mask == 0 or 2 * m > s + 1:
                    ok = False
                    break
                if mask == 1:
                    ncu += 1
                elif mask == 2:
                    ncv += 1
                else:
                    ncb += 1
                # tokens: one end segment per endpoint, two in total
                if ncu > 1 or ncv > 1 or ncu + ncv + ncb > 2:
                    ok = False
                    break
            if ok:
                place(k + 1, budget - val, ncu, ncv, ncb)
        del w[eid]

    place(0, norm_bound, 0, 0, 0)
    return out


def arcs_between(surface, u, v, norm_bound):
    """Every arc from puncture u to puncture v of norm <= norm_bound."""
    out = []
    for e in surface.edges:
        if {e.tail, e.head} == {u, v}:
            out.append(Arc(surface, (u, v), (0,) * len(surface.edges),
                           hug=e.eid))
    for w in _arc_vectors(surface, u, v, norm_bound):
        try:
            out.append(Arc(surface, (u, v), w))
        except KTError:
            continue
    return out
