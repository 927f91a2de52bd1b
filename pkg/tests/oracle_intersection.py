"""Independent minimal-crossing count for two normal curves.

Both curves keep their own strand order along every edge, so a relative
position is just a shuffle of A-points with B-points per edge.  Chords
of a triangle cross exactly when their boundary endpoints interleave,
and a configuration minimal over shuffles has no bigon (an innermost
bigon could be undone by re-shuffling the edges it touches), so the
minimum over all shuffles is the geometric intersection number.  Pure
combinatorics, no coordinates: a second route to the same number as the
overlay kernel.
"""

from itertools import combinations


def _chords(curve):
    """Per-triangle chords of a curve as ((eid, slot), (eid, slot))."""
    stops, tris = curve.route_data()
    k = len(stops)
    out = {}
    for i in range(k):
        out.setdefault(tris[i], []).append((stops[i], stops[(i + 1) % k]))
    return out


def _boundary_maps(surface, tid):
    """For each side of tid: (eid, boundary index, forward flag)."""
    tri = surface.triangles[tid]
    out = []
    for i in range(3):
        a, b = tri.verts[i], tri.verts[(i + 1) % 3]
        e = tri.sides[(i + 2) % 3]
        edge = surface.edges[e]
        if (edge.tail, edge.head) == (a, b):
            out.append((e, i, True))
        else:
            assert (edge.tail, edge.head) == (b, a)
            out.append((e, i, False))
    return out


def _cross_pairs(akeys, bkeys):
    """Crossings between chord families given cyclic boundary keys."""
    n = 0
    for a0, a1 in akeys:
        if a1 < a0:
            a0, a1 = a1, a0
        for b0, b1 in bkeys:
            in0 = a0 < b0 < a1
            in1 = a0 < b1 < a1
            if in0 != in1:
                n += 1
    return n


def minimal_crossings(a, b):
    """Minimal crossings of curves a and b over all edge shuffles."""
    surface = a.surface
    assert surface is b.surface
    wa, wb = a.coords, b.coords
    cha, chb = _chords(a), _chords(b)

    # decide edges in an order that completes triangles early
    edge_order = []
    seen = set()
    tri_done_at = {}
    for tid in sorted(set(cha) | set(chb)):
        for e in surface.triangles[tid].sides:
            if e not in seen:
                seen.add(e)
                edge_order.append(e)
    active = [e for e in edge_order if wa[e] + wb[e] > 0]
    pos_of = {e: i for i, e in enumerate(active)}
    tris = sorted(set(cha) | set(chb))
    by_depth = {}
    for tid in tris:
        depth = max((pos_of[e] for e in surface.triangles[tid].sides
                     if e in pos_of), default=-1)
        by_depth.setdefault(depth, []).append(tid)

    bmaps = {tid: _boundary_maps(surface, tid) for tid in tris}

    def tri_count(tid, shuffles):
        keys = {}
        for e, bi, fwd in bmaps[tid]:
            tot = wa[e] + wb[e]
            if tot == 0:
                continue
            asl = shuffles.get(e)
            if asl is None:
                return None
            arank = {s: g for s, g in zip(range(wa[e]), sorted(asl))}
            brank = {}
            rest = sorted(set(range(tot)) - set(asl))
            for s, g in enumerate(rest):
                brank[s] = g
            for obj, rank in ((0, arank), (1, brank)):
                for s, g in rank.items():
                    keys[(obj, e, s)] = (bi, g if fwd else tot - 1 - g)
        akeys = [(keys[(0,) + p], keys[(0,) + q]) for p, q in cha.get(tid, [])]
        bkeys = [(keys[(1,) + p], keys[(1,) + q]) for p, q in chb.get(tid, [])]
        return _cross_pairs(akeys, bkeys)

    def full_total(choice):
        shuffles = {e: choice(e) for e in active}
        return sum(tri_count(tid, shuffles) for tid in tris)

    def alternating(e):
        sel, ai, bi_ = [], 0, 0
        for g in range(wa[e] + wb[e]):
            if ai < wa[e] and (bi_ >= wb[e] or ai <= bi_):
                sel.append(g)
                ai += 1
            else:
                bi_ += 1
        return tuple(sel)

    # seed bounds: A first, B first, A/B alternating
    seeds = [full_total(lambda e: tuple(range(wa[e]))),
             full_total(lambda e: tuple(range(wb[e], wb[e] + wa[e]))),
             full_total(alternating)]
    assert len({s % 2 for s in seeds}) == 1, "parity is shuffle-invariant"
    best = min(seeds)

    shuffles = {}

    def dfs(depth, partial):
        nonlocal best
        if partial >= best:
            return
        if depth == len(active):
            best = partial
            return
        e = active[depth]
        tot = wa[e] + wb[e]
        for asl in combinations(range(tot), wa[e]):
            shuffles[e] = asl
            add = 0
            for tid in by_depth.get(depth, []):
                add += tri_count(tid, shuffles)
            dfs(depth + 1, partial + add)
        del shuffles[e]

    dfs(0, 0)
    return best
