"""The n-punctured sphere with its fan triangulation.

Punctures are labelled 1..n and sit on a round circle in that cyclic
order.  The sphere is the double of the disk spanned by that circle: an
upper sheet and a lower sheet glued along the circle.  Each sheet carries
the fan triangulation from puncture 1:

  ring edges   s_i = (i, i+1) for i = 1..n-1 and s_n = (n, 1),
  upper diagonals u(1,j) for j = 3..n-1, drawn in the upper sheet,
  lower diagonals l(1,j) for j = 3..n-1, drawn in the lower sheet.

That is 3n-6 edges and 2n-4 triangles

  U_j = (1, j, j+1)  with sides u(1,j), s_j, u(1,j+1)   (j = 2..n-1)
  L_j = (1, j, j+1)  with sides l(1,j), s_j, l(1,j+1)

where u(1,2) and l(1,2) both mean s_1, and u(1,n), l(1,n) mean s_n.
Ring edges are oriented i -> i+1 (s_n runs n -> 1) and diagonals run
1 -> j.  Edge ids: ring edges are 0..n-1, upper diagonals n..2n-4 in
order of j, lower diagonals 2n-3..3n-7.

Both sheets are drawn on the same convex polygon; a point of the surface
is (sheet, chart point).  The upper sheet carries the standard
orientation of the chart, the lower sheet the reversed one, so crossing
signs and left/right decisions pick up sheet_sign = -1 in lower
triangles.
"""

from fractions import Fraction

from .geom import circle_point, interpolate

UPPER = 0
LOWER = 1


class Edge:
    __slots__ = ("eid", "tail", "head", "kind")

    def __init__(self, eid, tail, head, kind):
        self.eid = eid
        self.tail = tail
        self.head = head
        self.kind = kind  # "ring", "upper", "lower"

    def endpoints(self):
        return (self.tail, self.head)

    def __repr__(self):
        return "Edge(%d:%s %d->%d)" % (self.eid, self.kind, self.tail, self.head)


class Triangle:
    __slots__ = ("tid", "sheet", "verts", "sides", "name")

    def __init__(self, tid, sheet, verts, sides, name):
        self.tid = tid
        self.sheet = sheet
        self.verts = verts  # tuple of 3 puncture labels
        self.sides = sides  # side k is opposite verts[k]
        self.name = name

    def side_opposite(self, v):
        return self.sides[self.verts.index(v)]

    def sides_at(self, v):
        """The two sides incident to vertex v, as a tuple."""
        i = self.verts.index(v)
        return tuple(self.sides[k] for k in range(3) if k != i)

    def __repr__(self):
        return self.name


class PuncturedSphere:
    """Combinatorics and chart geometry of the fan-triangulated sphere."""

    _cache = {}

    def __new__(cls, n):
        if n in cls._cache:
            return cls._cache[n]
        self = super().__new__(cls)
        cls._cache[n] = self
        self._build(int(n))
        return self

    def _build(self, n):
        if n < 4:
            raise ValueError("need at least 4 punctures")
        self.n = n
        self.edges = []
        for i in range(1, n):
            self.edges.append(Edge(i - 1, i, i + 1, "ring"))
        self.edges.append(Edge(n - 1, n, 1, "ring"))
        for j in range(3, n):
            self.edges.append(Edge(len(self.edges), 1, j, "upper"))
        for j in range(3, n):
            self.edges.append(Edge(len(self.edges), 1, j, "lower"))
        assert len(self.edges) == 3 * n - 6

        self.triangles = []
        for sheet, tag in ((UPPER, "U"), (LOWER, "L")):
            for j in range(2, n):
                a = self.spoke(j, sheet)
                b = self.ring(j)
                c = self.spoke(j + 1, sheet)
                # vertex order (1, j, j+1); side k opposite vertex k
                tri = Triangle(len(self.triangles), sheet, (1, j, j + 1),
                               (b, c, a), "%s%d" % (tag, j))
                self.triangles.append(tri)
        assert len(self.triangles) == 2 * n - 4

        self.edge_tris = [[] for _ in self.edges]
        for tri in self.triangles:
            for e in tri.sides:
                self.edge_tris[e].append(tri.tid)
        assert all(len(ts) == 2 for ts in self.edge_tris)

        self._points = {k: circle_point(Fraction(k - 1)) for k in range(1, n + 1)}

    # --- edge id helpers ---

    def ring(self, i):
        """Edge id of s_i, 1 <= i <= n."""
        assert 1 <= i <= self.n
        return i - 1

    def upper(self, j):
        """Edge id of u(1,j), 3 <= j <= n-1."""
        assert 3 <= j <= self.n - 1
        return self.n + (j - 3)

    def lower(self, j):
        assert 3 <= j <= self.n - 1
        return 2 * self.n - 3 + (j - 3)

    def spoke(self, j, sheet):
        """The fan edge from 1 toward j in the given sheet, with s_1, s_n
        standing in at the two extremes."""
        if j == 2:
            return self.ring(1)
        if j == self.n:
            return self.ring(self.n)
        return self.upper(j) if sheet == UPPER else self.lower(j)

    def tri(self, tag, j):
        """Triangle U_j or L_j by name."""
        base = 0 if tag == "U" else self.n - 2
        assert 2 <= j <= self.n - 1
        return self.triangles[base + (j - 2)]

    def other_triangle(self, eid, tid):
        a, b = self.edge_tris[eid]
        return b if a == tid else a

    def sheet_sign(self, tid):
        return 1 if self.triangles[tid].sheet == UPPER else -1

    # --- vertex stars ---

    def vertex_star(self, v):
        """Cyclic list of edge ids around puncture v, in the surface's
        counterclockwise rotational order (the upper sheet carries the
        standard orientation of the chart, the lower sheet the mirrored
        one).  Consecutive edges bound one triangle of the star.
        """
        n = self.n
        if v == 1:
            out = [self.ring(1)]
            out += [self.upper(j) for j in range(3, n)]
            out.append(self.ring(n))
            out += [self.lower(j) for j in range(n - 1, 2, -1)]
            return out
        if v == 2:
            return [self.ring(1), self.ring(2)]
        if v == n:
            return [self.ring(n - 1), self.ring(n)]
        return [self.ring(v - 1), self.lower(v), self.ring(v),
                self.upper(v)]

    def star_sectors(self, v):
        """Triangles of the star of v, aligned with vertex_star: sector k
        lies counterclockwise between star edge k and star edge k+1."""
        n = self.n
        if v == 1:
            out = [self.tri("U", j).tid for j in range(2, n)]
            out += [self.tri("L", j).tid for j in range(n - 1, 1, -1)]
            return out
        if v == 2:
            return [self.tri("L", 2).tid, self.tri("U", 2).tid]
        if v == n:
            return [self.tri("L", n - 1).tid, self.tri("U", n - 1).tid]
        return [self.tri("L", v - 1).tid, self.tri("L", v).tid,
                self.tri("U", v).tid, self.tri("U", v - 1).tid]

    # --- chart geometry ---

    def vertex_point(self, k):
        return self._points[k]

    def edge_point(self, eid, t):
        e = self.edges[eid]
        return interpolate(self._points[e.tail], self._points[e.head], t)

    def triangle_centroid(self, tid):
        tri = self.triangles[tid]
        xs = [self._points[v] for v in tri.verts]
        return (sum(p[0] for p in xs) / 3, sum(p[1] for p in xs) / 3)

    def __repr__(self):
        return "PuncturedSphere(%d)" % self.n
