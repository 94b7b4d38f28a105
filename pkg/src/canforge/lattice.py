"""Exact geometry of two-dimensional lattice polygons.

Everything here is integer arithmetic: hulls use integer cross products,
lattice points are enumerated row by row from the facet inequalities with
floor division, and areas are carried doubled so they stay integral.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from enum import Enum
from functools import cached_property
from math import gcd
from typing import NamedTuple, Optional

from .errors import InvariantViolation, ParseError


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticePoint(self.x - other[0], self.y - other[1])

    def scale(self, k):
        return LatticePoint(self.x * k, self.y * k)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _canonical_cycle(vertices):
    i = min(range(len(vertices)), key=lambda k: vertices[k])
    return tuple(vertices[i:] + vertices[:i])


class LatticePolygon:
    """A lattice polygon given by its vertices.

    Two-dimensional polygons keep their vertices counterclockwise starting
    at the lexicographically smallest one, so equal polygons compare equal
    as vertex tuples. ``dim`` is -1 (empty), 0 (point), 1 (segment) or 2.
    """

    __slots__ = ("vertices", "dim", "__dict__")

    def __init__(self, vertices):
        # vertices are trusted to be in canonical form; use convex_hull otherwise
        self.vertices = tuple(LatticePoint(*v) for v in vertices)
        n = len(self.vertices)
        self.dim = {0: -1, 1: 0, 2: 1}.get(n, 2)

    @classmethod
    def from_vertices(cls, vertices):
        return convex_hull(vertices)

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "LatticePolygon(" + ", ".join(f"({x},{y})" for x, y in self.vertices) + ")"

    def is_empty(self):
        return self.dim < 0

    @cached_property
    def edges(self):
        """Directed edges (start, end), counterclockwise."""
        v = self.vertices
        if self.dim < 1:
            return ()
        if self.dim == 1:
            return ((v[0], v[1]),)
        return tuple((v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    @cached_property
    def inequalities(self):
        """Half-planes ``a*x + b*y >= c``, one per edge (2D only)."""
        out = []
        for (x0, y0), (x1, y1) in self.edges:
            a, b = -(y1 - y0), x1 - x0
            out.append((a, b, a * x0 + b * y0))
        return tuple(out)

    @cached_property
    def doubled_area(self):
        if self.dim < 2:
            return 0
        v = self.vertices
        return sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1] for i in range(len(v)))

    @property
    def area(self):
        return Fraction(self.doubled_area, 2)

    @cached_property
    def boundary_count(self):
        if self.dim < 1:
            return max(self.dim + 1, 0)
        if self.dim == 1:
            (a, b), = self.edges
            return gcd(b[0] - a[0], b[1] - a[1]) + 1
        return sum(gcd(b[0] - a[0], b[1] - a[1]) for a, b in self.edges)

    @cached_property
    def lattice_points(self):
        return tuple(_enumerate(self, strict=False))

    @cached_property
    def interior_points(self):
        if self.dim < 2:
            return ()
        return tuple(_enumerate(self, strict=True))

    @cached_property
    def point_set(self):
        return frozenset(self.lattice_points)

    def __len__(self):
        return len(self.lattice_points)

    def contains(self, point, strict=False):
        if self.dim < 2:
            if strict:
                return False
            if self.dim < 0:
                return False
            if self.dim == 0:
                return tuple(point) == tuple(self.vertices[0])
            a, b = self.vertices
            if _cross(a, b, point) != 0:
                return False
            return min(a[0], b[0]) <= point[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= point[1] <= max(a[1], b[1])
        x, y = point
        if strict:
            return all(a * x + b * y > c for a, b, c in self.inequalities)
        return all(a * x + b * y >= c for a, b, c in self.inequalities)

    def contains_scaled(self, point, k, strict=False):
        """Whether ``point`` lies in ``k`` times this polygon (2D, k >= 1)."""
        x, y = point
        if strict:
            return all(a * x + b * y > c * k for a, b, c in self.inequalities)
        return all(a * x + b * y >= c * k for a, b, c in self.inequalities)

    def translate(self, t):
        return LatticePolygon(tuple(LatticePoint(v.x + t[0], v.y + t[1]) for v in self.vertices))


def convex_hull(points):
    """Convex hull of a nonempty collection of lattice points (Andrew's monotone chain)."""
    pts = sorted(set(LatticePoint(int(p[0]), int(p[1])) for p in points))
    if not pts:
        return LatticePolygon(())
    if len(pts) == 1:
        return LatticePolygon(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 or all(_cross(pts[0], pts[-1], p) == 0 for p in pts):
        return LatticePolygon((pts[0], pts[-1]))
    return LatticePolygon(_canonical_cycle(hull))


def _enumerate(poly, strict):
    if poly.dim < 0:
        return
    if poly.dim == 0:
        yield poly.vertices[0]
        return
    if poly.dim == 1:
        a, b = poly.vertices
        g = gcd(b[0] - a[0], b[1] - a[1])
        dx, dy = (b[0] - a[0]) // g, (b[1] - a[1]) // g
        yield from sorted(LatticePoint(a[0] + k * dx, a[1] + k * dy) for k in range(g + 1))
        return
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    ineqs = poly.inequalities
    for x in range(min(xs), max(xs) + 1):
        lo, hi = min(ys), max(ys)
        for a, b, c in ineqs:
            rhs = c - a * x
            # b*y >= rhs (or > rhs when strict)
            if b > 0:
                bound = -((-rhs) // b) if not strict else rhs // b + 1
                lo = max(lo, bound)
            elif b < 0:
                bound = rhs // b if not strict else -((-rhs) // b) - 1
                # b<0: y <= rhs/b  (floor), strict: y < rhs/b
                hi = min(hi, bound)
            elif (a * x < c) if not strict else (a * x <= c):
                lo, hi = 1, 0
                break
        for y in range(lo, hi + 1):
            yield LatticePoint(x, y)


def lattice_points(poly):
    return list(poly.lattice_points)


def interior_hull(poly):
    """Convex hull of the strictly interior lattice points (possibly empty)."""
    if poly.dim < 2:
        return LatticePolygon(())
    return convex_hull(poly.interior_points)


def dilate(poly, k):
    if k < 1:
        raise ValueError("dilation factor must be a positive integer")
    return LatticePolygon(tuple(v.scale(k) for v in poly.vertices))


def ehrhart_count(poly, k):
    """Number of lattice points of the k-th dilation via the Ehrhart polynomial."""
    if poly.dim != 2:
        raise ValueError("Ehrhart count requires a two-dimensional polygon")
    if k == 0:
        return 1
    return (poly.doubled_area * k * k + poly.boundary_count * k) // 2 + 1


def interior_count_scaled(poly, k):
    """Interior lattice points of the k-th dilation, by Pick (k >= 1)."""
    return ehrhart_count(poly, k) - k * poly.boundary_count


SIGMA = LatticePolygon(((0, 0), (1, 0), (0, 1)))
UPSILON = LatticePolygon(((-1, -1), (1, 0), (0, 1)))


def hyperelliptic_triangle(r):
    """conv{(-1,1), (0,-1), (r,0)}: B = 3 and r collinear interior points."""
    return convex_hull([(-1, 1), (0, -1), (r, 0)])


# --------------------------------------------------------------------------
# unimodular maps


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map p -> A p + t with A = [[a, b], [c, d]] and det A = +-1."""

    a: int
    b: int
    c: int
    d: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise ValueError("matrix is not unimodular")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, t):
        return cls(1, 0, 0, 1, t[0], t[1])

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, p):
        return LatticePoint(self.a * p[0] + self.b * p[1] + self.tx, self.c * p[0] + self.d * p[1] + self.ty)

    def linear(self, v):
        return LatticePoint(self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def compose(self, other):
        """self after other."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        t = self((other.tx, other.ty))
        return UnimodularMap(a, b, c, d, t.x, t.y)

    def inverse(self):
        det = self.det
        a, b, c, d = self.d * det, -self.b * det, -self.c * det, self.a * det
        tx = -(a * self.tx + b * self.ty)
        ty = -(c * self.tx + d * self.ty)
        return UnimodularMap(a, b, c, d, tx, ty)

    def apply_polygon(self, poly):
        if poly.dim < 0:
            return poly
        return convex_hull([self(v) for v in poly.vertices])


def _solve_linear(e1, e2, f1, f2):
    """Integer matrix A with A e1 = f1, A e2 = f2, or None."""
    det = e1[0] * e2[1] - e2[0] * e1[1]
    if det == 0:
        return None
    # A = F E^{-1}, E = [e1 e2] columns
    inv = ((e2[1], -e2[0]), (-e1[1], e1[0]))  # times 1/det
    rows = []
    for fr in ((f1[0], f2[0]), (f1[1], f2[1])):
        row = []
        for col in range(2):
            num = fr[0] * inv[0][col] + fr[1] * inv[1][col]
            if num % det:
                return None
            row.append(num // det)
        rows.append(row)
    (a, b), (c, d) = rows
    if abs(a * d - b * c) != 1:
        return None
    return a, b, c, d


def _invariants(poly):
    return (len(poly.vertices), poly.doubled_area, poly.boundary_count, len(poly.lattice_points))


def unimodular_maps(P, Q):
    """All unimodular maps carrying the 2D polygon P onto Q."""
    if P.dim != 2 or Q.dim != 2 or _invariants(P) != _invariants(Q):
        return []
    target = set(Q.vertices)
    pv, qv = P.vertices, Q.vertices
    n = len(pv)
    found = []
    for i in range(n):
        v = pv[i]
        e1 = pv[(i + 1) % n] - v
        e2 = pv[i - 1] - v
        for j in range(n):
            w = qv[j]
            f_next = qv[(j + 1) % n] - w
            f_prev = qv[j - 1] - w
            for f1, f2 in ((f_next, f_prev), (f_prev, f_next)):
                sol = _solve_linear(e1, e2, f1, f2)
                if sol is None:
                    continue
                a, b, c, d = sol
                img = (a * v[0] + b * v[1], c * v[0] + d * v[1])
                T = UnimodularMap(a, b, c, d, w[0] - img[0], w[1] - img[1])
                if {T(p) for p in pv} == target and T not in found:
                    found.append(T)
        break  # one source vertex suffices
    return found


def unimodular_equivalent(P, Q) -> Optional[UnimodularMap]:
    """A unimodular map carrying P onto Q, or None."""
    maps = unimodular_maps(P, Q)
    return maps[0] if maps else None


# --------------------------------------------------------------------------
# classification


class ClassTag(str, Enum):
    MANY_BOUNDARY = "ManyBoundary"
    SIMPLEX_SIGMA = "SimplexSigma"
    NON_HYP_THREE = "NonHypThree"
    HYP_THREE = "HypThree"


@dataclass(frozen=True)
class PolygonClass:
    tag: ClassTag
    r: Optional[int] = None
    normalizer: Optional[UnimodularMap] = field(default=None, compare=False)


def classify(poly):
    """Case split governing the number of cubic generators of the toric ideal."""
    if poly.dim != 2:
        raise ValueError("classify requires a two-dimensional polygon")
    if poly.boundary_count >= 4:
        return PolygonClass(ClassTag.MANY_BOUNDARY)
    if len(poly.lattice_points) == 3:
        return PolygonClass(ClassTag.SIMPLEX_SIGMA)
    inner = interior_hull(poly)
    if inner.dim == 1:
        r = len(poly.lattice_points) - 3
        T = unimodular_equivalent(poly, hyperelliptic_triangle(r))
        if T is None:
            raise InvariantViolation(f"{poly} is hyperelliptic with 3 boundary points but not normalisable")
        return PolygonClass(ClassTag.HYP_THREE, r, T)
    return PolygonClass(ClassTag.NON_HYP_THREE)


# --------------------------------------------------------------------------
# text format


def parse_points(text, line=1):
    """Parse ``(x1,y1) (x2,y2) ...`` into lattice points."""
    body = text
    col_offset = 0
    stripped = body.lstrip()
    col_offset = len(body) - len(stripped)
    if stripped.startswith("poly:"):
        col_offset += 5
        stripped = stripped[5:]
    pos = 0
    pts = []
    pattern = re.compile(r"\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")
    while pos < len(stripped):
        if stripped[pos:].strip() == "":
            break
        m = pattern.match(stripped, pos)
        if not m:
            raise ParseError("expected a point '(x,y)'", line, col_offset + pos + 1 + (len(stripped[pos:]) - len(stripped[pos:].lstrip())))
        pts.append(LatticePoint(int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if not pts:
        raise ParseError("no points given", line, col_offset + 1)
    return pts


def parse_polygons(text):
    """Parse one polygon per nonblank line (``poly: (x,y) ...``)."""
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        polys.append(convex_hull(parse_points(raw, lineno)))
    return polys


def format_polygon(poly):
    return "poly: " + " ".join(f"({x},{y})" for x, y in poly.vertices)
