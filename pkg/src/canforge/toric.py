"""Minimal binomial generators for the ideal of the toric surface Tor(Γ).

Quadrics come from the star pattern: pairs {p, q} of lattice points are
grouped by p + q and every pair in a group is tied to the group's
lexicographically least pair. Cubics are only needed when Γ has exactly
three boundary lattice points and is not a unimodular simplex.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb

from .algebra import QQ, ExactMatrix
from .errors import InvariantViolation
from .forms import MonomialForm, check_in_kernel_of_chi, monomial, monomial_index, monomials, span_echelon
from .lattice import ClassTag, LatticePoint, PolygonClass, classify, dilate


def chi_matrix(poly, d, field=QQ):
    """0/1 matrix of chi_d: rows are points of dΓ, columns degree-d monomials."""
    if d < 1:
        raise ValueError("d must be at least 1")
    points = poly.lattice_points
    cols = monomials(points, d)
    targets = dilate(poly, d).lattice_points
    row_of = {p: i for i, p in enumerate(targets)}
    rows = [dict() for _ in targets]
    for j, mono in enumerate(cols):
        s = (sum(p[0] for p in mono), sum(p[1] for p in mono))
        rows[row_of[s]][j] = 1
    return ExactMatrix(rows, len(cols), field)


def dim_Id_toric(poly, d):
    """dim I_d(Tor(Γ)) = C(N + d - 1, d) - #(dΓ ∩ Z^2)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    n = len(poly.lattice_points)
    if d == 0:
        return 0
    return comb(n + d - 1, d) - len(dilate(poly, d).lattice_points)


def quadric_generators(poly, field=QQ):
    if poly.dim != 2:
        raise ValueError("quadric_generators requires a two-dimensional polygon")
    pts = poly.lattice_points
    fibres = defaultdict(list)
    for mono in monomials(pts, 2):
        fibres[mono[0] + mono[1]].append(mono)
    out = []
    for s in sorted(fibres):
        rep, *rest = sorted(fibres[s])
        for mono in rest:
            out.append(MonomialForm({mono: 1, rep: -1}, pts, field))
    return out


def _vertex_cubic(poly, field):
    pts = poly.lattice_points
    verts = monomial(*poly.vertices)
    target = verts[0] + verts[1] + verts[2]
    pset = poly.point_set
    for i, p in enumerate(pts):
        for q in pts[i:]:
            r = LatticePoint(target.x - p.x - q.x, target.y - p.y - q.y)
            if r < q or r not in pset:
                continue
            mono = (p, q, r)
            if mono != verts:
                return MonomialForm({verts: 1, mono: -1}, pts, field)
    return None


def _hyperelliptic_cubics(poly, cls, field):
    r = cls.r
    back = cls.normalizer.inverse()
    a, b = LatticePoint(-1, 1), LatticePoint(0, -1)
    o = LatticePoint(0, 0)
    out = []
    for i in range(1, r + 1):
        plus = [back(a), back(b), back((i, 0))]
        minus = [back(o), back(o), back((i - 1, 0))]
        out.append(MonomialForm.binomial(plus, minus, poly.lattice_points, field))
    return out


def cubic_generators(poly, cls=None, field=QQ, quadrics=None, check=True):
    """The c_Γ cubic binomials completing the quadrics to a minimal generating set."""
    cls = cls or classify(poly)
    if cls.tag in (ClassTag.MANY_BOUNDARY, ClassTag.SIMPLEX_SIGMA):
        return []
    if cls.tag is ClassTag.NON_HYP_THREE:
        cubic = _vertex_cubic(poly, field)
        if cubic is None:
            raise InvariantViolation(f"no cubic binomial through the vertices of {poly}")
        cubics = [cubic]
    else:
        cubics = _hyperelliptic_cubics(poly, cls, field)
    for c in cubics:
        check_in_kernel_of_chi(c)
    if check:
        if quadrics is None:
            quadrics = quadric_generators(poly, field)
        ech = span_echelon(quadrics, poly.lattice_points, 3, field)
        base = ech.rank
        index = monomial_index(poly.lattice_points, 3)
        for c in cubics:
            ech.add(c.vector(index))
        if ech.rank != base + len(cubics):
            raise InvariantViolation(f"cubics for {poly} are not independent of the quadrics")
    return cubics


def expected_cubic_count(poly, cls=None):
    cls = cls or classify(poly)
    if cls.tag in (ClassTag.MANY_BOUNDARY, ClassTag.SIMPLEX_SIGMA):
        return 0
    if cls.tag is ClassTag.NON_HYP_THREE:
        return 1
    return len(poly.lattice_points) - 3


@dataclass
class ToricGenerators:
    polygon: object
    quadrics: list
    cubics: list
    cls: PolygonClass
    counts: dict = field(default_factory=dict)

    @property
    def generators(self):
        return self.quadrics + self.cubics

    @property
    def points(self):
        return self.polygon.lattice_points


def toric_ideal(poly, field=QQ, check=True):
    """Minimal generators of I(Tor(Γ)): star-pattern quadrics plus c_Γ cubics."""
    cls = classify(poly)
    quadrics = quadric_generators(poly, field)
    cubics = cubic_generators(poly, cls, field, quadrics=quadrics, check=check)
    n = len(poly.lattice_points)
    n2 = len(dilate(poly, 2).lattice_points)
    counts = {"N": n, "N2": n2, "c": expected_cubic_count(poly, cls)}
    if len(quadrics) != comb(n + 1, 2) - n2:
        raise InvariantViolation("quadric count differs from C(N+1,2) - #(2Γ)")
    if len(cubics) != counts["c"]:
        raise InvariantViolation("cubic count differs from c_Γ")
    return ToricGenerators(poly, quadrics, cubics, cls, counts)
