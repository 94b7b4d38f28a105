"""Minimal generators for the canonical ideal of a curve C_f in a toric surface.

The canonical model lives in P^(g-1) with coordinates indexed by the lattice
points of Δ1 = interior hull of the Newton polygon Δ. Its ideal is the toric
ideal of Δ1 plus the forms F_{d,w}: for w a point of (1/(d-1))Z^2 strictly
inside Δ1, every term c x^p of f is rewritten as c X_{v1}...X_{vd} with
v1 + ... + vd = p + (d-1)w, all vi in Δ1.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .errors import DegenerateError, HyperellipticError, InconclusiveError, InvariantViolation, LowGenusError
from .forms import MonomialForm
from .lattice import (
    SIGMA,
    UPSILON,
    LatticePoint,
    dilate,
    interior_hull,
    unimodular_equivalent,
)
from .laurent import Status, check_nondegenerate, newton_polygon
from .toric import ToricGenerators, toric_ideal


class CaseTag(str, Enum):
    SIGMA_QUARTIC = "SigmaQuartic"
    UPSILON_GENUS4 = "UpsilonGenus4"
    TWO_SIGMA_QUINTIC = "TwoSigmaQuintic"
    CLIFFORD_GE2 = "CliffordGE2"
    TRIGONAL = "Trigonal"


class ScaledPoint(NamedTuple):
    """The point (a, b) / den; den = d - 1."""

    a: int
    b: int
    den: int

    @property
    def numerator(self):
        return LatticePoint(self.a, self.b)

    def as_fractions(self):
        return (Fraction(self.a, self.den), Fraction(self.b, self.den))

    def __str__(self):
        x, y = self.as_fractions()
        return f"({x},{y})"


@dataclass
class CurveContext:
    f: object
    delta: object
    delta1: object
    delta2: object
    genus: int
    case: CaseTag

    @property
    def points(self):
        return self.delta1.lattice_points


def classify_interior(delta1):
    """Case split for the canonical generators, tested in the order Σ, Υ, 2Σ, Δ2 nonempty."""
    g = len(delta1.lattice_points)
    if g == 3 and unimodular_equivalent(delta1, SIGMA):
        return CaseTag.SIGMA_QUARTIC
    if g == 4 and unimodular_equivalent(delta1, UPSILON):
        return CaseTag.UPSILON_GENUS4
    if g == 6 and unimodular_equivalent(delta1, dilate(SIGMA, 2)):
        return CaseTag.TWO_SIGMA_QUINTIC
    if interior_hull(delta1).dim >= 0:
        return CaseTag.CLIFFORD_GE2
    return CaseTag.TRIGONAL


def curve_context(f):
    delta = newton_polygon(f)
    if delta.dim != 2:
        raise HyperellipticError("Newton polygon is not two-dimensional", condition="dim(Δ) < 2")
    delta1 = interior_hull(delta)
    g = len(delta1.lattice_points)
    if delta1.dim < 2:
        if g < 3:
            raise LowGenusError(f"genus {g} < 3: interior hull has dimension {delta1.dim}", genus=g)
        raise HyperellipticError(
            f"interior hull is {delta1.dim}-dimensional: the curve is hyperelliptic (genus {g})", genus=g
        )
    if g < 3:
        raise LowGenusError(f"genus {g} < 3", genus=g)
    return CurveContext(f, delta, delta1, interior_hull(delta1), g, classify_interior(delta1))


def genus(f):
    """Genus of C_f: the number of interior lattice points of the Newton polygon."""
    return len(newton_polygon(f).interior_points)


def scaled_interior_points(delta1, d):
    """W_d: points of (1/(d-1))Z^2 strictly inside Δ1, sorted."""
    if d < 2:
        raise ValueError("d must be at least 2")
    k = d - 1
    return [ScaledPoint(p.x, p.y, k) for p in dilate(delta1, k).interior_points]


def decompose(point, w, d, delta1):
    """Lexicographically first multiset v1 <= ... <= vd in Δ1 with sum point + (d-1)w."""
    pts = delta1.lattice_points
    target = LatticePoint(point[0] + w.a, point[1] + w.b) if w.den == d - 1 else None
    if target is None:
        raise ValueError("w does not belong to W_d")
    pset = delta1.point_set

    def search(start, remaining, t):
        if remaining == 1:
            if t in pset and t >= pts[start]:
                return (t,)
            return None
        for i in range(start, len(pts)):
            v = pts[i]
            rest = LatticePoint(t.x - v.x, t.y - v.y)
            if not delta1.contains_scaled(rest, remaining - 1):
                continue
            sub = search(i, remaining - 1, rest)
            if sub is not None:
                return (v,) + sub
        return None

    if not delta1.contains_scaled(target, d):
        raise InvariantViolation(f"{tuple(target)} is not in {d}·Δ1")
    found = search(0, d, target)
    if found is None:
        raise InvariantViolation(f"no decomposition of {tuple(point)} + {d - 1}·{w} into {d} points of Δ1")
    return found


def build_F(f, w, d, delta1):
    """The degree-d form F_{d,w}; its chi_d image is checked against x^((d-1)w) f."""
    terms = {}
    for e, c in f.terms.items():
        mono = decompose(e, w, d, delta1)
        terms[mono] = terms.get(mono, f.field.zero) + c
    F = MonomialForm(terms, delta1.lattice_points, f.field, d)
    if not chi_identity_holds(F, f, w):
        raise InvariantViolation(f"chi identity fails for F_{{{d},{w}}}")
    return F


def chi_identity_holds(F, f, w):
    expected = {LatticePoint(e[0] + w.a, e[1] + w.b): c for e, c in f.terms.items()}
    return F.chi() == expected


@dataclass
class CanonicalGenerators:
    context: CurveContext
    toric_part: ToricGenerators
    extra: list  # (w, F) pairs
    counts: dict = field(default_factory=dict)

    @property
    def case(self):
        return self.context.case

    @property
    def genus(self):
        return self.context.genus

    @property
    def points(self):
        return self.context.points

    @property
    def toric_forms(self):
        return self.toric_part.generators

    @property
    def generators(self):
        return self.toric_forms + [F for _, F in self.extra]

    def by_degree(self, d):
        return [G for G in self.generators if G.degree == d]


def canonical_ideal(f, assume_nondegenerate=False, verdict=None):
    """Minimal generators of the canonical ideal of C_f (Δ1 two-dimensional, g >= 3).

    Degenerate input is refused. An inconclusive non-degeneracy verdict is
    refused too unless ``assume_nondegenerate`` is set.
    """
    ctx = curve_context(f)
    if verdict is None:
        verdict = check_nondegenerate(f)
    if verdict.status is Status.DEGENERATE:
        raise DegenerateError(f"f is degenerate on {verdict.face}: {verdict.explanation}", verdict=verdict.to_dict())
    if verdict.status is Status.INCONCLUSIVE and not assume_nondegenerate:
        raise InconclusiveError(
            f"non-degeneracy could not be certified on {verdict.face}", verdict=verdict.to_dict()
        )
    g = ctx.genus
    delta1 = ctx.delta1
    case = ctx.case
    field_ = f.field

    toric = toric_ideal(delta1, field_)
    if case is CaseTag.SIGMA_QUARTIC:
        degree = 4
    elif case in (CaseTag.UPSILON_GENUS4, CaseTag.CLIFFORD_GE2):
        degree = 2
    else:
        degree = 3

    ws = scaled_interior_points(delta1, degree)
    extra = [(w, build_F(f, w, degree, delta1)) for w in ws]

    gens = CanonicalGenerators(ctx, toric, extra)
    quadrics = [G for G in gens.generators if G.degree == 2]
    cubics = [G for G in gens.generators if G.degree == 3]
    quartics = [G for G in gens.generators if G.degree == 4]
    gens.counts = {
        "genus": g,
        "case": case.value,
        "quadric_count": len(quadrics),
        "cubic_count": len(cubics),
        "quartic_count": len(quartics),
    }
    _check_counts(gens, toric)
    return gens


def _check_counts(gens, toric):
    g = gens.genus
    c = gens.counts
    case = gens.case
    if case is CaseTag.SIGMA_QUARTIC:
        ok = (c["quadric_count"], c["cubic_count"], c["quartic_count"]) == (0, 0, 1)
    elif case is CaseTag.UPSILON_GENUS4:
        ok = (c["quadric_count"], c["cubic_count"], c["quartic_count"]) == (1, 1, 0) and len(toric.cubics) == 1
    elif case is CaseTag.TWO_SIGMA_QUINTIC:
        ok = (c["quadric_count"], c["cubic_count"], c["quartic_count"]) == (6, 3, 0)
    elif case is CaseTag.CLIFFORD_GE2:
        ok = not toric.cubics and (c["quadric_count"], c["cubic_count"]) == (comb(g - 2, 2), 0)
    else:
        if gens.context.delta1.boundary_count < 4:
            raise InvariantViolation("trigonal case with fewer than 4 boundary points on Δ1")
        ok = not toric.cubics and (c["quadric_count"], c["cubic_count"]) == (comb(g - 2, 2), g - 3)
    if not ok:
        raise InvariantViolation(f"generator counts {c} do not match case {case.value}")
