"""Laurent polynomials in x, y, their Newton polygons and non-degeneracy.

The non-degeneracy test is three-valued. Edges are decided exactly through a
squarefreeness test on a univariate model. The full face is certified
non-degenerate when the y-resultants of (F, F_x) and (F, F_y) share no
root other than x = 0; degeneracy needs an explicit torus witness in the
ground field. Anything in between is reported as inconclusive.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from .algebra import QQ, UniPoly, gcd_uni, resultant_y
from .algebra.fields import PrimeField
from .errors import ParseError
from .lattice import LatticePoint, convex_hull


class LaurentPoly:
    """Finitely supported map from exponent pairs to nonzero coefficients."""

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            c = field(c)
            if c:
                e = LatticePoint(int(e[0]), int(e[1]))
                clean[e] = clean.get(e, field.zero) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def parse(cls, text, field=QQ):
        return parse_laurent(text, field)

    @classmethod
    def monomial(cls, exponent, coeff=1, field=QQ):
        return cls({tuple(exponent): coeff}, field)

    @property
    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __getitem__(self, e):
        return self.terms.get(tuple(e), self.field.zero)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, self.field.zero) + c
        return LaurentPoly(out, self.field)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1])
                    out[e] = out.get(e, self.field.zero) + c1 * c2
            return LaurentPoly(out, self.field)
        c = self.field(other)
        return LaurentPoly({e: v * c for e, v in self.terms.items()}, self.field)

    __rmul__ = __mul__

    def shift(self, a, b):
        """Multiply by the monomial x^a y^b."""
        return LaurentPoly({(e[0] + a, e[1] + b): c for e, c in self.terms.items()}, self.field)

    def derivative(self, var):
        k = 0 if var == "x" else 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = (e[0] - 1, e[1]) if k == 0 else (e[0], e[1] - 1)
                out[ne] = c * e[k]
        return LaurentPoly(out, self.field)

    def substitute_exponents(self, T):
        """Apply a unimodular map to every exponent."""
        return LaurentPoly({T(e): c for e, c in self.terms.items()}, self.field)

    def restrict(self, points):
        pts = set(points)
        return LaurentPoly({e: c for e, c in self.terms.items() if e in pts}, self.field)

    def __call__(self, x, y):
        acc = self.field.zero
        for (i, j), c in self.terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def eval_mod(self, x, y, p):
        """Evaluate at integers x, y modulo p (x, y invertible)."""
        acc = 0
        for (i, j), c in self.terms.items():
            acc += _coeff_mod(c, p) * pow(x, i, p) * pow(y, j, p)
        return acc % p

    def reduce_mod(self, field):
        """Map the coefficients into a prime field."""
        return LaurentPoly({e: field(c.value if hasattr(c, "value") else c) for e, c in self.terms.items()}, field)

    def cleared(self):
        """(F, (a, b)) with F = x^-a y^-b * self a polynomial not divisible by x or y."""
        a = min(e[0] for e in self.terms)
        b = min(e[1] for e in self.terms)
        return self.shift(-a, -b), (a, b)

    def y_coefficients(self):
        """Coefficients of y^k as UniPoly in x (exponents must be >= 0)."""
        if any(e[0] < 0 or e[1] < 0 for e in self.terms):
            raise ValueError("negative exponents; clear denominators first")
        if not self.terms:
            return []
        dy = max(e[1] for e in self.terms)
        dx = max(e[0] for e in self.terms)
        rows = [[self.field.zero] * (dx + 1) for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [UniPoly(r, self.field) for r in rows]

    def in_y_at(self, x0):
        """Univariate polynomial in y after substituting x = x0 (nonnegative exponents)."""
        coeffs = {}
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs.get(j, self.field.zero) + c * x0 ** i
        top = max(coeffs) if coeffs else -1
        return UniPoly([coeffs.get(k, self.field.zero) for k in range(top + 1)], self.field)

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


def _coeff_mod(c, p):
    if hasattr(c, "value"):
        return c.value % p
    c = Fraction(c)
    if c.denominator % p == 0:
        raise ZeroDivisionError(f"{p} divides a coefficient denominator")
    return c.numerator * pow(c.denominator, -1, p) % p


# --------------------------------------------------------------------------
# text grammar

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:\s*/\s*\d+)?)?\s*
        (?P<star1>\*)?\s*
        (?:(?P<x>x)\s*(?:\^\s*(?P<xe>[+-]?\d+|\(\s*[+-]?\d+\s*\)))?)?\s*
        (?P<star2>\*)?\s*
        (?:(?P<y>y)\s*(?:\^\s*(?P<ye>[+-]?\d+|\(\s*[+-]?\d+\s*\)))?)?\s*""",
    re.VERBOSE,
)


def parse_laurent(text, field=QQ, line=1):
    """Parse e.g. ``13*x^6*y^5 - 6*x^6*y^4 + x^3 + 3*y^4`` or ``x^-1*y + 2``."""
    pos = 0
    n = len(text)
    terms = {}
    first = True
    while pos < n:
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
        if not m or m.end() == pos or not (m.group("coeff") or m.group("x") or m.group("y")):
            bad = start
            if m and m.group("sign"):
                bad = m.end("sign")
                while bad < n and text[bad].isspace():
                    bad += 1
            raise ParseError(f"unexpected {text[bad:bad + 1]!r}", line, bad + 1)
        if not first and not m.group("sign"):
            raise ParseError("expected '+' or '-' between terms", line, start + 1)
        if m.group("star1") and not m.group("coeff"):
            raise ParseError("'*' without a coefficient", line, start + 1)
        if m.group("coeff") and m.group("star1") is None and (m.group("x") or m.group("y")):
            raise ParseError("expected '*' after coefficient", line, start + 1)
        if m.group("star2") and not (m.group("x") and m.group("y")):
            raise ParseError("dangling '*'", line, m.end())
        if m.group("x") and m.group("y") and not m.group("star2"):
            raise ParseError("expected '*' between x and y", line, m.start("y") + 1)
        coeff = Fraction(m.group("coeff").replace(" ", "")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        ex = _exp(m.group("xe")) if m.group("x") else 0
        ey = _exp(m.group("ye")) if m.group("y") else 0
        try:
            c = field(coeff)
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), line, start + 1) from None
        terms[(ex, ey)] = terms.get((ex, ey), field.zero) + c
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty polynomial", line, 1)
    return LaurentPoly(terms, field)


def _exp(s):
    if s is None:
        return 1
    return int(s.strip("() "))


def format_laurent(f):
    if not f.terms:
        return "0"
    parts = []
    for (i, j) in sorted(f.terms, reverse=True):
        c = f.terms[(i, j)]
        neg = (c < 0) if isinstance(c, Fraction) else False
        mag = -c if neg else c
        mono = []
        if i:
            mono.append("x" if i == 1 else f"x^{i}")
        if j:
            mono.append("y" if j == 1 else f"y^{j}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = f"{mag}*" + "*".join(mono)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# --------------------------------------------------------------------------
# faces


class FaceKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    FULL = "full"


@dataclass(frozen=True)
class Face:
    kind: FaceKind
    points: tuple  # vertex: (v,), edge: (start, end), full: polygon vertices

    def __str__(self):
        pts = " ".join(f"({x},{y})" for x, y in self.points)
        return f"{self.kind.value} {pts}"


def newton_polygon(f):
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    return convex_hull(f.terms)


def faces(poly):
    out = [Face(FaceKind.VERTEX, (v,)) for v in poly.vertices]
    out += [Face(FaceKind.EDGE, e) for e in poly.edges]
    if poly.dim == 2:
        out.append(Face(FaceKind.FULL, poly.vertices))
    return out


def _edge_points(start, end):
    g = gcd(end[0] - start[0], end[1] - start[1])
    du, dv = (end[0] - start[0]) // g, (end[1] - start[1]) // g
    return g, (du, dv)


def restrict_to_face(f, face):
    """Terms of f supported on the face; for an edge also the univariate model.

    Returns ``(f_face, model)`` where ``model`` is the UniPoly g(t) with
    f_face = x^a y^b g(x^u y^v), (a, b) the edge start and (u, v) the
    primitive edge direction, or None for vertices and the full face.
    """
    poly = newton_polygon(f)
    if face.kind is FaceKind.FULL:
        if tuple(face.points) != poly.vertices:
            raise ValueError("not the full face of the Newton polygon")
        return f, None
    if face.kind is FaceKind.VERTEX:
        (v,) = face.points
        if v not in poly.vertices:
            raise ValueError(f"{v} is not a vertex of the Newton polygon")
        return f.restrict([v]), None
    start, end = face.points
    if (start, end) not in poly.edges and (end, start) not in poly.edges:
        raise ValueError(f"{start}-{end} is not an edge of the Newton polygon")
    g, (du, dv) = _edge_points(start, end)
    pts = [(start[0] + k * du, start[1] + k * dv) for k in range(g + 1)]
    model = UniPoly([f[p] for p in pts], f.field)
    return f.restrict(pts), model


# --------------------------------------------------------------------------
# non-degeneracy


class Status(str, Enum):
    NONDEGENERATE = "NonDegenerate"
    INCONCLUSIVE = "Inconclusive"
    DEGENERATE = "Degenerate"


_SEVERITY = {Status.NONDEGENERATE: 0, Status.INCONCLUSIVE: 1, Status.DEGENERATE: 2}


@dataclass
class NondegVerdict:
    status: Status
    face: Optional[Face] = None
    explanation: str = ""
    witness: Optional[tuple] = None
    residual: Optional[UniPoly] = None
    face_results: list = field(default_factory=list)

    @property
    def ok(self):
        return self.status is Status.NONDEGENERATE

    def to_dict(self):
        d = {"status": self.status.value}
        if self.face is not None:
            d["face"] = {"kind": self.face.kind.value, "points": [list(p) for p in self.face.points]}
        if self.explanation:
            d["explanation"] = self.explanation
        if self.witness is not None:
            d["witness"] = [str(w) for w in self.witness]
        if self.residual is not None:
            d["residual_degree"] = self.residual.degree
        return d


def _check_edge(f, face):
    _, g = restrict_to_face(f, face)
    if g.degree <= 0:
        return NondegVerdict(Status.NONDEGENERATE, face)
    dg = g.derivative()
    if dg.is_zero():
        return NondegVerdict(Status.DEGENERATE, face, "inseparable edge polynomial", residual=g)
    h = gcd_uni(g, dg)
    if h.degree == 0:
        return NondegVerdict(Status.NONDEGENERATE, face)
    root = None
    for t in _roots_in_field(h):
        if t:
            root = t
            break
    return NondegVerdict(
        Status.DEGENERATE,
        face,
        f"edge polynomial {g} has a repeated nonzero root",
        witness=(root,) if root is not None else None,
        residual=h,
    )


def _check_full(f, face):
    F, _ = f.cleared()
    Fx, Fy = F.derivative("x"), F.derivative("y")
    Fc = F.y_coefficients()
    r1 = resultant_y(Fc, Fx.y_coefficients()) if not Fx.is_zero() else UniPoly([], f.field)
    r2 = resultant_y(Fc, Fy.y_coefficients()) if not Fy.is_zero() else UniPoly([], f.field)
    if not r1.is_zero() and not r2.is_zero():
        h = gcd_uni(r1, r2).strip_t()
        if h.degree == 0:
            return NondegVerdict(Status.NONDEGENERATE, face)
    else:
        h = r2 if r1.is_zero() else r1
        h = h.strip_t() if not h.is_zero() else h
    witness = _torus_witness(F, Fx, Fy, h)
    if witness is not None:
        return NondegVerdict(Status.DEGENERATE, face, "common torus zero of f, f_x, f_y", witness=witness)
    return NondegVerdict(Status.INCONCLUSIVE, face, "resultant gcd has nonzero roots outside the certificate", residual=h)


def _torus_witness(F, Fx, Fy, h):
    if h.is_zero():
        candidates = _small_field_xs(F.field)
    else:
        candidates = _roots_in_field(h)
    if candidates is None:
        return None
    for x0 in candidates:
        if not x0:
            continue
        gy = gcd_uni(gcd_uni(F.in_y_at(x0), Fx.in_y_at(x0)), Fy.in_y_at(x0))
        if gy.is_zero() or gy.degree < 1:
            continue
        for y0 in _roots_in_field(gy) or ():
            if y0 and not F(x0, y0) and not Fx(x0, y0) and not Fy(x0, y0):
                return (x0, y0)
    return None


def _small_field_xs(field):
    if isinstance(field, PrimeField) and field.p <= 5000:
        return [field(v) for v in range(1, field.p)]
    return None


_SCAN_LIMIT = 200_000


def _roots_in_field(h):
    """Roots of h lying in its coefficient field (best effort, exact)."""
    field = h.field
    if h.degree < 1:
        return []
    if isinstance(field, PrimeField):
        p = field.p
        if p <= _SCAN_LIMIT:
            return [field(v) for v in range(p) if not h(field(v))]
        # restrict to the part of h that splits over F_p
        t = UniPoly.x(field)
        xp = _powmod(t, p, h)
        lin = gcd_uni(h, xp - t)
        if lin.degree == 1:
            return [-lin.coeffs[0] / lin.coeffs[1]]
        return []
    return _rational_roots(h)


def _powmod(base, e, mod):
    result = UniPoly([1], base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _rational_roots(h, limit=10 ** 8):
    coeffs = [Fraction(c) for c in h.coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    v = 0
    while ints[v] == 0:
        v += 1
    ints = ints[v:]
    roots = [Fraction(0)] if v else []
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > limit or an > limit:
        return roots
    for q in _divisors(an):
        for p_ in _divisors(a0):
            for s in (1, -1):
                r = Fraction(s * p_, q)
                if r not in roots and not h(r):
                    roots.append(r)
    return roots


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def check_nondegenerate(f):
    """Non-degeneracy verdict for f with respect to its Newton polygon."""
    if f.is_zero():
        raise ValueError("the zero polynomial")
    poly = newton_polygon(f)
    if poly.dim != 2:
        raise ValueError("Newton polygon is not two-dimensional")
    results = []
    for face in faces(poly):
        if face.kind is FaceKind.VERTEX:
            results.append(NondegVerdict(Status.NONDEGENERATE, face))
        elif face.kind is FaceKind.EDGE:
            results.append(_check_edge(f, face))
        else:
            results.append(_check_full(f, face))
    worst = max(results, key=lambda r: _SEVERITY[r.status])
    if worst.status is Status.NONDEGENERATE:
        return NondegVerdict(Status.NONDEGENERATE, face_results=results)
    return NondegVerdict(
        worst.status, worst.face, worst.explanation, worst.witness, worst.residual, face_results=results
    )
