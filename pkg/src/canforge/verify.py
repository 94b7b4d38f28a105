"""Independent oracles for the generator constructions.

* kernel dimensions of chi_d by exact elimination,
* degree-wise span dimensions and per-generator minimality,
* vanishing of generators on points of the curve sampled over F_p.
"""

import hashlib
import json
import random
import warnings
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .algebra import Echelon, rank_and_pivots
from .algebra.fields import is_probable_prime
from .forms import monomial_index, multiples_in_degree
from .lattice import dilate
from .toric import chi_matrix, dim_Id_toric


class SamplingWarning(UserWarning):
    pass


class OffCurveError(ValueError):
    pass


def oracle_dim_toric(poly, d):
    """dim I_d(Tor(Γ)) as the nullity of chi_d, by exact elimination."""
    if d not in (1, 2, 3, 4):
        raise ValueError("kernel oracle is guarded to 1 <= d <= 4")
    M = chi_matrix(poly, d)
    return M.ncols - rank_and_pivots(M).rank


def canonical_ideal_dimension(g, d):
    """dim I_d of a canonical curve of genus g: C(g+d-1, d) - (2d-1)(g-1), d >= 2."""
    return comb(g + d - 1, d) - (2 * d - 1) * (g - 1)


def expected_canonical_dimension(delta1, d):
    """dim I_d(Tor(Δ1)) + #W_d."""
    inner = len(dilate(delta1, d - 1).interior_points)
    return dim_Id_toric(delta1, d) + inner


# --------------------------------------------------------------------------
# curve points


@dataclass(frozen=True)
class SamplePoint:
    """A point (x0, y0) of the torus part of f = 0 over F_p."""

    x0: int
    y0: int
    p: int

    def __init__(self, f, x0, y0, p):
        x0 %= p
        y0 %= p
        if not x0 or not y0:
            raise OffCurveError(f"({x0}, {y0}) is not a torus point")
        if f.eval_mod(x0, y0, p):
            raise OffCurveError(f"f({x0}, {y0}) != 0 mod {p}")
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "y0", y0)
        object.__setattr__(self, "p", p)

    def monomial_values(self, points):
        """The image under (x, y) -> (x^i y^j) restricted to the given points."""
        p = self.p
        return {q: pow(self.x0, q[0], p) * pow(self.y0, q[1], p) % p for q in points}


def _coeff_mod(c, p):
    if hasattr(c, "value"):
        if c.field.p != p:
            raise ValueError("sampling prime differs from the coefficient field")
        return c.value
    num, den = c.numerator, c.denominator
    if den % p == 0:
        raise ZeroDivisionError(f"{p} divides a coefficient denominator")
    return num * pow(den, -1, p) % p


def sample_curve_points(f, p, count, seed=0, max_trials=None):
    """Up to ``count`` distinct torus points of f = 0 over F_p, deterministic in ``seed``.

    For each pseudorandom x0 every y0 in F_p^* is tested. Emits a
    :class:`SamplingWarning` when fewer than ``count // 2`` points turn up.
    """
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    F, _ = f.cleared()
    by_y = {}
    for (i, j), c in F.terms.items():
        by_y.setdefault(j, []).append((i, _coeff_mod(c, p)))
    top = max(by_y)
    dtype = np.int64 if p < 2 ** 31 else object
    ys = np.arange(1, p, dtype=dtype)
    rng = random.Random(seed)
    max_trials = max_trials or min(p - 1, max(20 * count, 200))
    xs = list(range(1, p))
    if max_trials < p - 1:
        xs = rng.sample(xs, max_trials)
    else:
        rng.shuffle(xs)
    out = []
    for x0 in xs:
        coeffs = [sum(c * pow(x0, i, p) for i, c in by_y.get(k, ())) % p for k in range(top + 1)]
        acc = np.zeros_like(ys)
        for c in reversed(coeffs):
            acc = (acc * ys + c) % p
        for y0 in ys[acc == 0].tolist():
            out.append(SamplePoint(f, x0, int(y0), p))
            if len(out) >= count:
                return out
    if len(out) < count // 2:
        warnings.warn(
            f"only {len(out)} of {count} points found over F_{p}; retry with another prime",
            SamplingWarning,
            stacklevel=2,
        )
    return out


def vanishing_check(forms, points, ambient_points):
    """Per form: True iff it vanishes at every sampled point's monomial vector."""
    vectors = [(pt.p, pt.monomial_values(ambient_points)) for pt in points]
    return [all(F.evaluate_mod(vals, p) == 0 for p, vals in vectors) for F in forms]


# --------------------------------------------------------------------------
# spans


@dataclass
class SpanReport:
    degree: int
    expected: int
    computed: int
    minimal: list = field(default_factory=list)

    @property
    def passed(self):
        return self.computed == self.expected and all(self.minimal)


def _reduced_residuals(gens, points, e, field):
    """Residuals of the degree-e generators modulo the span of lower-degree multiples."""
    index = monomial_index(points, e)
    lower = [G for G in gens if G.degree < e]
    base = Echelon(field)
    for M in multiples_in_degree(lower, points, e):
        base.add(M.vector(index))
    return [base.reduce(G.vector(index)) for G in gens if G.degree == e]


def span_and_minimality(gens, d, expected_dim, points=None):
    """Exact dimension of the degree-d span of ``gens`` and minimality flags.

    A generator of degree e is flagged minimal iff dropping it strictly
    lowers the dimension of the degree-e span.
    """
    if not gens:
        return SpanReport(d, expected_dim, 0, [])
    if d < max(G.degree for G in gens):
        raise ValueError("d is below the largest generator degree")
    points = tuple(sorted(points if points is not None else gens[0].ambient))
    field = gens[0].field
    index = monomial_index(points, d)
    ech = Echelon(field)
    for M in multiples_in_degree(gens, points, d):
        ech.add(M.vector(index))
    computed = ech.rank

    flags = [None] * len(gens)
    for e in sorted({G.degree for G in gens}):
        positions = [i for i, G in enumerate(gens) if G.degree == e]
        residuals = _reduced_residuals(gens, points, e, field)
        full = _rank_converted(residuals, field)
        for k, i in enumerate(positions):
            others = residuals[:k] + residuals[k + 1:]
            flags[i] = _rank_converted(others, field) < full
    return SpanReport(d, expected_dim, computed, flags)


def _rank_converted(vectors, field):
    ech = Echelon(field)
    for v in vectors:
        ech.add(v, converted=True)
    return ech.rank


# --------------------------------------------------------------------------
# reports


def digest(*parts):
    h = hashlib.sha256()
    for part in parts:
        h.update(str(part).encode())
        h.update(b"\0")
    return h.hexdigest()[:16]


def report(check, inputs, expected, computed, seed=None, passed=None):
    return {
        "check": check,
        "inputs_digest": digest(*inputs) if isinstance(inputs, (list, tuple)) else digest(inputs),
        "expected": expected,
        "computed": computed,
        "pass": (expected == computed) if passed is None else bool(passed),
        "seed": seed,
    }


def verify_canonical(gens, f=None, p=10007, count=200, seed=0, degrees=(2, 3)):
    """Full battery of checks on a canonical generator set; list of report dicts."""
    from .canonical import chi_identity_holds

    f = f if f is not None else gens.context.f
    delta1 = gens.context.delta1
    pts = gens.points
    inputs = (str(f), p, count)
    out = []
    samples = sample_curve_points(f, p, count, seed)
    flags = vanishing_check(gens.generators, samples, pts)
    out.append(report("vanishing", inputs, len(flags), sum(flags), seed, passed=all(flags) and len(samples) > 0))
    chi_ok = all(chi_identity_holds(F, f, w) for w, F in gens.extra)
    out.append(report("chi_identity", inputs, len(gens.extra), sum(chi_identity_holds(F, f, w) for w, F in gens.extra), seed, passed=chi_ok))
    for d in degrees:
        low = [G for G in gens.generators if G.degree <= d]
        expected = canonical_ideal_dimension(gens.genus, d)
        rep = span_and_minimality(low, d, expected, pts)
        out.append(report(f"span_degree_{d}", inputs, expected, rep.computed, seed))
        if expected != expected_canonical_dimension(delta1, d):
            out.append(report(f"dimension_law_degree_{d}", inputs, expected, expected_canonical_dimension(delta1, d), seed))
        out.append(report(f"minimality_degree_{d}", inputs, len(rep.minimal), sum(bool(m) for m in rep.minimal), seed))
    return out


def to_json(reports):
    return json.dumps(reports, indent=2)
