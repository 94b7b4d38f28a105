"""Homogeneous forms in variables X_p indexed by lattice points.

A monomial is a sorted tuple of lattice points (a multiset of variable
indices), so X_{0,0}^2 X_{1,0} is ``((0,0), (0,0), (1,0))``.
"""

from functools import lru_cache
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .algebra import QQ, Echelon
from .errors import InvariantViolation
from .lattice import LatticePoint


def monomial(*points):
    return tuple(sorted(LatticePoint(*p) for p in points))


def exponent_sum(mono):
    return LatticePoint(sum(p[0] for p in mono), sum(p[1] for p in mono))


class MonomialForm:
    """Degree-d form: {monomial: coefficient} over a fixed ambient point set."""

    __slots__ = ("degree", "terms", "ambient", "field")

    def __init__(self, terms, ambient, field=QQ, degree=None):
        self.field = field
        self.ambient = tuple(sorted(LatticePoint(*p) for p in ambient))
        amb = set(self.ambient)
        clean = {}
        for mono, c in terms.items():
            mono = tuple(sorted(LatticePoint(*p) for p in mono))
            c = field(c)
            if not c:
                continue
            for p in mono:
                if p not in amb:
                    raise ValueError(f"variable index {tuple(p)} outside the ambient point set")
            clean[mono] = clean.get(mono, field.zero) + c
            if not clean[mono]:
                del clean[mono]
        degs = {len(m) for m in clean}
        if len(degs) > 1:
            raise ValueError("form is not homogeneous")
        if degree is None:
            if not degs:
                raise ValueError("degree of the zero form must be given")
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise ValueError("degree mismatch")
        self.degree = degree
        self.terms = clean

    @classmethod
    def binomial(cls, plus, minus, ambient, field=QQ):
        plus, minus = monomial(*plus), monomial(*minus)
        if plus == minus:
            raise ValueError("binomial with identical monomials")
        return cls({plus: 1, minus: -1}, ambient, field)

    def is_binomial(self):
        return len(self.terms) == 2 and sorted(self.terms.values()) == [-1, 1]

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MonomialForm)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def times(self, mono):
        """Multiply by a monomial."""
        mono = tuple(mono)
        return MonomialForm(
            {tuple(sorted(m + mono)): c for m, c in self.terms.items()},
            self.ambient,
            self.field,
            self.degree + len(mono),
        )

    def scaled(self, c):
        return MonomialForm({m: v * c for m, v in self.terms.items()}, self.ambient, self.field, self.degree)

    def chi(self):
        """Image under X_{p1}...X_{pd} -> x^(p1+...+pd): {exponent: coefficient}."""
        out = {}
        for mono, c in self.terms.items():
            e = exponent_sum(mono)
            out[e] = out.get(e, self.field.zero) + c
        return {e: c for e, c in out.items() if c}

    def evaluate(self, values):
        """Evaluate with X_p -> values[p] (field elements or Fractions)."""
        acc = self.field.zero
        for mono, c in self.terms.items():
            t = c
            for p in mono:
                t = t * values[p]
            acc = acc + t
        return acc

    def evaluate_mod(self, values, p):
        """Evaluate modulo p with integer values; coefficients reduced mod p."""
        acc = 0
        for mono, c in self.terms.items():
            t = _to_mod(c, p)
            for q in mono:
                t = t * values[q] % p
            acc += t
        return acc % p

    def vector(self, index):
        """Sparse coefficient vector with respect to a monomial index."""
        return {index[m]: c for m, c in self.terms.items()}

    def __repr__(self):
        from .io import form_to_text

        return f"MonomialForm({form_to_text(self)})"


def _to_mod(c, p):
    if hasattr(c, "value"):
        return c.value % p
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


@lru_cache(maxsize=64)
def monomials(points, d):
    """All degree-d monomials in the given (sorted) points, deterministic order."""
    return tuple(combinations_with_replacement(tuple(points), d))


@lru_cache(maxsize=64)
def monomial_index(points, d):
    return {m: i for i, m in enumerate(monomials(points, d))}


def count_monomials(n, d):
    return comb(n + d - 1, d)


def multiples_in_degree(forms, points, d):
    """All products m*G with m a monomial and deg(m*G) = d."""
    out = []
    for G in forms:
        e = d - G.degree
        if e < 0:
            continue
        if e == 0:
            out.append(G)
            continue
        for m in monomials(points, e):
            out.append(G.times(m))
    return out


def span_echelon(forms, points, d, field=None):
    """Echelon form of the degree-d span of the given generators."""
    points = tuple(sorted(points))
    index = monomial_index(points, d)
    field = field or (forms[0].field if forms else QQ)
    ech = Echelon(field)
    for F in multiples_in_degree(forms, points, d):
        ech.add(F.vector(index))
    return ech


def span_dimension(forms, points, d, field=None):
    return span_echelon(forms, points, d, field).rank


def check_in_kernel_of_chi(form):
    if form.chi():
        raise InvariantViolation(f"{form!r} is not in the kernel of chi_{form.degree}")
