"""Dense univariate polynomials over an exact field, plus y-resultants.

Coefficients are stored low degree first with trailing zeros stripped, so the
zero polynomial has an empty coefficient list.
"""

from .fields import QQ


class UniPoly:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs
        self.field = field

    @classmethod
    def _raw(cls, coeffs, field):
        # coeffs already in the field; strips zeros
        p = cls.__new__(cls)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p.coeffs = coeffs
        p.field = field
        return p

    @classmethod
    def x(cls, field=QQ):
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls([c], field)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if isinstance(other, UniPoly):
            if other.field is not self.field and other.field != self.field:
                raise TypeError(f"mixed fields {self.field} and {other.field}")
            return other
        return UniPoly([other], self.field)

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly._raw([self[i] + other[i] for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly._raw([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly([1], self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly._raw([], self.field), UniPoly._raw(rem, self.field)
        quot = [self.field.zero] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly._raw(quot, self.field), UniPoly._raw(rem[: len(other.coeffs) - 1], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self):
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UniPoly._raw([c / lead for c in self.coeffs], self.field)

    def valuation(self):
        """Largest m with t^m dividing self (None for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def strip_t(self):
        """Divide out the largest power of t."""
        v = self.valuation()
        if v is None:
            return self
        return UniPoly._raw(self.coeffs[v:], self.field)

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def __repr__(self):
        return f"UniPoly({self})"


def gcd_uni(a, b):
    """Monic gcd; ``gcd_uni(a, 0)`` is ``a`` made monic."""
    if a.field is not b.field and a.field != b.field:
        raise TypeError(f"mixed fields {a.field} and {b.field}")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def bareiss_det(matrix, zero, one):
    """Fraction-free determinant over an integral domain with exact division.

    ``matrix`` is a square list of lists whose entries support ``+ - *`` and
    ``exact_div`` (UniPoly) or ``//`` for ints.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _exact_div(a, b):
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return a / b


def sylvester_matrix(f, g, zero):
    """Sylvester matrix of two coefficient lists given low degree first."""
    m = len(f) - 1
    n = len(g) - 1
    size = m + n
    rows = []
    fh = list(reversed(f))
    gh = list(reversed(g))
    for i in range(n):
        rows.append([zero] * i + fh + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gh + [zero] * (size - n - 1 - i))
    return rows


def resultant_y(f, g):
    """Resultant with respect to y of two bivariate polynomials.

    ``f`` and ``g`` are lists of :class:`UniPoly` in x, entry k being the
    coefficient of y^k. The result is the Sylvester determinant, computed by
    Bareiss elimination over k[x].
    """
    f = _trim(f)
    g = _trim(g)
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    field = f[0].field
    zero = UniPoly([], field)
    one = UniPoly([1], field)
    if len(f) == 1 and len(g) == 1:
        return one
    return bareiss_det(sylvester_matrix(f, g, zero), zero, one)


def _trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs
