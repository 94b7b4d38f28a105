"""Exact coefficient fields: the rationals and prime fields F_p.

Rational elements are plain :class:`fractions.Fraction` values. Prime-field
elements are :class:`FpElement` instances that remember their modulus, so
mixing two different fields raises ``TypeError`` at the operation itself.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def is_probable_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers; elements are ``Fraction``."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, FpElement):
            raise TypeError("cannot coerce a prime-field element into QQ")
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, value):
        return isinstance(value, (int, Fraction))

    def to_int_mod(self, value, p):
        """Reduce a rational modulo ``p``; ``p`` must not divide the denominator."""
        value = Fraction(value)
        if value.denominator % p == 0:
            raise ZeroDivisionError(f"{p} divides the denominator of {value}")
        return value.numerator * pow(value.denominator, -1, p) % p

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_rational_field, ())


QQ = RationalField()


def _rational_field():
    return QQ


class PrimeField:
    """The prime field F_p. Use :func:`GF` to obtain instances."""

    def __init__(self, p):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.field is not self:
                raise TypeError(f"cannot coerce {value.field.name} element into {self.name}")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{self.p} divides the denominator of {value}")
            return FpElement(value.numerator * pow(value.denominator, -1, self.p), self)
        if isinstance(value, int):
            return FpElement(value, self)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self.name}")

    @property
    def zero(self):
        return FpElement(0, self)

    @property
    def one(self):
        return FpElement(1, self)

    def contains(self, value):
        return isinstance(value, FpElement) and value.field is self

    def elements(self):
        return (FpElement(v, self) for v in range(self.p))

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (GF, (self.p,))


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


class FpElement:
    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field is not self.field:
                raise TypeError(f"mixed-field arithmetic: {self.field.name} and {other.field.name}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Rational):
            raise TypeError(f"mixed-field arithmetic: {self.field.name} and QQ")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.field.p == 0:
            raise ZeroDivisionError("division by zero in " + self.field.name)
        return FpElement(self.value * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.field) / self

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if n < 0:
            if self.value == 0:
                raise ZeroDivisionError("division by zero in " + self.field.name)
            return FpElement(pow(self.value, n, self.field.p), self.field)
        return FpElement(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"

    def __str__(self):
        return str(self.value)


def field_of(values, default=QQ):
    """Infer the field of a collection of coefficients."""
    for v in values:
        if isinstance(v, FpElement):
            return v.field
    return default


def parse_field(text):
    """Parse ``q``/``QQ``/``rationals`` or ``fp:P``/``fp(P)``/``gf(P)``/``P``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals", "rational"):
        return QQ
    for prefix in ("fp:", "gf:", "fp", "gf", "f"):
        if t.startswith(prefix):
            t = t[len(prefix):]
            break
    t = t.strip("()[] ")
    if not t.isdigit():
        raise ValueError(f"unknown field {text!r}")
    return GF(int(t))
