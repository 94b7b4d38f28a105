"""Exact sparse linear algebra over QQ or F_p.

Over QQ every row is scaled to a primitive integer vector and elimination is
fraction-free (``r <- a*r - b*s`` followed by content removal), so no
rational arithmetic happens inside the hot loop. Over F_p rows are reduced
with plain modular elimination and pivots normalised to 1.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd, lcm

from .fields import QQ, FpElement, PrimeField

RankInfo = namedtuple("RankInfo", "rank pivot_rows pivot_cols")


class ExactMatrix:
    """Row-major sparse matrix: each row maps column index to a nonzero entry."""

    def __init__(self, rows, ncols, field=QQ):
        self.field = field
        self.ncols = ncols
        self.rows = []
        for row in rows:
            if isinstance(row, dict):
                items = row.items()
            else:
                if len(row) != ncols:
                    raise ValueError("row length does not match ncols")
                items = enumerate(row)
            clean = {}
            for c, v in items:
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} out of range")
                v = field(v)
                if v:
                    clean[c] = v
            self.rows.append(clean)

    @classmethod
    def from_dense(cls, rows, field=QQ):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(rows, ncols, field)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self):
        z = self.field.zero
        return [[row.get(j, z) for j in range(self.ncols)] for row in self.rows]

    def transpose(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return ExactMatrix(cols, self.nrows, self.field)

    def apply(self, vector):
        """Matrix-vector product with a dense or sparse vector."""
        if isinstance(vector, dict):
            items = list(vector.items())
        else:
            items = [(j, v) for j, v in enumerate(vector) if v]
        z = self.field.zero
        out = []
        for row in self.rows:
            acc = z
            for j, v in items:
                e = row.get(j)
                if e is not None:
                    acc = acc + e * v
            out.append(acc)
        return out

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field})"


class Echelon:
    """Incremental row echelon form keyed by leading column.

    Rows are inserted one at a time; :meth:`add` reports whether the row was
    independent of everything inserted before it, which makes greedy
    independent-subset selection deterministic in input order.
    """

    def __init__(self, field=QQ):
        self.field = field
        self._modulus = field.p if isinstance(field, PrimeField) else None
        self.basis = {}

    @property
    def rank(self):
        return len(self.basis)

    def _convert(self, vector):
        if isinstance(vector, dict):
            items = vector.items()
        else:
            items = enumerate(vector)
        p = self._modulus
        if p is not None:
            out = {}
            for c, v in items:
                if isinstance(v, FpElement):
                    if v.field.p != p:
                        raise TypeError("mixed-field arithmetic")
                    v = v.value
                elif isinstance(v, Fraction):
                    v = self.field(v).value
                else:
                    v = int(v) % p
                if v:
                    out[c] = v
            return out
        vals = {}
        for c, v in items:
            if isinstance(v, FpElement):
                raise TypeError("mixed-field arithmetic")
            if v:
                vals[c] = Fraction(v)
        if not vals:
            return {}
        den = lcm(*(v.denominator for v in vals.values()))
        ints = {c: v.numerator * (den // v.denominator) for c, v in vals.items()}
        return _primitive(ints)

    def reduce(self, vector, converted=False):
        r = vector if converted else self._convert(vector)
        basis = self.basis
        p = self._modulus
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                return r
            rc = r[c]
            if p is not None:
                for j, bv in b.items():
                    nv = (r.get(j, 0) - rc * bv) % p
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
            else:
                bc = b[c]
                g = gcd(bc, rc)
                mr, mb = bc // g, rc // g
                out = {j: mr * v for j, v in r.items()}
                for j, bv in b.items():
                    nv = out.get(j, 0) - mb * bv
                    if nv:
                        out[j] = nv
                    else:
                        out.pop(j, None)
                r = _primitive(out)
        return r

    def add(self, vector, converted=False):
        """Insert a row; return True iff it was independent of the basis.

        ``converted`` rows are internal integer vectors as returned by
        :meth:`reduce` and are not modified.
        """
        r = self.reduce(dict(vector) if converted else vector, converted)
        if not r:
            return False
        c = min(r)
        p = self._modulus
        if p is not None:
            inv = pow(r[c], -1, p)
            r = {j: v * inv % p for j, v in r.items()}
        elif r[c] < 0:
            r = {j: -v for j, v in r.items()}
        self.basis[c] = r
        return True

    def contains(self, vector):
        return not self.reduce(vector)

    def copy(self):
        e = Echelon(self.field)
        e.basis = dict(self.basis)
        return e


def _primitive(vec):
    if not vec:
        return vec
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    return {j: v // g for j, v in vec.items()}


def greedy_independent(rows, field=QQ):
    """Indices of a maximal independent subset, first-come-kept."""
    ech = Echelon(field)
    return [i for i, r in enumerate(rows) if ech.add(r)]


def rank_of(rows, field=QQ):
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def rank_and_pivots(matrix):
    """Exact rank, greedy independent rows and pivot columns (input order)."""
    pivot_rows = greedy_independent(matrix.rows, matrix.field)
    pivot_cols = greedy_independent(matrix.transpose().rows, matrix.field)
    if len(pivot_rows) != len(pivot_cols):
        raise ArithmeticError("row rank and column rank disagree")
    return RankInfo(len(pivot_rows), pivot_rows, pivot_cols)


def rref(matrix):
    """Sparse reduced row echelon form; returns {pivot column: row} with pivot 1."""
    field = matrix.field
    one = field.one
    basis = {}
    for row in matrix.rows:
        r = dict(row)
        for c in sorted(set(r) & set(basis)):
            rc = r.get(c)
            if not rc:
                continue
            for j, v in basis[c].items():
                nv = r.get(j, field.zero) - rc * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
        if not r:
            continue
        c = min(r)
        inv = one / r[c]
        r = {j: v * inv for j, v in r.items()}
        for pc, prow in basis.items():
            f = prow.get(c)
            if f:
                for j, v in r.items():
                    nv = prow.get(j, field.zero) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        basis[c] = r
    return basis


def kernel_basis(matrix, sparse=False):
    """Basis of the right kernel, one vector per free column.

    Returns dense lists by default, or ``{column: value}`` dicts with
    ``sparse=True``.
    """
    field = matrix.field
    basis = rref(matrix)
    free = [j for j in range(matrix.ncols) if j not in basis]
    by_col = {}
    for pc, row in basis.items():
        for j, v in row.items():
            if j != pc:
                by_col.setdefault(j, []).append((pc, v))
    out = []
    for f in free:
        vec = {f: field.one}
        for pc, v in by_col.get(f, ()):
            vec[pc] = -v
        if sparse:
            out.append(vec)
        else:
            dense = [field.zero] * matrix.ncols
            for j, v in vec.items():
                dense[j] = v
            out.append(dense)
    return out
