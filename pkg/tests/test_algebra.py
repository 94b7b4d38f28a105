from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from canforge.algebra import (
    GF,
    QQ,
    Echelon,
    ExactMatrix,
    UniPoly,
    bareiss_det,
    gcd_uni,
    greedy_independent,
    is_probable_prime,
    kernel_basis,
    parse_field,
    rank_and_pivots,
    rank_of,
    resultant_y,
)

small = st.integers(-20, 20)


def X(*c, field=QQ):
    return UniPoly(list(c), field)


def test_prime_test():
    primes = [p for p in range(2, 200) if is_probable_prime(p)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes) == 46
    assert is_probable_prime(1000003)
    assert not is_probable_prime(561)


def test_fp_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert (a + b).value == 1
    assert (a * b).value == 1
    assert (a / b * b) == a
    assert F(-1).value == 6
    with pytest.raises(ZeroDivisionError):
        a / F(0)


def test_mixed_fields_rejected():
    with pytest.raises(TypeError):
        GF(7)(1) + GF(11)(1)


@pytest.mark.parametrize("text,p", [("q", None), ("rationals", None), ("fp:1009", 1009), ("fp(7)", 7), ("gf13", 13)])
def test_parse_field(text, p):
    F = parse_field(text)
    assert (F is QQ) if p is None else F.p == p


def test_parse_field_rejects_composite():
    with pytest.raises(ValueError):
        parse_field("fp:15")


def test_unipoly_division():
    a = X(-1, 0, 1)  # t^2 - 1
    b = X(1, 1)
    q, r = divmod(a, b)
    assert q == X(-1, 1) and r.is_zero()
    assert gcd_uni(a, X(-1, 1) * X(2, 1)) == X(-1, 1)
    assert X(0, 0, 3).derivative() == X(0, 6)


def test_resultant_examples():
    x = X(0, 1)
    one = X(1)
    # res_y(y - x, y + x) under the Sylvester convention
    assert resultant_y([-x, one], [x, one]) == X(0, 2)
    # res_y(y^2 - x, y)
    assert resultant_y([-x, X(0), one], [X(0), one]) == X(0, -1)


@given(st.lists(small, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=4))
def test_resultant_antisymmetry(a, b):
    # coefficients constant in x; res(g, f) = (-1)^(deg f deg g) res(f, g)
    f = [X(c) for c in a]
    g = [X(c) for c in b]
    while f and f[-1].is_zero():
        f.pop()
    while g and g[-1].is_zero():
        g.pop()
    if not f or not g:
        return
    m, n = len(f) - 1, len(g) - 1
    sign = -1 if (m * n) % 2 else 1
    assert resultant_y(g, f) == resultant_y(f, g) * X(sign)


def _det_oracle(M):
    # Laplace expansion
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det_oracle([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_laplace(rows):
    M = [[Fraction(v) for v in r] for r in rows]
    assert bareiss_det(M, Fraction(0), Fraction(1)) == _det_oracle(M)


def test_rank_examples():
    M = ExactMatrix.from_dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    info = rank_and_pivots(M)
    assert info.rank == 2
    assert info.pivot_rows == [0, 2]
    assert rank_of([[2, 4], [1, 2]], GF(3)) == 1


def test_greedy_keeps_first():
    rows = [[1, 0], [2, 0], [0, 1], [1, 1]]
    assert greedy_independent(rows) == [0, 2]


def test_kernel_basis():
    M = ExactMatrix.from_dense([[1, 1, 1], [0, 1, 2]])
    K = kernel_basis(M)
    assert len(K) == 1
    assert all(v == 0 for v in M.apply(K[0]))


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_nullity(rows):
    M = ExactMatrix.from_dense(rows)
    K = kernel_basis(M)
    assert rank_and_pivots(M).rank + len(K) == 4
    for v in K:
        assert all(e == 0 for e in M.apply(v))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5))
def test_rank_mod_p_never_exceeds_rational(rows):
    assert rank_of(rows, GF(10007)) <= rank_of(rows, QQ)
    # a large prime almost never drops rank on tiny entries
    assert rank_of(rows, GF(1000003)) == rank_of(rows, QQ)


def test_echelon_rational_entries():
    ech = Echelon(QQ)
    assert ech.add([Fraction(1, 2), Fraction(1, 3)])
    assert not ech.add([3, 2])
    assert ech.contains([Fraction(3, 2), 1])
