import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from canforge.algebra import GF, QQ, UniPoly
from canforge.errors import ParseError
from canforge.lattice import UnimodularMap, convex_hull
from canforge.laurent import (
    FaceKind,
    LaurentPoly,
    Status,
    check_nondegenerate,
    faces,
    newton_polygon,
    parse_laurent,
    restrict_to_face,
)

from conftest import GENUS14


def test_parse_basic():
    f = parse_laurent(GENUS14)
    assert f[(6, 5)] == 13 and f[(6, 4)] == -6 and f[(3, 0)] == 1
    assert len(f.terms) == 6


def test_parse_negative_exponents_and_fractions():
    f = parse_laurent("x^-1*y + 3/4*x*y^(-2) - 2")
    assert f[(-1, 1)] == 1
    assert f[(1, -2)] == Fraction(3, 4)
    assert f[(0, 0)] == -2


def test_parse_merges_like_terms():
    f = parse_laurent("x*y + 2*x*y - 3*x*y + 1")
    assert set(f.support) == {(0, 0)}


@pytest.mark.parametrize(
    "text,col",
    [("x + y ++ 1", 8), ("3x + 1", 1), ("x y", 3), ("", 1), ("x + $", 5)],
)
def test_parse_errors(text, col):
    with pytest.raises(ParseError) as exc:
        parse_laurent(text)
    assert exc.value.column == col


def test_parse_over_fp():
    f = parse_laurent("1/2*x + 5*y + 7", GF(7))
    assert f[(1, 0)].value == 4
    assert (0, 0) not in f.terms


def test_roundtrip_str():
    f = parse_laurent(GENUS14)
    assert parse_laurent(str(f)) == f


terms = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-9, 9).filter(bool), min_size=1, max_size=6
)


@given(terms, terms)
def test_ring_axioms(a, b):
    f = LaurentPoly(a)
    g = LaurentPoly(b)
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g)(Fraction(2), Fraction(-3)) == f(Fraction(2), Fraction(-3)) * g(Fraction(2), Fraction(-3))


@given(terms)
def test_derivative_on_monomials(a):
    f = LaurentPoly(a)
    fx = f.derivative("x")
    for (i, j), c in a.items():
        if i:
            assert fx[(i - 1, j)] == c * i


@given(terms, st.integers(0, 10 ** 6))
def test_unimodular_substitution_preserves_genus(a, seed):
    f = LaurentPoly(a)
    P = newton_polygon(f)
    rng = random.Random(seed)
    T = UnimodularMap(1, rng.randint(-2, 2), 0, 1, rng.randint(-2, 2), 0)
    g = f.substitute_exponents(T)
    Q = newton_polygon(g)
    assert len(Q.interior_points) == len(P.interior_points)
    assert Q == T.apply_polygon(P)


def test_faces_of_triangle():
    P = convex_hull([(0, 0), (1, 0), (0, 1)])
    kinds = [F.kind for F in faces(P)]
    assert kinds.count(FaceKind.VERTEX) == 3
    assert kinds.count(FaceKind.EDGE) == 3
    assert kinds.count(FaceKind.FULL) == 1


def test_edge_model():
    f = parse_laurent("x^2 + 2*x*y + y^2 + x + y")
    P = newton_polygon(f)
    edge = next(F for F in faces(P) if F.kind is FaceKind.EDGE and set(F.points) == {(2, 0), (0, 2)})
    ff, model = restrict_to_face(f, edge)
    assert set(ff.terms) == {(2, 0), (1, 1), (0, 2)}
    assert model.degree == 2
    assert model == UniPoly([1, 2, 1])


def test_degenerate_example():
    v = check_nondegenerate(parse_laurent("x^2 + 2*x*y + y^2 + x + y"))
    assert v.status is Status.DEGENERATE
    assert v.face.kind is FaceKind.EDGE
    assert v.witness is not None


def test_line_is_nondegenerate():
    assert check_nondegenerate(parse_laurent("x + y + 1")).status is Status.NONDEGENERATE


def test_genus14_nondegenerate():
    assert check_nondegenerate(parse_laurent(GENUS14)).status is Status.NONDEGENERATE


def test_singular_interior_point_detected():
    # node at (1, 1): f = (x - 1)^2 - x (y - 1)^2
    x1 = LaurentPoly({(1, 0): 1, (0, 0): -1})
    y1 = LaurentPoly({(0, 1): 1, (0, 0): -1})
    x = LaurentPoly({(1, 0): 1})
    f = x1 * x1 - y1 * y1 * x
    v = check_nondegenerate(f)
    assert v.status is not Status.NONDEGENERATE


def test_inseparable_edge_over_fp():
    # x^7 + y^7 + 1 over F_7: every edge is a p-th power
    v = check_nondegenerate(parse_laurent("x^7 + y^7 + 1", GF(7)))
    assert v.status is Status.DEGENERATE


def brute_torus_singular(f, p):
    """True iff f, f_x, f_y share a zero on (F_p^*)^2."""
    fx = f.derivative("x")
    fy = f.derivative("y")
    for a in range(1, p):
        for b in range(1, p):
            if f.eval_mod(a, b, p) == 0 and fx.eval_mod(a, b, p) == 0 and fy.eval_mod(a, b, p) == 0:
                return True
    return False


@given(st.integers(0, 10 ** 6))
def test_checker_agrees_with_brute_force_over_small_field(seed):
    # a singular point found over F_p on any face rules out NonDegenerate
    p = 13
    F = GF(p)
    rng = random.Random(seed)
    pts = [(i, j) for i in range(3) for j in range(3) if rng.random() < 0.7] + [(0, 0), (2, 0), (0, 2)]
    f = LaurentPoly({q: F(rng.randrange(p)) for q in pts}, F)
    if f.is_zero() or newton_polygon(f).dim < 2:
        return
    v = check_nondegenerate(f)
    if brute_torus_singular(f, p):
        assert v.status is not Status.NONDEGENERATE


def test_random_dense_square_mostly_nondegenerate():
    F = GF(1009)
    P = convex_hull([(0, 0), (3, 0), (0, 3), (3, 3)])
    rng = random.Random(7)
    good = 0
    for _ in range(30):
        f = LaurentPoly({q: F(rng.randrange(1, 1009)) for q in P.lattice_points}, F)
        good += check_nondegenerate(f).status is Status.NONDEGENERATE
    assert good >= 27


def test_verdict_json():
    d = check_nondegenerate(parse_laurent("x^2 + 2*x*y + y^2 + x + y")).to_dict()
    assert d["status"] == "Degenerate"
    assert d["face"]["kind"] == "edge"
