from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from confaut.exactalg import (I, SQRT_M3, FieldMismatch, MultiPoly, QuadExt, UniPoly,
                              UnknownVariable, bareiss_det, decode, discriminant_poly,
                              discriminant_univariate, encode, poly_ops, resultant,
                              symmetric_expand, z_names)

from conftest import distinct_points, eisensteins, gaussians, rationals


# -- scalars ------------------------------------------------------------------------------

def test_quadext_multiplication_rule():
    x = QuadExt(Fraction(1), Fraction(2), -3)
    y = QuadExt(Fraction(3), Fraction(-1), -3)
    # (a + b d)(c + e d) = (ac + b e d^2) + (ae + bc) d with d^2 = -3
    assert x * y == QuadExt.make(3 + 2 * -1 * -3, -1 + 6, -3)


def test_collapse_to_rational():
    assert SQRT_M3 * SQRT_M3 == -3
    assert isinstance(SQRT_M3 * SQRT_M3, Fraction)
    assert I ** 4 == 1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        I + SQRT_M3


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a != 0:
        assert a * (1 / a) == 1


@given(eisensteins.filter(lambda x: x != 0))
def test_eisenstein_inverse_and_complex(a):
    assert abs(complex(1 / a) * complex(a) - 1) < 1e-12


@given(st.one_of(rationals, gaussians, eisensteins))
def test_encode_roundtrip(x):
    assert decode(encode(x)) == x


def test_decode_rejects_garbage():
    for bad in ("1/0x", {"value": "1+2*d", "field": "Q(5)"}, [1, 2, 3], True):
        with pytest.raises(ValueError):
            decode(bad)


def test_rationals_lowest_terms():
    assert encode(Fraction(6, -4)) == "-3/2"


# -- multivariate polynomials ------------------------------------------------------------------

def test_spec_polynomial_examples():
    z1, z2 = MultiPoly.gens(("z1", "z2"))
    d2 = z1 ** 2 - z2 * 4
    assert d2.eval({"z1": 0, "z2": -1}) == 4
    assert d2 + MultiPoly(("z1", "z2")) == d2
    assert (z1 ** 2 * z2 ** 2).diff("z2") == z1 ** 2 * z2 * 2
    assert poly_ops(z1 ** 2 * z2 ** 2, "z2", "partial_derivative") == z1 ** 2 * z2 * 2


def test_unknown_variable():
    z1, = MultiPoly.gens(("z1",))
    with pytest.raises(UnknownVariable):
        poly_ops(z1, "z9", "partial_derivative")


def test_no_zero_coefficients_stored():
    z1, z2 = MultiPoly.gens(("z1", "z2"))
    p = (z1 + z2) - z2
    assert p == z1 and len(p) == 1


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       rationals, rationals)
def test_ring_homomorphism_eval(a, b, x, y):
    v = ("x", "y")
    X, Y = MultiPoly.gens(v)
    p = X * a[0] + Y * a[1] + X * Y * a[2]
    q = X ** 2 * b[0] + Y * b[1] + b[2]
    pt = {"x": x, "y": y}
    assert (p * q).eval(pt) == p.eval(pt) * q.eval(pt)
    assert (p - q).eval(pt) == p.eval(pt) - q.eval(pt)


@given(rationals, rationals)
def test_substitution_composes(a, b):
    v = ("x", "y")
    X, Y = MultiPoly.gens(v)
    p = X ** 3 - X * Y * 2 + 5
    s = p.substitute({"x": X + Y, "y": X * Y})
    assert s.eval({"x": a, "y": b}) == p.eval({"x": a + b, "y": a * b})


# -- resultants and discriminants --------------------------------------------------------------

def test_resultant_examples():
    z1, z2 = MultiPoly.gens(("z1", "z2"))
    one = MultiPoly.const(("z1", "z2"), 1)
    f = UniPoly([z2, z1, one], "lam")
    assert resultant(f, f.derivative()) == z2 * 4 - z1 ** 2
    a, b = Fraction(3), Fraction(-7, 2)
    assert resultant(UniPoly([-a, 1]), UniPoly([-b, 1])) == a - b
    assert resultant(UniPoly([-1, 0, 1]), UniPoly([-4, 0, 1])) == 9


@given(st.lists(rationals, min_size=2, max_size=3, unique=True),
       st.lists(rationals, min_size=1, max_size=3, unique=True))
def test_resultant_root_product(qs, rs):
    f = UniPoly(list(reversed((1,) + symmetric_expand(qs))))
    g = UniPoly(list(reversed((1,) + symmetric_expand(rs))))
    want = Fraction(1)
    for q in qs:
        for r in rs:
            want *= q - r
    assert resultant(f, g) == want


def test_discriminant_examples():
    z1, z2 = MultiPoly.gens(z_names(2))
    assert discriminant_poly(2) == z1 ** 2 - z2 * 4
    assert discriminant_univariate(UniPoly([-6, 11, -6, 1])) == 4
    assert discriminant_univariate(UniPoly([-1, 0, 0, 0, 1])) == -256


def test_d3_closed_form():
    z1, z2, z3 = MultiPoly.gens(z_names(3))
    want = z1 * z2 * z3 * 18 - z1 ** 3 * z3 * 4 + z1 ** 2 * z2 ** 2 - z2 ** 3 * 4 - z3 ** 2 * 27
    assert discriminant_poly(3) == want


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_discriminant_weighted_homogeneous(n):
    assert discriminant_poly(n).is_weighted_homogeneous(
        {f"z{k}": k for k in range(1, n + 1)}) == n * (n - 1)


@given(distinct_points(4))
def test_discriminant_matches_squared_differences(qs):
    want = Fraction(1)
    for a, b in combinations(qs, 2):
        want = want * (a - b) ** 2
    assert discriminant_poly(4).eval(list(symmetric_expand(qs))) == want


def test_symmetric_expand_examples():
    assert symmetric_expand([1, 2, 3]) == (-6, 11, -6)
    assert symmetric_expand([Fraction(5)]) == (-5,)
    assert symmetric_expand([1, -1]) == (0, -1)


def test_bareiss_matches_cofactor():
    m = [[Fraction(2), 3, 1], [4, -1, 5], [0, 2, 7]]
    cof = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert bareiss_det(m) == cof
    assert bareiss_det([[0, 1], [1, 0]]) == -1
