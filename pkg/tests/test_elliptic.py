import cmath
from fractions import Fraction

import pytest

from confaut import configspace as cs
from confaut import elliptic as el
from confaut.exactalg import SQRT_M3, UniPoly, discriminant_univariate

F = Fraction
DELTA = SQRT_M3


def test_resolvent_example():
    R = el.cubic_resolvent(F(0), F(0), F(-1))
    assert R == (0, 4, 0)
    assert discriminant_univariate(UniPoly([R[2], R[1], R[0], 1])) == -256 == el.quartic_discriminant(0, 0, -1)


def test_resolvent_roots_are_pairings():
    q = [1, 1j, -1, -1j]
    pairings = [q[0] * q[1] + q[2] * q[3], q[0] * q[2] + q[1] * q[3], q[0] * q[3] + q[1] * q[2]]
    R = el.cubic_resolvent(0, 0, -1)
    for lam in pairings:
        assert abs(lam ** 3 + R[0] * lam ** 2 + R[1] * lam + R[2]) < 1e-12
    assert sorted(pairings, key=lambda z: (z.imag, z.real)) == [-2j, 0, 2j]


def test_tschirnhausen_examples():
    assert el.tschirnhausen(F(0), F(0), F(-1)) == (4, 0)
    assert el.tschirnhausen(*el.SEED_POINT) == (-1, F(1, 3))


def test_chain_identities():
    rep = el.resolvent_chain_identities()
    assert rep["ok"]


def test_fibration():
    u2, u3 = el.fibration_project(el.SEED_POINT)
    assert el.base_discriminant(u2, u3) == 1
    with pytest.raises(cs.DomainError):
        el.fibration_project((0, 0, 0))


def test_float_points_on_base_curve():
    for x in el.float_surface_points(20, 3):
        u2, u3 = el.fibration_project(x, 1e-8)
        assert abs(el.base_discriminant(u2, u3) - 1) < 1e-10


def test_exact_surface_points():
    pts = el.exact_surface_points(50)
    assert len(set(pts)) >= 50
    assert all(el.quartic_discriminant(*x) == 1 for x in pts)


def test_j_values():
    assert el.j_invariant(F(0), DELTA / 9)["j"] == 0
    assert el.j_from_invariants(F(-1, 4), F(0)) == 1728
    rep = el.j_invariant(F(-1), F(1, 3))
    assert rep["j"] == 6912 and rep["displayed_formula"] == -6912 and rep["sign"] == -1


def test_j_against_weierstrass_oracle():
    # independent: c4 and Delta of y^2 = x^3 + a x + b computed from Tate's formulas
    for x in el.exact_surface_points(12):
        u2, u3 = el.tschirnhausen(*x)
        a, b = u2, -u3
        c4 = -48 * a
        disc = -16 * (4 * a ** 3 + 27 * b ** 2)
        assert el.j_invariant(u2, u3)["j"] == c4 ** 3 / disc == -6912 * u2 ** 3


def test_mu12():
    x = el.SEED_POINT
    u = el.tschirnhausen(*x)
    assert el.mu12_action(-1, u, "base") == u
    assert el.mu12_action(1, x) == x
    assert el.mu12_symbolic_check()["ok"]
    zeta = cmath.exp(2j * cmath.pi / 12)
    y = el.mu12_action(zeta, x)
    assert el.on_surface(y, 1e-9)
    with pytest.raises(cs.DomainError):
        el.mu12_action(2, x)


def test_counterexample():
    assert el.master_identity()["ok"]
    assert el.field_identity()["ok"]
    assert el.image_on_u2_zero()
    a, b = el.float_constants()
    assert abs(a ** 3 - complex(el.A_CONST)) < 1e-12 and abs(b ** 2 - complex(el.B_CONST)) < 1e-12
    for x in el.float_surface_points(10, 11):
        assert abs(el.quartic_discriminant(*el.counterexample_endo(x)) - 1) < 1e-9
