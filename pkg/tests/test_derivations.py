from fractions import Fraction

import pytest

from confaut import derivations as dv
from confaut.exactalg import MultiPoly, discriminant_poly, z_names

F = Fraction


def test_d_tau_images():
    d = dv.d_tau(3)
    z1, z2, z3 = MultiPoly.gens(z_names(3))
    assert d(z1).constant_value() == 3
    assert d(z2) == z1 * 2 and d(z3) == z2


def test_d3_annihilated():
    z1, z2, z3 = MultiPoly.gens(z_names(3))
    d3 = z1 * z2 * z3 * 18 - z1 ** 3 * z3 * 4 + z1 ** 2 * z2 ** 2 - z2 ** 3 * 4 - z3 ** 2 * 27
    assert dv.d_tau(3)(d3).is_zero()
    assert dv.d_t(3)(d3).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_discriminant_annihilated(n):
    assert all(dv.discriminant_annihilated(n).values())


def test_euler_decomposition():
    n = 4
    assert dv.d_s(n) + dv.d_t(n) == dv.euler(n)
    z = MultiPoly.gens(z_names(n))
    assert all(dv.euler(n)(zk) == zk * k for k, zk in enumerate(z, 1))


def test_bracket_antisymmetry():
    d = dv.d_s(3)
    assert dv.bracket(d, d).is_zero()
    e = dv.d_tau(3) * MultiPoly.var(z_names(3), "z2")
    assert dv.bracket(d, e) == -dv.bracket(e, d)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_lie_relations(n):
    for e in dv.balanced_monomials(n, 4):
        assert all(dv.lie_relations(n, e).values()), e


def test_unoriented_fields_break_relations():
    # with the opposite orientation the third relation picks up a sign
    n = 3
    b = dv.balanced_pullback(n, (1, 0))
    bdtau = dv.d_tau(n, 1) * b
    assert dv.bracket(bdtau, dv.d_t(n, 1)) == -bdtau


def test_lnd_examples():
    rep = dv.lnd_check(dv.d_tau(4))
    assert rep["nilpotent"] and rep["depths"] == {f"z{k}": k + 1 for k in range(1, 5)}
    rep = dv.lnd_check(dv.d_t(3))
    assert not rep["nilpotent"]
    assert rep["witness"] == {"var": "z1", "eigenvalue": -1}
    zero = dv.Derivation(z_names(2), {})
    assert dv.lnd_check(zero)["depths"] == {"z1": 1, "z2": 1}


def test_flow_n2():
    ring = z_names(2) + ("zeta",)
    z1, z2, zeta = MultiPoly.gens(ring)
    g = dv.flow_generators(dv.d_tau(2), zeta)
    assert g["z1"] == z1 + zeta * 2
    assert g["z2"] == z2 + zeta * z1 + zeta ** 2
    assert dv.exp_flow(dv.d_tau(2), 0, z2) == z2


def test_flow_group_property():
    ring = z_names(3) + ("lam",)
    lam = MultiPoly.var(ring, "lam")
    d = dv.Derivation(ring, dv.d_tau(3).images)  # lam is a constant of d
    f = MultiPoly.var(ring, "z3") * MultiPoly.var(ring, "z1") + MultiPoly.var(ring, "z2")
    back = dv.exp_flow(d, -lam, dv.exp_flow(d, lam, f))
    assert back == f


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flow_translates_roots(n):
    assert dv.flow_shift_check(n)
    assert not dv.flow_shift_check(n, eps=1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_chart_single_sign(n):
    rep = dv.chart_pushforward_check(n)
    assert rep["ok"] and rep["eps"] == -1


def test_replica():
    d = dv.standard_fields(3, "replica")
    assert d == dv.d_tau(3)
    b = dv.balanced_pullback(3, (0, 1))
    assert dv.d_tau(3)(b).is_zero()
    assert dv.lnd_check(dv.standard_fields(3, "replica", b=b))["nilpotent"]


def test_danielewski():
    rep = dv.danielewski_demo(1)
    assert rep["ok"] and rep["alpha_at_(0,0,1,1)"] == (0, 2, 1, 1)
    assert dv.danielewski_demo(2)["preserves_hypersurface"]
