import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from confaut import autgroup as ag
from confaut import configspace as cs
from confaut import sampling as sm
from confaut.exactalg import I, MultiPoly

F = Fraction
BF = ag.BalancedFunction


def test_balanced_function_evaluation():
    # S_2 on {-1, 0, 1}: ordered pairs give 2 * (1 + 4 + 1)
    assert BF.S(3, 2)([-1, 0, 1]) == 12
    w2 = BF.monomial(3, [1, 0])
    assert w2([-1, 0, 1]) == -1
    assert (w2.times_D(1))([-1, 0, 1]) == -4


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3, unique=True), st.integers(-3, 3))
def test_scaled_matches_weighted_evaluation(qs, c):
    if c == 0:
        return
    _, Q0 = cs.barycenter_project([F(q) for q in qs])
    b = BF.S(3, 4) + BF.monomial(3, [1, 1], F(2), -1) + BF.const(3, 5)
    assert b.scaled(c)(Q0) == b(Q0.map(lambda q: c * q))


def test_s_function_is_power_sum_formula():
    pts = [F(-3), F(1), F(2)]
    brute = sum((a - b) ** 4 for a in pts for b in pts)
    assert BF.S(3, 4)(pts) == brute


def test_space_constraints():
    assert ag.make_aut("SC", 3, sm.OMEGA6, F(1)).s == sm.OMEGA6
    with pytest.raises(ag.AutConstraintError):
        ag.make_aut("SC", 3, F(2), F(1))
    with pytest.raises(ag.AutConstraintError):
        ag.make_aut("Sigma", 3, F(1), F(1), 1)
    with pytest.raises(ag.AutConstraintError):
        ag.make_aut("Sigma", 3, F(1), F(1), 0, BF.monomial(3, [1, 0], m=1))
    with pytest.raises(ag.AutConstraintError):
        ag.make_aut("pair", 3, F(1), F(1), 0, BF.monomial(3, [1, 0], m=-1))
    with pytest.raises(ag.AutConstraintError):
        ag.make_aut("Cn", 3, F(0), F(1))


def test_apply_examples():
    assert ag.make_aut("Cn", 3, F(2), F(2))([1, 2, 5]) == cs.Configuration([2, 4, 10])
    F1 = ag.make_aut("Cn", 3, F(2), F(1))
    assert F1([0, 1, 2]) == cs.Configuration([-1, 1, 3])
    assert ag.identity("Cn", 3)([0, 1, 7]) == cs.Configuration([0, 1, 7])
    with pytest.raises(cs.DomainError):
        F1([1, 1, 2])


def test_sigma_preserved():
    F1 = ag.make_aut("Sigma", 3, F(3), F(-2), 0, BF.S(3, 2))
    out = F1([F(2), F(2), F(7)])
    assert cs.membership(out, "Sigma")
    assert cs.membership(ag.nu_torus(F(2), F(3), [F(1), F(1), F(4)]), "Sigma")
    assert ag.nu_torus(F(1), F(1), [F(1), F(5), F(4)]) == cs.Configuration([1, 5, 4])


def test_compose_scalings():
    G = ag.make_aut("Cn", 3, F(3), F(3))
    H = ag.make_aut("Cn", 3, F(2), F(2))
    C = ag.compose(G, H)
    assert C.s == 6 and C.t == 6 and C.b.is_zero()


@pytest.mark.parametrize("space", ["Cn", "Sigma", "pair"])
@pytest.mark.parametrize("n", [3, 4])
def test_group_laws_pointwise(space, n):
    rng = random.Random(f"laws-{space}-{n}")
    for _ in range(25):
        F1, G1 = sm.rand_aut(rng, space, n), sm.rand_aut(rng, space, n)
        Q = sm.rand_sigma_config(rng, n) if space == "Sigma" else sm.rand_config(rng, n)
        assert ag.compose(G1, F1)(Q) == G1(F1(Q))
        assert ag.invert(F1)(F1(Q)) == Q
        assert ag.compose(F1, ag.invert(F1)).is_identity()
        lhs = ag.commutator(G1, F1)(Q)
        assert lhs == ag.invert(G1)(ag.invert(F1)(G1(F1(Q))))


def test_group_laws_on_exact_sc_points():
    rng = random.Random("sc")
    for _ in range(25):
        F1 = sm.rand_aut(rng, "SC", 3, "Q(sqrt-3)")
        G1 = sm.rand_aut(rng, "SC", 3, "Q(sqrt-3)")
        Q = sm.rand_sc_exact(rng)
        assert cs.membership(Q, "SC")
        assert ag.compose(G1, F1)(Q) == G1(F1(Q))
        assert cs.membership(F1(Q), "SC")


def test_sc_float_points():
    rng = random.Random("scf")
    for n in (4, 5):
        Q = sm.rand_sc_float(rng, n)
        assert cs.membership(Q, "SC")
        F1 = sm.rand_aut(rng, "SC", n)
        assert cs.membership(F1(Q), "SC")


def test_discriminant_scales():
    rng = random.Random("disc")
    for n in (3, 4, 5):
        for _ in range(20):
            F1 = sm.rand_aut(rng, "Cn", n)
            Q = sm.rand_config(rng, n)
            assert cs.disc_config(F1(Q)) == F1.s ** (n * (n - 1)) * cs.disc_config(Q)


def test_json_roundtrip():
    F1 = ag.make_aut("Cn", 3, I, F(2), -1, BF.S(3, 2, F(1, 3)) + BF.monomial(3, [0, 1], I, 1))
    assert ag.TriangularAut.from_json(F1.to_json()).params_equal(F1)


# -- torsion -------------------------------------------------------------------------------

def test_finite_order_examples():
    b = BF.monomial(3, [1, 0]) + BF.S(3, 4, F(2), -1)
    assert ag.order(ag.make_aut("Cn", 3, F(1), F(-1), 0, b)) == 2
    assert ag.order(ag.make_aut("Cn", 3, F(-1), F(-1), 0, BF.S(3, 2))) == 2
    scale_inv = BF.S(3, 6, F(1), -1)
    assert scale_inv.is_scale_invariant()
    assert ag.order(ag.make_aut("Cn", 3, I, F(-1), 0, scale_inv)) in (2, 4)
    assert ag.order(ag.make_aut("Cn", 3, F(2), F(1))) is None


def test_semisimple_examples():
    assert ag.order(ag.semisimple_build(sm.OMEGA6, sm.OMEGA6, BF.zero(3))) == 6
    b = BF.monomial(3, [2, 1], F(5))
    assert ag.semisimple_build(F(1), F(1), b).is_identity()


def test_involution_numeric_closed_form():
    F1 = ag.make_aut("Cn", 3, F(1), F(-1), 0, BF.monomial(3, [1, 0]))
    Q = cs.Configuration([0.3 + 1j, -2.0, 1.5 - 0.5j])
    assert ag.power_closed_form(F1, 2, Q).isclose(Q, 1e-9)


@given(st.integers(1, 8), st.sampled_from([F(1), F(-1), I, -I]), st.sampled_from([F(1), F(-1), I, -I]))
def test_closed_form_equals_iteration(m, s, t):
    b = BF.monomial(3, [1, 1], F(2)) + BF.S(3, 2, F(-1, 3)) + BF.monomial(3, [0, 0], I, -1)
    F1 = ag.make_aut("Cn", 3, s, t, 0, b)
    Q = cs.Configuration([F(1), I, F(-2, 3)])
    assert ag.power_closed_form(F1, m, Q) == ag.power(F1, m)(Q)


@pytest.mark.parametrize("s,t,m", [(I, F(-1), 4), (F(-1), F(-1), 2), (sm.OMEGA6, sm.OMEGA6 ** 2, 6)])
def test_inversion_formula(s, t, m):
    bt = BF.S(3, 2) + BF.monomial(3, [0, 1], F(3)) + BF.monomial(3, [1, 1], F(1), -1)
    b = ag.coboundary(bt, s, t)
    assert ag.torsion_condition(b, s, t, m).is_zero()
    recovered = ag.inversion_formula(b, s, t, m)
    assert ag.coboundary(recovered, s, t) == b


def test_inversion_formula_verbatim_variant():
    s, t, m = I, F(-1), 4
    b = ag.coboundary(BF.S(3, 2) + BF.monomial(3, [0, 1], F(3)), s, t)
    v = ag.inversion_formula(b, s, t, m, verbatim=True)
    assert ag.coboundary(v, s, t) == b.scaled(1 / s) * t


# -- tame maps, witnesses, covering ------------------------------------------------------------

def test_tame_map_examples():
    F1 = ag.make_aut("Cn", 3, F(2), F(1))
    T = ag.tame_affine_map(F1, [0, 1, 2])
    assert T(F(5)) == 2 * (5 - 1) + 1
    assert cs.Configuration([0, 1, 2]).map(T) == cs.Configuration([-1, 1, 3])
    Tid = ag.tame_affine_map(ag.identity("Cn", 3), [0, 1, 2])
    assert (Tid.a, Tid.b) == (1, 0)


def test_shift_commutator_witness():
    b = BF.monomial(4, [1, 0, 1], F(3)) + BF.S(4, 2, F(1), -1)
    assert ag.shift_commutator_witness(b)["ok"]


def test_scaling_commutator_witness():
    assert ag.commutator(ag.make_aut("Cn", 3, 1, 1, 1), ag.make_aut("Cn", 3, 1, 1)).is_identity()
    Q = [cs.Configuration([0.1, 1 + 1j, -2j])]
    rep = ag.commutator_witness(F(-1), 3, Q)
    assert rep["ok"] and abs(rep["s"] - cmath.exp(1j * cmath.pi / 6)) < 1e-12
    rng = random.Random(4)
    t = cmath.exp(1j * rng.uniform(0, 6.28))
    samples = [sm.rand_config(rng, 4).map(complex) for _ in range(20)]
    assert ag.commutator_witness(t, 4, samples)["ok"]


def test_covering_examples():
    rep = ag.covering_preimages(F(1), 1, [-1, 0, 1])
    assert rep["N"] == 7 and rep["ok"]
    assert abs(rep["omegas"][0] ** 7 * 4 - 1) < 1e-12
    rep0 = ag.covering_preimages(F(1), 0, [-1, 0, 1])
    assert rep0["N"] == 1 and rep0["preimages"][0].isclose(cs.Configuration([-1, 0, 1]))
    Q0 = cs.barycenter_project([F(3), I, F(-1), 2 * I, F(1, 2)])[1]
    rep5 = ag.covering_preimages(F(1), 1, Q0)
    assert rep5["N"] == 21 and len(rep5["preimages"]) == 21 and max(rep5["residuals"]) < 1e-8


def test_covering_domain():
    with pytest.raises(cs.DomainError):
        ag.covering_preimages(F(1), 1, [0, 1, 2])
    with pytest.raises(cs.DomainError):
        ag.covering_preimages(F(1), 1, [-1, -1, 2])


# -- Zinde automorphisms -----------------------------------------------------------------------

def test_zinde_examples():
    Q = cs.Configuration([F(1), F(2), I])
    assert ag.ZindeAut(F(1), 0, 1)(Q) == Q
    inv = ag.ZindeAut(F(1), 1, -1)
    assert (inv @ inv).s == 1 and (inv @ inv).k == 0 and (inv @ inv).eps == 1
    assert (inv @ inv)(Q) == Q


def test_zinde_composition_pointwise():
    rng = random.Random("zinde")
    for n in (3, 4, 5):
        for _ in range(20):
            A = ag.ZindeAut(sm.rand_gaussian(rng) or F(1), rng.randint(-2, 2), rng.choice([1, -1]))
            B = ag.ZindeAut(sm.rand_gaussian(rng) or F(3), rng.randint(-2, 2), rng.choice([1, -1]))
            Q = sm.rand_config(rng, n, nonzero=True)
            assert (A @ B)(Q) == A(B(Q))
            assert A.inverse()(A(Q)) == Q


# -- pair automorphisms --------------------------------------------------------------------------

def test_relative_examples():
    nu = ag.relative_aut(F(2), F(3), BF.zero(3))
    assert ag.relative_disc_check(nu)
    w2 = MultiPoly.var(ag.w_names(3), "w2")
    shift = ag.relative_aut(F(1), F(1), w2, 3)
    Q = cs.Configuration([F(1), F(1), F(4)])
    assert cs.membership(shift(Q), "Sigma")
    assert ag.relative_disc_check(ag.relative_aut(I, F(2), BF.monomial(3, [1, 0]) + BF.S(3, 2)))
