"""Verification suites: ordered batteries of identity checks with deterministic reports.

Each check is a function of a :class:`Context` returning ``(ok, detail)``.  The
random generator of a check is seeded from ``(seed, suite, check)`` so a report
does not depend on which other checks ran.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import autgroup as ag
from . import configspace as cs
from . import coxeter as cx
from . import derivations as dv
from . import elliptic as el
from . import sampling as sm
from .exactalg import (I, MultiPoly, UniPoly, discriminant_poly, discriminant_univariate,
                       resultant, z_names)

DEFAULT_SEED = 0
SUITE_NAMES = ("discr-chain", "lie-relations", "flows", "aut-group-laws", "torsion", "zinde",
               "covering", "sigma-charts", "elliptic", "counterexample", "coxeter")


@dataclass(frozen=True)
class Context:
    suite: str
    check: str
    seed: int = DEFAULT_SEED
    tol: float = 1e-9
    n: int | None = None

    @property
    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}:{self.suite}:{self.check}")

    def ns(self, default: tuple[int, ...]) -> tuple[int, ...]:
        if self.n is None:
            return default
        return tuple(x for x in default if x == self.n) or (self.n,)


CheckFn = Callable[[Context], tuple[bool, Any]]
SUITES: dict[str, list[tuple[str, str, CheckFn]]] = {name: [] for name in SUITE_NAMES}


def check(suite: str, name: str, anchor: str) -> Callable[[CheckFn], CheckFn]:
    def deco(fn: CheckFn) -> CheckFn:
        SUITES[suite].append((name, anchor, fn))
        return fn
    return deco


def _all_ok(results: dict) -> tuple[bool, dict]:
    return all(bool(v) for v in results.values()), results


# -- discr-chain --------------------------------------------------------------------------

@check("discr-chain", "d2-symbolic", "discriminant of a monic quadratic")
def _d2(ctx: Context) -> tuple[bool, Any]:
    z1, z2 = MultiPoly.gens(z_names(2))
    d2 = discriminant_poly(2)
    return d2 == z1 ** 2 - z2 * 4, str(d2)


@check("discr-chain", "disc-vs-squared-differences",
       "d_n(vieta(Q)) equals the product of squared root differences")
def _disc_chain(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    out = {}
    for n in ctx.ns((2, 3, 4, 5)):
        ok = True
        for _ in range(200):
            Q = sm.rand_config(rng, n, "Q(i)", distinct=rng.random() < 0.9)
            ok &= cs.disc_coeffs(cs.vieta_map(Q)) == cs.disc_config(Q)
        out[f"n={n}"] = ok
    return _all_ok(out)


@check("discr-chain", "disc-equals-resultant", "discriminant as a signed resultant of f and f'")
def _disc_res(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((2, 3, 4, 5)):
        for _ in range(20):
            Q = sm.rand_config(rng, n, "Q(i)")
            z = cs.vieta_map(Q)
            f = UniPoly(list(reversed(z)) + [Fraction(1)], "X")
            sign = (-1) ** (n * (n - 1) // 2)
            ok &= sign * resultant(f, f.derivative()) == cs.disc_config(Q)
    return ok, "40 x n"


@check("discr-chain", "roots-roundtrip", "root finding inverts the Vieta map")
def _roots(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    worst = 0.0
    for n in ctx.ns((2, 3, 4, 5)):
        for _ in range(20):
            Q = sm.rand_config(rng, n, "Q(i)").map(complex)
            R = cs.roots_numeric(cs.vieta_map(Q))
            ok = R.isclose(Q, 1e-8)
            if not ok:
                return False, f"mismatch at n={n}"
            worst = max(worst, max(min(abs(r - q) for r in R.points) for q in Q.points))
    return worst < 1e-8, f"max error {worst:.1e}"


# -- lie-relations ------------------------------------------------------------------------

@check("lie-relations", "bracket-relations",
       "[d_s, d_t] = 0, [d_s, b d_tau] = (d_s b) d_tau, [b d_tau, d_t] = b d_tau")
def _lie(ctx: Context) -> tuple[bool, Any]:
    out = {}
    for n in ctx.ns((2, 3, 4, 5, 6)):
        mons = dv.balanced_monomials(n, 5)
        ok = all(all(dv.lie_relations(n, e).values()) for e in mons)
        out[f"n={n} ({len(mons)} monomials)"] = ok
    return _all_ok(out)


@check("lie-relations", "discriminant-annihilated", "d_tau and d_t annihilate d_n")
def _ann(ctx: Context) -> tuple[bool, Any]:
    out = {f"n={n}": all(dv.discriminant_annihilated(n).values()) for n in ctx.ns((2, 3, 4, 5))}
    return _all_ok(out)


@check("lie-relations", "chart-pushforward-sign",
       "fields in the balanced chart agree with d/dy and y d/dy up to one global sign")
def _chart(ctx: Context) -> tuple[bool, Any]:
    reps = [dv.chart_pushforward_check(n) for n in ctx.ns((2, 3, 4, 5, 6))]
    signs = sorted({r["eps"] for r in reps})
    ok = all(r["ok"] for r in reps) and len(signs) == 1
    return ok, {"eps": signs, "ns": [r["n"] for r in reps]}


# -- flows --------------------------------------------------------------------------------

@check("flows", "exp-flow-root-shift", "exp(zeta d_tau) translates every root by eps*zeta")
def _flow(ctx: Context) -> tuple[bool, Any]:
    out = {f"n={n}": dv.flow_shift_check(n) for n in ctx.ns((2, 3, 4, 5))}
    return _all_ok(out)


@check("flows", "locally-nilpotent", "d_tau and its replicas b d_tau are locally nilpotent, d_t is not")
def _lnd(ctx: Context) -> tuple[bool, Any]:
    out = {}
    for n in ctx.ns((2, 3, 4, 5)):
        b = dv.balanced_pullback(n, [1] + [0] * (n - 2))
        out[f"n={n}"] = all(dv.lnd_check(d)["nilpotent"] for d in (dv.d_tau(n), dv.d_tau(n) * b))
        out[f"n={n} d_t semisimple"] = not dv.lnd_check(dv.d_t(n))["nilpotent"]
    return _all_ok(out)


@check("flows", "danielewski-flow", "triangular flow preserving x^n y - z^2 + 1 = 0")
def _dan(ctx: Context) -> tuple[bool, Any]:
    rep = dv.danielewski_demo(1)
    return rep["ok"], {"image_of_(0,0,1,1)": [str(x) for x in rep["alpha_at_(0,0,1,1)"]]}


@check("flows", "flow-pointwise", "the flow of d_tau moves a configuration rigidly")
def _flow_pt(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((2, 3, 4, 5)):
        gens = dv.flow_generators(dv.d_tau(n), MultiPoly.var(z_names(n) + ("zeta",), "zeta"))
        for _ in range(10):
            Q = sm.rand_config(rng, n, "Q(i)")
            zeta = sm.rand_gaussian(rng)
            point = dict(zip(z_names(n), cs.vieta_map(Q)))
            point["zeta"] = zeta
            image = tuple(gens[v].eval(point) for v in z_names(n))
            eps = dv._chart_sign()
            ok &= image == cs.vieta_map(Q.map(lambda q: q + eps * zeta))
    return ok, "10 x n"


# -- aut-group-laws -----------------------------------------------------------------------

def _law_battery(space: str, n: int, rng: random.Random, tol: float, count: int) -> dict:
    sample_field = "Q(i)"
    if space == "SC" and n == 3:
        sample_field = "Q(sqrt-3)"
    check = space != "SC" or n == 3
    stats = {"compose": True, "invert": True, "commutator": True, "disc": True}
    for _ in range(count):
        F = sm.rand_aut(rng, space, n, sample_field)
        G = sm.rand_aut(rng, space, n, sample_field)
        if space == "SC":
            Q = sm.rand_sc_exact(rng) if n == 3 else sm.rand_config(rng, n, "Q(i)")
        elif space == "Sigma":
            Q = sm.rand_sigma_config(rng, n)
        else:
            Q = sm.rand_config(rng, n, "Q(i)", distinct=space != "pair" or rng.random() < 0.7)
            if space == "pair" and rng.random() < 0.3:
                Q = sm.rand_sigma_config(rng, n)

        def ap(H: ag.TriangularAut, P: Any) -> cs.Configuration:
            return ag.apply_aut(H, P, check=check)

        FQ = ap(F, Q)
        stats["compose"] &= ap(ag.compose(G, F), Q) == ap(G, FQ)
        Finv, Ginv = ag.invert(F), ag.invert(G)
        stats["invert"] &= ap(Finv, FQ) == Q and ag.compose(F, Finv).is_identity()
        lhs = ap(ag.commutator(G, F), Q)
        stats["commutator"] &= lhs == ap(Ginv, ap(Finv, ap(G, FQ)))
        stats["disc"] &= cs.disc_config(FQ) == F.s ** (n * (n - 1)) * cs.disc_config(Q)
    if space == "SC" and n != 3:
        # genuine points of the level set D = 1, in floating point
        for _ in range(20):
            F = sm.rand_aut(rng, "SC", n)
            G = sm.rand_aut(rng, "SC", n)
            Q = sm.rand_sc_float(rng, n)
            stats["compose"] &= ag.apply_aut(ag.compose(G, F), Q).isclose(G(F(Q)), tol)
            stats["invert"] &= ag.invert(F)(F(Q)).isclose(Q, tol)
            stats["commutator"] &= ag.commutator(G, F)(Q).isclose(
                ag.invert(G)(ag.invert(F)(G(F(Q)))), tol)
    return stats


def _laws_for(space: str) -> CheckFn:
    def run(ctx: Context) -> tuple[bool, Any]:
        rng = ctx.rng
        out = {}
        for n in ctx.ns((3, 4, 5)):
            for k, v in _law_battery(space, n, rng, ctx.tol, 100).items():
                out[f"n={n} {k}"] = v
        return _all_ok(out)
    return run


for _space, _anchor in (("Cn", "group law of triangular automorphisms of C^n"),
                        ("SC", "group law on the special configuration space"),
                        ("Sigma", "group law on the discriminant variety"),
                        ("pair", "group law of automorphisms of the pair (C^n, Sigma)")):
    check("aut-group-laws", f"laws-{_space}", _anchor)(_laws_for(_space))


@check("aut-group-laws", "relative-discriminant-symbolic",
       "d_n(F(z)) = s^(n(n-1)) d_n(z) as a polynomial identity")
def _reldisc(ctx: Context) -> tuple[bool, Any]:
    cases = [(3, ag.BalancedFunction.monomial(3, [1, 0]) + ag.BalancedFunction.monomial(3, [0, 1], 2)),
             (3, ag.BalancedFunction.S(3, 2, Fraction(1, 3))),
             (4, ag.BalancedFunction.monomial(4, [1, 0, 0], -1))]
    out = {}
    for i, (n, b) in enumerate(cases):
        F = ag.relative_aut(I, Fraction(2), b)
        out[f"case {i} (n={n})"] = ag.relative_disc_check(F)
    return _all_ok(out)


@check("aut-group-laws", "shift-as-commutator", "the shift y -> y + b is a commutator")
def _shift_comm(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((3, 4, 5)):
        for _ in range(5):
            ok &= ag.shift_commutator_witness(sm.rand_balanced(rng, n, m_range=(-1, 1)))["ok"]
    return ok, "5 x n"


@check("aut-group-laws", "scaling-as-commutator", "scaling of the barycenter by t is a product of commutators")
def _scale_comm(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((3, 4, 5)):
        for t in (Fraction(2), Fraction(-3, 2), 1 + 2 * I):
            samples = [sm.rand_config(rng, n, "Q(i)").map(complex) for _ in range(3)]
            ok &= ag.commutator_witness(t, n, samples, ctx.tol)["ok"]
    return ok, "3 values of t x n"


@check("aut-group-laws", "tame-affine-map", "F(Q) = T(Q) Q for an affine map T(Q) of the line")
def _tame(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((3, 4, 5)):
        for _ in range(10):
            F = sm.rand_aut(rng, "Cn", n)
            Q = sm.rand_config(rng, n)
            T = ag.tame_affine_map(F, Q)
            ok &= Q.map(T) == F(Q)
    return ok, "10 x n"


# -- torsion ----------------------------------------------------------------------------------

@check("torsion", "closed-form-vs-iteration", "closed form of F^m by induction on m")
def _closed(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    units = [Fraction(1), Fraction(-1), I, -I]
    exact_ok = float_ok = True
    for n in ctx.ns((3, 4, 5)):
        for _ in range(15):
            b = sm.rand_balanced(rng, n, m_range=(-1, 1), with_s=True)
            F = ag.make_aut("Cn", n, rng.choice(units), rng.choice(units), 0, b)
            Q = sm.rand_config(rng, n)
            m = rng.randint(1, 6)
            exact_ok &= ag.power_closed_form(F, m, Q) == ag.apply_aut(ag.power(F, m), Q)
        for _ in range(5):
            s = complex(rng.uniform(0.5, 1.5), rng.uniform(-1, 1))
            t = complex(rng.uniform(0.5, 1.5), rng.uniform(-1, 1))
            F = ag.make_aut("Cn", n, s, t, 0, sm.rand_balanced(rng, n))
            Q = sm.rand_config(rng, n).map(complex)
            m = rng.randint(1, 6)
            float_ok &= ag.power_closed_form(F, m, Q).isclose(ag.apply_aut(ag.power(F, m), Q), ctx.tol)
    return _all_ok({"exact": exact_ok, "float": float_ok})


@check("torsion", "example-a", "s = 1, t = -1: F is an involution for any b")
def _ex_a(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    orders = []
    for n in ctx.ns((3, 4, 5)):
        b = sm.rand_balanced(rng, n, terms=3, m_range=(-1, 1), with_s=True)
        orders.append(ag.order(ag.make_aut("Cn", n, Fraction(1), Fraction(-1), 0, b)))
    return all(o == 2 for o in orders), {"orders": orders}


@check("torsion", "example-b", "s, t distinct m-th roots of unity and scale-invariant b: order divides m")
def _ex_b(ctx: Context) -> tuple[bool, Any]:
    out = {}
    for n in ctx.ns((3, 4)):
        N = n * (n - 1)
        b = ag.BalancedFunction.S(n, N, Fraction(1), -1)
        for s, t, m in ((I, Fraction(-1), 4), (Fraction(1), -I, 4), (sm.OMEGA6, sm.OMEGA6 ** 2, 6)):
            o = ag.order(ag.make_aut("Cn", n, s, t, 0, b))
            out[f"n={n} s={s} t={t}"] = o is not None and m % o == 0 and o > 1
    return _all_ok(out)


@check("torsion", "example-c", "Q -> -Q + S_2(Q0) is an involution")
def _ex_c(ctx: Context) -> tuple[bool, Any]:
    orders = [ag.order(ag.make_aut("Cn", n, Fraction(-1), Fraction(-1), 0, ag.BalancedFunction.S(n, 2)))
              for n in ctx.ns((3, 4, 5))]
    return all(o == 2 for o in orders), {"orders": orders}


@check("torsion", "inversion-formula", "b = t*bt - bt(s .) recovered from a torsion solution b")
def _inv(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    roots = [(I, Fraction(-1), 4), (-I, I, 4), (sm.OMEGA6, sm.OMEGA6 ** 3, 6), (Fraction(-1), Fraction(1), 2)]
    for n in ctx.ns((3, 4, 5)):
        for s, t, m in roots:
            field = "Q(sqrt-3)" if m == 6 else "Q(i)"
            bt0 = sm.rand_balanced(rng, n, terms=3, m_range=(-1, 1), field=field, with_s=True)
            b = ag.coboundary(bt0, s, t)
            ok &= ag.torsion_condition(b, s, t, m).is_zero()
            bt = ag.inversion_formula(b, s, t, m)
            ok &= ag.coboundary(bt, s, t) == b
            F = ag.make_aut("Cn", n, s, t, 0, b)
            ok &= ag.power(F, m).is_identity()
    return ok, "4 root pairs x n"


@check("torsion", "semisimple-orders", "s Q0 + t bc + t b(Q0) - b(s Q0) has order lcm(ord s, ord t)")
def _ss(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    out = {}
    for s, t, want in ((sm.OMEGA6, sm.OMEGA6, 6), (I, Fraction(-1), 4), (Fraction(-1), sm.OMEGA6 ** 2, 6)):
        field = "Q(i)" if s == I else "Q(sqrt-3)"
        b = sm.rand_balanced(rng, 3, field=field, with_s=True)
        out[f"s={s} t={t}"] = ag.order(ag.semisimple_build(s, t, b)) == want
    out["b=0 s=t=omega6"] = ag.order(ag.semisimple_build(sm.OMEGA6, sm.OMEGA6, ag.BalancedFunction.zero(3))) == 6
    return _all_ok(out)


# -- zinde ----------------------------------------------------------------------------------

@check("zinde", "h-invariance", "h_n(cQ) = h_n(Q) and h_n(Q^-1) = h_n(Q)")
def _h(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((2, 3, 4, 5)):
        for _ in range(20):
            Q = sm.rand_config(rng, n, "Q(i)", nonzero=True)
            c = sm.rand_gaussian(rng)
            while c == 0:
                c = sm.rand_gaussian(rng)
            h = cs.h_n(Q)
            ok &= cs.h_n(Q.map(lambda q: c * q)) == h and cs.h_n(Q.map(lambda q: 1 / q)) == h
    return ok, "20 x n"


@check("zinde", "composition-law", "(s, k, eps) o (s', k', eps') = (s s'^eps, k + eps k', eps eps')")
def _zcomp(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for n in ctx.ns((2, 3, 4)):
        for _ in range(20):
            F = ag.ZindeAut(sm.rand_gaussian(rng) or Fraction(1), rng.randint(-1, 1), rng.choice([1, -1]))
            G = ag.ZindeAut(sm.rand_gaussian(rng) or Fraction(2), rng.randint(-1, 1), rng.choice([1, -1]))
            Q = sm.rand_config(rng, n, "Q(i)", nonzero=True)
            ok &= (F @ G)(Q) == F(G(Q))
            ok &= F.inverse()(F(Q)) == Q
            ok &= cs.h_n(F(Q)) == cs.h_n(Q)
    return ok, "20 x n"


@check("zinde", "U-involution", "U fixes (4,2), is an involution and swaps z2 = 0 with z1^2 = 4 z2")
def _U(ctx: Context) -> tuple[bool, Any]:
    z1, z2 = MultiPoly.gens(("z1", "z2"))
    U = lambda a, b: (a, a * a / 4 - b)  # noqa: E731
    u1, u2 = U(z1, z2)
    vv1, vv2 = U(u1, u2)
    g1, g2 = z2, z1 * z1 - z2 * 4
    out = {
        "fixes (4,2)": cs.involution_suite((Fraction(4), Fraction(2)), "U") == (4, 2),
        "involution": vv1 == z1 and vv2 == z2,
        "pulls z2=0 to z1^2=4z2": g1.substitute({"z1": u1, "z2": u2}) == g2 * Fraction(1, 4),
        "pulls z1^2=4z2 to z2=0": g2.substitute({"z1": u1, "z2": u2}) == g1 * 4,
    }
    return _all_ok(out)


@check("zinde", "cstar-involutions", "iota, tau_inv, upsilon, sigma', rho are involutions")
def _invols(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    out = {}
    for which in ("iota", "tau_inv", "upsilon", "sigma_prime", "rho_invol"):
        ok = True
        for _ in range(20):
            Q = sm.rand_ordered_cstar(rng, rng.randint(2, 5))
            ok &= cs.involution_suite(cs.involution_suite(Q, which), which) == Q
        out[which] = ok
    return _all_ok(out)


# -- covering ----------------------------------------------------------------------------------

@check("covering", "preimage-count", "X -> c D(X)^m X is an unramified cyclic covering of degree m n(n-1) + 1")
def _cover(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    out = {}
    for n in ctx.ns((3, 4, 5)):
        for m in (1,):
            Q = sm.rand_config(rng, n)
            _, Q0 = cs.barycenter_project(Q)
            rep = ag.covering_preimages(Fraction(1), m, Q0, 1e-8)
            want = m * n * (n - 1) + 1
            out[f"n={n} m={m} N={want}"] = rep["ok"] and rep["N"] == want and len(rep["preimages"]) == want
    return _all_ok(out)


# -- sigma-charts --------------------------------------------------------------------------------

@check("sigma-charts", "phi-psi", "phi and psi are inverse isomorphisms")
def _phipsi(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for _ in range(50):
        n = rng.randint(3, 6)
        Qp = sm.rand_config(rng, n - 2, "Q(i)", nonzero=True)
        P = cs.sigma_blc_psi(Qp)
        ok &= cs.barycenter(P) == 0 and cs.sigma_blc_phi(P) == Qp
        ok &= cs.sigma_blc_psi(cs.sigma_blc_phi(P)) == P
    return ok, "50 inputs"


@check("sigma-charts", "eta", "eta and its inverse on ordered configurations of C*")
def _eta(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for _ in range(50):
        Q = sm.rand_ordered_cstar(rng, rng.randint(2, 5))
        Qp, y = cs.eta(Q)
        ok &= cs.eta_inv(Qp, y) == Q and cs.eta(cs.eta_inv(Qp, y)) == (Qp, y)
        c = sm.rand_gaussian(rng) or Fraction(3)
        Qc, yc = cs.eta(Q.map(lambda q: c * q))
        ok &= Qc == Qp and yc == c * y
    return ok, "50 inputs"


@check("sigma-charts", "phi-tilde", "phi-tilde and its inverse")
def _phit(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for _ in range(50):
        Q = sm.rand_ordered_cstar(rng, rng.randint(2, 5))
        P = cs.phi_tilde(Q)
        ok &= cs.phi_tilde_inv(P) == Q and cs.barycenter(P) == 0
        ok &= cs.phi_tilde(cs.phi_tilde_inv(P)) == P
    return ok, "50 inputs"


@check("sigma-charts", "mobius-transposition", "the transposition (n, n+1) acts by z -> 1 - z")
def _mob(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for _ in range(50):
        k = rng.randint(1, 4)
        while True:
            Q = sm.rand_config(rng, k, "Q(i)", nonzero=True)
            if all(q != 1 for q in Q.points):
                break
        Q = cs.Configuration(Q.points, ordered=True)
        m = k + 3
        sigma = cx.transposition(m, m - 2, m - 1)
        ok &= cs.mobius_action(sigma, Q) == Q.map(lambda q: 1 - q)
    return ok, "50 inputs"


@check("sigma-charts", "mobius-group-action", "permutations of n+2 points act through Moebius renormalization")
def _mob_act(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    for _ in range(30):
        k = rng.randint(1, 3)
        m = k + 3
        while True:
            Q = sm.rand_config(rng, k, "Q(i)", nonzero=True)
            if all(q != 1 for q in Q.points):
                break
        Q = cs.Configuration(Q.points, ordered=True)
        imgs = list(range(1, m + 1))
        rng.shuffle(imgs)
        p = cx.Perm(imgs)
        imgs = list(range(1, m + 1))
        rng.shuffle(imgs)
        q = cx.Perm(imgs)
        ok &= cs.mobius_action(p * q, Q) == cs.mobius_action(p, cs.mobius_action(q, Q))
    return ok, "30 pairs"


# -- elliptic --------------------------------------------------------------------------------------

@check("elliptic", "resolvent-chain", "discr f = discr R3 = discr g in Q[z2, z3, z4]")
def _chain(ctx: Context) -> tuple[bool, Any]:
    rep = el.resolvent_chain_identities()
    return rep["ok"], {"f=R3": rep["f=R3"], "R3=g": rep["R3=g"]}


@check("elliptic", "resolvent-example", "X^4 - 1 has resolvent X^3 + 4X and discriminant -256")
def _x4(ctx: Context) -> tuple[bool, Any]:
    z = (Fraction(0), Fraction(0), Fraction(-1))
    R = el.cubic_resolvent(*z)
    dR = discriminant_univariate(UniPoly([R[2], R[1], R[0], Fraction(1)], "X"))
    df = el.quartic_discriminant(*z)
    u2, u3 = el.tschirnhausen(*z)
    return R == (0, 4, 0) and df == dR == el.base_discriminant(u2, u3) == -256, \
        {"resolvent": [str(x) for x in R], "discr": str(df)}


@check("elliptic", "j-special-values", "j = 0 over u2 = 0 and j = 1728 over u3 = 0")
def _jv(ctx: Context) -> tuple[bool, Any]:
    j0 = el.j_from_invariants(Fraction(0), Fraction(-1, 27))
    j1728 = el.j_from_invariants(Fraction(-1, 4), Fraction(0))
    return j0 == 0 and j1728 == 1728, {"j(u2=0)": str(j0), "j(u2^3=-1/4)": str(j1728)}


@check("elliptic", "j-on-base-curve", "j of the fibre equals -2^8 3^3 u2^3 on the base curve")
def _jbase(ctx: Context) -> tuple[bool, Any]:
    pts = el.exact_surface_points(50)
    ok = len(pts) >= 50
    signs = set()
    for x in pts[:50]:
        u2, u3 = el.fibration_project(x)
        ok &= el.base_discriminant(u2, u3) == 1
        rep = el.j_invariant(u2, u3)
        ok &= rep["j"] == -6912 * u2 ** 3
        if rep["sign"] is not None:
            signs.add(rep["sign"])
    rng = ctx.rng
    for x in el.float_surface_points(20, rng.randrange(10 ** 6)):
        u2, u3 = el.fibration_project(x, 1e-7)
        j = complex(el.j_invariant(u2, u3)["j"])
        ok &= abs(j + 6912 * complex(u2) ** 3) <= 1e-10 * max(1.0, abs(j))
    return ok, {"points": 50, "sign_vs_2^8*3^3*u2^3": sorted(signs)}


@check("elliptic", "mu12-equivariance", "the mu_12 action on quartics covers zeta^4, zeta^6 on (u2, u3)")
def _mu(ctx: Context) -> tuple[bool, Any]:
    rep = el.mu12_symbolic_check()
    import cmath
    zeta = cmath.exp(2j * cmath.pi / 12)
    ok = rep["ok"]
    for x in el.float_surface_points(10, ctx.rng.randrange(10 ** 6)):
        y = el.mu12_action(zeta, x)
        ok &= el.on_surface(y, 1e-7)
        u = el.tschirnhausen(*y)
        v = el.mu12_action(zeta, el.tschirnhausen(*x), "base")
        ok &= all(abs(complex(a) - complex(b)) <= 1e-9 * max(1.0, abs(complex(b))) for a, b in zip(u, v))
    return ok, {k: rep[k] for k in ("u2_equivariant", "u3_equivariant")}


# -- counterexample ----------------------------------------------------------------------------------

@check("counterexample", "master-identity", "discr(X^4 + pX^2 + qX - p^2/12) = -(8p^3 + 27q^2)^2 / 27")
def _master(ctx: Context) -> tuple[bool, Any]:
    rep = el.master_identity()
    return rep["ok"], {"residual": rep["residual"]}


@check("counterexample", "field-identity", "over Q(sqrt -3) the image discriminant is (discr f)^2")
def _field(ctx: Context) -> tuple[bool, Any]:
    rep = el.field_identity()
    return rep["ok"], {"generic": rep["generic"], "in_z": rep["in_z"]}


@check("counterexample", "image-on-u2-zero", "the image quartic lies over u2 = 0")
def _u2zero(ctx: Context) -> tuple[bool, Any]:
    return el.image_on_u2_zero(), None


@check("counterexample", "pointwise-square", "discr F(f) = (discr f)^2 at random quartics")
def _sq(ctx: Context) -> tuple[bool, Any]:
    rng = ctx.rng
    ok = True
    worst = 0.0
    for _ in range(30):
        x = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        y = el.counterexample_endo(x)
        d, dy = complex(el.quartic_discriminant(*x)), complex(el.quartic_discriminant(*y))
        err = abs(dy - d * d) / max(1.0, abs(d * d))
        worst = max(worst, err)
    ok &= worst < 1e-9
    for x in el.float_surface_points(10, rng.randrange(10 ** 6)):
        ok &= el.on_surface(el.counterexample_endo(x), 1e-7)
    return ok, {"max_rel_error_below_1e-9": worst < 1e-9}


# -- coxeter -----------------------------------------------------------------------------------------

@check("coxeter", "wb2-conjugacy-classes", "the five conjugacy classes of WB_2")
def _wb2cls(ctx: Context) -> tuple[bool, Any]:
    got = set(cx.wb_group(2).conjugacy_classes())
    want = set(cx.wb2_expected_classes())
    return got == want, {"classes": len(got)}


@check("coxeter", "out-wb2", "Out(WB_2) is cyclic of order 2")
def _out(ctx: Context) -> tuple[bool, Any]:
    rep = cx.automorphism_search(cx.wb_group(2))
    return rep["out_order"] == 2, {k: rep[k] for k in ("aut_order", "inn_order", "out_order")}


@check("coxeter", "E3-characteristic", "the sign subgroup E_3 is characteristic in WB_3")
def _e3(ctx: Context) -> tuple[bool, Any]:
    rep = cx.wb_family(3, "E_characteristic")
    return rep["ok"], {k: rep[k] for k in ("order", "aut_order", "stabilizing")}


@check("coxeter", "E2-not-characteristic", "an outer automorphism of WB_2 moves E_2")
def _e2(ctx: Context) -> tuple[bool, Any]:
    rep = cx.wb_family(2, "E2_not_characteristic")
    return rep["ok"], {k: rep[k] for k in ("aut_order", "moving", "graph_involution_moves_E")}


@check("coxeter", "normalizers", "normalizers of point stabilizers in S(n+2)")
def _norm(ctx: Context) -> tuple[bool, Any]:
    out = {}
    for n in ctx.ns((3, 4, 5)):
        a = cx.lemma_verifiers(n, "N2")
        b = cx.lemma_verifiers(n, "N2bis")
        out[f"n={n} order {a['normalizer_order']} = 2*n!"] = a["ok"]
        out[f"n={n} order {b['normalizer_order']} = (n+1)!"] = b["ok"]
    return _all_ok(out)


@check("coxeter", "klein-example", "braid images generate a Klein four-group in A_4")
def _klein(ctx: Context) -> tuple[bool, Any]:
    rep = cx.klein_example()
    return rep["ok"], {k: rep[k] for k in ("s", "t", "st", "uv", "K_order")}


# -- driver ------------------------------------------------------------------------------------------

def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def run_suite(suite: str, seed: int = DEFAULT_SEED, tol: float = 1e-9, n: int | None = None) -> dict:
    """Run one suite (or ``all``) and return an ordered report."""
    names = SUITE_NAMES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; expected one of {SUITE_NAMES + ('all',)}")
    checks = []
    for name in names:
        for cname, anchor, fn in SUITES[name]:
            ctx = Context(name, cname, seed, tol, n)
            try:
                ok, detail = fn(ctx)
            except Exception as exc:  # a crashing check is a failed check
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            checks.append({"suite": name, "check": cname, "anchor": anchor,
                           "status": "pass" if ok else "fail", "detail": _jsonable(detail)})
    failed = sum(c["status"] == "fail" for c in checks)
    return {"suite": suite, "seed": seed, "tol": tol, "n": n, "checks": checks,
            "passed": len(checks) - failed, "failed": failed, "ok": failed == 0}
