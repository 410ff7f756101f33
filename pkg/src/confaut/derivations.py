"""Derivations of polynomial rings, their brackets and exponential flows.

The coefficient-space fields ``d_tau``, ``d_t`` and ``d_s`` are built from the
closed formulas ``d_tau z_i = (n - i + 1) z_(i-1)``, ``d_t = (-z_1/n) d_tau``
and ``d_s = euler - d_t``.  Passing ``eps`` multiplies ``d_tau`` (and hence
``d_t``) by a sign; :func:`chart_pushforward_check` finds the sign that turns
``d_tau`` into ``d/dy`` in the balanced chart.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Any, Mapping, Sequence

from .configspace import chart_blc, chart_blc_inv
from .exactalg import MultiPoly, UnknownVariable, discriminant_poly, z_names
from .autgroup import w_names


class NotNilpotent(ArithmeticError):
    pass


def _as_poly(vars: Sequence[str], x: Any) -> MultiPoly:
    return x.with_vars(vars) if isinstance(x, MultiPoly) else MultiPoly.const(vars, x)


class Derivation:
    """A derivation determined by the images of the generators."""

    __slots__ = ("vars", "images")

    def __init__(self, vars: Sequence[str], images: Mapping[str, Any]) -> None:
        self.vars = tuple(vars)
        for v in images:
            if v not in self.vars:
                raise UnknownVariable(v)
        extra: list[str] = []
        for img in images.values():
            if isinstance(img, MultiPoly):
                extra.extend(v for v in img.free_vars() if v not in self.vars and v not in extra)
        ring = self.vars + tuple(extra)
        self.images = {v: _as_poly(ring, images.get(v, 0)) for v in self.vars}

    @property
    def ring(self) -> tuple[str, ...]:
        return next(iter(self.images.values())).vars if self.images else self.vars

    def __call__(self, f: Any) -> MultiPoly:
        return derive_apply(self, f)

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.vars, {v: self.images[v] + other.images[v] for v in self.vars})

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.vars, {v: self.images[v] - other.images[v] for v in self.vars})

    def __mul__(self, c: Any) -> "Derivation":
        """Multiply every image by a scalar or a polynomial (a replica when ``c`` is a kernel element)."""
        return Derivation(self.vars, {v: self.images[v] * c for v in self.vars})

    __rmul__ = __mul__

    def __neg__(self) -> "Derivation":
        return self * -1

    def __eq__(self, other: Any) -> bool:
        return (isinstance(other, Derivation) and set(self.vars) == set(other.vars)
                and all(self.images[v] == other.images[v] for v in self.vars))

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images.values())

    def __repr__(self) -> str:
        return "Derivation(" + ", ".join(f"{v} -> {self.images[v]}" for v in self.vars) + ")"

    def to_json(self) -> dict:
        return {"vars": list(self.vars), "images": {v: self.images[v].to_json() for v in self.vars}}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "Derivation":
        return cls(obj["vars"], {v: MultiPoly.from_json(p) for v, p in obj["images"].items()})


def derive_apply(d: Derivation, f: Any) -> MultiPoly:
    """Leibniz extension: ``d(f) = sum_v d(v) * df/dv``."""
    if not isinstance(f, MultiPoly):
        return MultiPoly(d.ring)
    stray = [v for v in f.free_vars() if v not in d.vars and v not in d.ring]
    if stray:
        raise UnknownVariable(f"variable {stray[0]} is not covered by the derivation")
    out = MultiPoly(d.ring)
    for v in d.vars:
        img = d.images[v]
        if img.is_zero() or v not in f.vars:
            continue
        df = f.diff(v)
        if not df.is_zero():
            out = out + img * df
    return out


def bracket(d1: Derivation, d2: Derivation) -> Derivation:
    if set(d1.vars) != set(d2.vars):
        raise ValueError("bracket needs derivations over the same variables")
    return Derivation(d1.vars, {v: d1(d2.images[v]) - d2(d1.images[v]) for v in d1.vars})


def lnd_check(d: Derivation, bound: int | None = None) -> dict:
    """Iterate ``d`` on each generator until it vanishes.

    ``depth[v]`` is the number of applications needed to reach 0.  When some
    generator is an eigenvector (``d v = c v`` with ``c != 0``) it is reported as
    a witness of non-nilpotency.
    """
    bound = 2 * len(d.vars) + 2 if bound is None else bound
    depths: dict[str, int | None] = {}
    witness = None
    for v in d.vars:
        x = MultiPoly.var(d.ring, v)
        img = d.images[v]
        if witness is None and not img.is_zero():
            ratio = _scalar_ratio(img, x)
            if ratio is not None:
                witness = {"var": v, "eigenvalue": ratio}
        f = x
        depth = None
        for i in range(1, bound + 1):
            f = d(f)
            if f.is_zero():
                depth = i
                break
        depths[v] = depth
    nilpotent = all(x is not None for x in depths.values())
    return {"nilpotent": nilpotent, "depths": depths, "witness": None if nilpotent else witness}


def _scalar_ratio(p: MultiPoly, q: MultiPoly) -> Any:
    if set(p.terms) != set(q.terms):
        return None
    ratios = {p.terms[e] / q.terms[e] for e in p.terms}
    return ratios.pop() if len(ratios) == 1 else None


def iterate(d: Derivation, f: MultiPoly, bound: int) -> list[MultiPoly]:
    """``[f, d f, d^2 f, ...]`` up to the last nonzero term."""
    seq = [_as_poly(d.ring, f) if not isinstance(f, MultiPoly) else f]
    for _ in range(bound):
        nxt = d(seq[-1])
        if nxt.is_zero():
            return seq
        seq.append(nxt)
    raise NotNilpotent(f"derivation not nilpotent on {f} within {bound} steps")


def exp_flow(d: Derivation, lam: Any, f: Any, bound: int | None = None) -> MultiPoly:
    """``sum_k lam^k d^k(f) / k!``, a finite sum for locally nilpotent ``d``."""
    if not isinstance(f, MultiPoly):
        return _as_poly(d.ring, f)
    if bound is None:
        bound = (max(f.total_degree(), 0) + 1) * (2 * len(d.vars) + 2)
    seq = iterate(d, f, bound)
    out: Any = MultiPoly(seq[0].vars)
    for k, g in enumerate(seq):
        out = out + g * (lam ** k if k else 1) * Fraction(1, factorial(k))
    return out


def flow_generators(d: Derivation, lam: Any) -> dict[str, MultiPoly]:
    return {v: exp_flow(d, lam, MultiPoly.var(d.ring, v)) for v in d.vars}


# -- the standard fields on coefficient space ----------------------------------------

FIELDS = ("d_tau", "d_t", "d_s", "euler", "replica")


def d_tau(n: int, eps: int = 1) -> Derivation:
    names = z_names(n)
    zs = MultiPoly.gens(names)
    one = MultiPoly.const(names, 1)
    return Derivation(names, {names[i - 1]: (zs[i - 2] if i > 1 else one) * ((n - i + 1) * eps)
                              for i in range(1, n + 1)})


def euler(n: int) -> Derivation:
    names = z_names(n)
    return Derivation(names, {v: MultiPoly.var(names, v) * k for k, v in enumerate(names, 1)})


def d_t(n: int, eps: int = 1) -> Derivation:
    z1 = MultiPoly.var(z_names(n), "z1")
    return d_tau(n, eps) * (z1 * Fraction(-1, n))


def d_s(n: int, eps: int = 1) -> Derivation:
    return euler(n) - d_t(n, eps)


def standard_fields(n: int, which: str, b: Any = None, base: Derivation | None = None,
                    eps: int = 1) -> Derivation:
    if n < 2:
        raise ValueError("standard fields need n >= 2")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if which == "d_tau":
        return d_tau(n, eps)
    if which == "d_t":
        return d_t(n, eps)
    if which == "d_s":
        return d_s(n, eps)
    if which == "euler":
        return euler(n)
    if which == "replica":
        if base is None:
            base = d_tau(n, eps)
        return base * (Fraction(1) if b is None else b)
    raise ValueError(f"unknown field {which!r}; expected one of {FIELDS}")


def balanced_pullback(n: int, w_exp: Sequence[int]) -> MultiPoly:
    """The balanced monomial ``prod w_j^e_j`` as a polynomial in ``z``."""
    w, _ = chart_blc_inv(MultiPoly.gens(z_names(n)))
    out = MultiPoly.const(z_names(n), 1)
    for wj, e in zip(w, w_exp):
        out = out * wj ** e
    return out.with_vars(z_names(n))


def balanced_monomials(n: int, max_weight: int) -> list[tuple[int, ...]]:
    """Exponent vectors of w-monomials of weight ``1..max_weight``."""
    out: list[tuple[int, ...]] = []

    def rec(j: int, left: int, acc: list[int]) -> None:
        if j > n:
            if left < max_weight:
                out.append(tuple(acc))
            return
        for e in range(left // j + 1):
            rec(j + 1, left - e * j, acc + [e])

    rec(2, max_weight, [])
    return sorted(out, key=lambda e: (sum(j * x for j, x in zip(range(2, n + 1), e)), e))


def lie_relations(n: int, w_exp: Sequence[int], eps: int = -1) -> dict[str, bool]:
    """The three bracket relations for the fields oriented by ``eps``."""
    ds, dt, dtau = d_s(n, eps), d_t(n, eps), d_tau(n, eps)
    b = balanced_pullback(n, w_exp)
    bdtau = dtau * b
    return {
        "[d_s,d_t]=0": bracket(ds, dt).is_zero(),
        "[d_s,b d_tau]=(d_s b) d_tau": bracket(ds, bdtau) == dtau * ds(b),
        "[b d_tau,d_t]=b d_tau": bracket(bdtau, dt) == bdtau,
    }


def chart_pushforward_check(n: int) -> dict:
    """Compare the fields with ``d/dy`` and Euler fields in the balanced chart.

    The sign ``eps`` is fixed by ``n = 2, k = 1`` and then tested for every
    ``k`` and every ``n``: ``(d_tau z_k) o chart = eps * d/dy (z_k o chart)`` and
    ``(d_t z_k) o chart = eps * y d/dy (z_k o chart)``.  The oriented ``d_s``
    (built with ``eps``) is compared with the weighted Euler field on ``w``.
    """
    if not 2 <= n <= 6:
        raise ValueError("chart check supports 2 <= n <= 6")
    eps = _chart_sign()
    cv = w_names(n) + ("y",)
    gens = MultiPoly.gens(cv)
    w, y = gens[:-1], gens[-1]
    zc = [_as_poly(cv, p) for p in chart_blc(list(w), y)]
    sub = dict(zip(z_names(n), zc))

    def pull(p: MultiPoly) -> MultiPoly:
        return _as_poly(cv, p.substitute(sub)) if p.free_vars() else _as_poly(cv, p.constant_value())

    def e_w(p: MultiPoly) -> MultiPoly:
        out = MultiPoly(cv)
        for j, v in zip(range(2, n + 1), w_names(n)):
            out = out + MultiPoly.var(cv, v) * p.diff(v) * j
        return out

    tau, t, s_or = d_tau(n), d_t(n), d_s(n, eps)
    tau_ok = t_ok = s_ok = True
    for k, zk in enumerate(zc, 1):
        name = f"z{k}"
        dy = zk.diff("y")
        tau_ok &= pull(tau.images[name]) == dy * eps
        t_ok &= pull(t.images[name]) == y * dy * eps
        s_ok &= pull(s_or.images[name]) == e_w(zk)
    return {"n": n, "eps": eps, "d_tau": tau_ok, "d_t": t_ok, "d_s_oriented": s_ok,
            "ok": tau_ok and t_ok and s_ok}


def _chart_sign() -> int:
    cv = ("w2", "y")
    _, y = MultiPoly.gens(cv)
    z1 = chart_blc([MultiPoly.var(cv, "w2")], y)[0]
    lhs = d_tau(2).images["z1"].constant_value()
    rhs = z1.diff("y").constant_value()
    return 1 if lhs == rhs else -1


def flow_shift_check(n: int, eps: int | None = None) -> bool:
    """``exp(zeta d_tau) z = vieta(q + eps*zeta)`` with formal roots ``q`` and ``zeta``.

    Both sides are compared after substituting ``z = vieta(q)``.
    """
    from .exactalg import symmetric_expand
    eps = _chart_sign() if eps is None else eps
    qn = tuple(f"q{i}" for i in range(1, n + 1))
    ring = qn + ("zeta",)
    qs = MultiPoly.gens(ring)[:-1]
    zeta = MultiPoly.var(ring, "zeta")
    zq = symmetric_expand(list(qs))
    shifted = symmetric_expand([q + zeta * eps for q in qs])
    d = d_tau(n)
    zr = z_names(n) + ("zeta",)
    zeta_z = MultiPoly.var(zr, "zeta")
    sub = dict(zip(z_names(n), zq))
    for k, name in enumerate(z_names(n)):
        flowed = exp_flow(d, zeta_z, MultiPoly.var(zr, name))
        lhs = flowed.substitute(sub)
        if lhs != shifted[k]:
            return False
    return True


def discriminant_annihilated(n: int) -> dict[str, bool]:
    d = discriminant_poly(n)
    return {"d_tau": d_tau(n)(d).is_zero(), "d_t": d_t(n)(d).is_zero()}


def danielewski_demo(n: int = 1) -> dict:
    """The field ``2z d/dy + x^n d/dz`` on the hypersurface ``x^n y - z^2 + 1 = 0``."""
    ring = ("x", "y", "z", "u")
    x, y, z, u = MultiPoly.gens(ring)
    d = Derivation(ring, {"y": z * 2, "z": x ** n})
    p = x ** n * y - z ** 2 + 1
    alpha = flow_generators(d, u)
    alpha_p = p.substitute(alpha)
    point = {"x": 0, "y": 0, "z": 1, "u": 1}
    image = tuple(alpha[v].eval(point) for v in ring)
    expected = {"x": x, "y": y + z * u * 2 + x ** n * u ** 2, "z": z + x ** n * u, "u": u}
    return {
        "annihilates": d(p).is_zero(),
        "flow_formula": all(alpha[v] == expected[v] for v in ring),
        "preserves_hypersurface": alpha_p == p,
        "alpha_at_(0,0,1,1)": image,
        "ok": d(p).is_zero() and alpha_p == p and image == (0, 2, 1, 1),
    }
