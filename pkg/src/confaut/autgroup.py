"""Triangular automorphisms of configuration spaces and their group law.

An automorphism is written ``F(Q) = s*Q0 + a(Q0)*bc(Q) + b(Q0)`` where
``Q0 = Q - bc(Q)`` is the balanced part of ``Q``, ``a = t*D^k`` and ``b`` is a
:class:`BalancedFunction`.  Composition is carried out on the parameters by
weighted rescaling of ``b``; every law is also checkable pointwise.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Iterable, Mapping, Sequence

from .configspace import (Configuration, DomainError, as_config, barycenter_project, disc_config,
                          h_n, membership, vieta_map, chart_blc, chart_blc_inv)
from .exactalg import MultiPoly, close, decode, discriminant_poly, encode, is_exact, z_names

ORDER_BOUND = 24
SPACE_TAGS = ("Cn", "SC", "Sigma", "pair")


class AutConstraintError(ValueError):
    """Parameters violate the constraints of the declared space."""


def w_names(n: int) -> tuple[str, ...]:
    return tuple(f"w{j}" for j in range(2, n + 1))


def power_sums_w(n: int, upto: int) -> list[MultiPoly]:
    """Power sums ``p_0..p_upto`` of a balanced configuration as polynomials in w."""
    names = w_names(n)
    c = [MultiPoly.const(names, 1), MultiPoly.const(names, 0)] + list(MultiPoly.gens(names))
    p = [MultiPoly.const(names, n)]
    for k in range(1, upto + 1):
        acc = MultiPoly(names)
        for i in range(1, min(k, n + 1)):
            acc = acc + c[i] * p[k - i]
        if k <= n:
            acc = acc + c[k] * k
        p.append(-acc)
    return p


def s_function_w(n: int, two_r: int) -> MultiPoly:
    """``S_2r = sum_{q', q''} (q' - q'')^(2r)`` on balanced configurations, in w."""
    if two_r < 0 or two_r % 2:
        raise ValueError("S needs a non-negative even exponent")
    p = power_sums_w(n, two_r)
    total = MultiPoly(w_names(n))
    for l in range(two_r + 1):
        total = total + p[l] * p[two_r - l] * (comb(two_r, l) * (-1) ** l)
    return total


class BalancedFunction:
    """A finite sum of terms ``c * w^e * D^m`` on balanced configurations.

    ``w = (w_2, ..., w_n)`` are the coefficients of the balanced polynomial and
    ``D`` is the discriminant.  ``S_2r`` terms are expanded into w-monomials on
    construction.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, Any] | None = None) -> None:
        self.n = n
        clean = {}
        for (e, m), c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n - 1:
                raise ValueError(f"w-exponent {e} needs length {n - 1}")
            if any(x < 0 for x in e):
                raise ValueError("w-exponents must be non-negative")
            if c != 0:
                clean[(e, int(m))] = clean.get((e, int(m)), 0) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "BalancedFunction":
        return cls(n)

    @classmethod
    def const(cls, n: int, c: Any) -> "BalancedFunction":
        return cls(n, {((0,) * (n - 1), 0): c})

    @classmethod
    def monomial(cls, n: int, w_exp: Sequence[int], c: Any = Fraction(1), m: int = 0) -> "BalancedFunction":
        return cls(n, {(tuple(w_exp), m): c})

    @classmethod
    def from_wpoly(cls, p: MultiPoly, n: int, m: int = 0) -> "BalancedFunction":
        p = p.with_vars(w_names(n))
        return cls(n, {(e, m): c for e, c in p.terms.items()})

    @classmethod
    def S(cls, n: int, two_r: int, c: Any = Fraction(1), m: int = 0) -> "BalancedFunction":
        return cls.from_wpoly(s_function_w(n, two_r), n, m) * c

    # -- algebra ---------------------------------------------------------------
    def _check(self, other: "BalancedFunction") -> None:
        if not isinstance(other, BalancedFunction) or other.n != self.n:
            raise ValueError("balanced functions over different n")

    def __add__(self, other: "BalancedFunction") -> "BalancedFunction":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BalancedFunction(self.n, out)

    def __neg__(self) -> "BalancedFunction":
        return self * -1

    def __sub__(self, other: "BalancedFunction") -> "BalancedFunction":
        return self + (-other)

    def __mul__(self, c: Any) -> "BalancedFunction":
        return BalancedFunction(self.n, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def times_D(self, k: int) -> "BalancedFunction":
        return BalancedFunction(self.n, {(e, m + k): v for (e, m), v in self.terms.items()})

    def weight(self, key: tuple) -> int:
        e, m = key
        return sum(j * x for j, x in zip(range(2, self.n + 1), e)) + m * self.n * (self.n - 1)

    def scaled(self, s: Any) -> "BalancedFunction":
        """The function ``Q0 -> b(s*Q0)``."""
        if isinstance(s, int):
            s = Fraction(s)
        return BalancedFunction(self.n, {k: v * s ** self.weight(k) for k, v in self.terms.items()})

    def fold_D(self) -> "BalancedFunction":
        """Set ``D = 1`` (restriction to the special configuration space)."""
        return BalancedFunction(self.n, {(e, 0): v for (e, m), v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_m(self) -> int:
        return min((m for _, m in self.terms), default=0)

    @property
    def max_m(self) -> int:
        return max((m for _, m in self.terms), default=0)

    def is_scale_invariant(self) -> bool:
        return all(self.weight(k) == 0 for k in self.terms)

    def exact(self) -> bool:
        return all(is_exact(v) for v in self.terms.values())

    # -- evaluation --------------------------------------------------------------
    def __call__(self, Q0: Any) -> Any:
        Q0 = as_config(Q0)
        if Q0.n != self.n:
            raise ValueError(f"expected {self.n} points, got {Q0.n}")
        if not self.terms:
            return Fraction(0)
        w = vieta_map(Q0)[1:]
        D = disc_config(Q0) if any(m for _, m in self.terms) else Fraction(1)
        if self.min_m < 0 and (D == 0 or (not is_exact(D) and abs(complex(D)) == 0)):
            raise DomainError("balanced function has a pole at D = 0")
        total: Any = Fraction(0)
        for (e, m), c in self.terms.items():
            t = c
            for wj, x in zip(w, e):
                if x:
                    t = t * wj ** x
            if m:
                t = t * D ** m
            total = total + t
        return total

    def to_multipoly(self, names: Sequence[str] | None = None) -> MultiPoly:
        """As a polynomial in ``w`` with ``D`` expanded; needs all ``m >= 0``."""
        if self.min_m < 0:
            raise DomainError("negative powers of D are not polynomial")
        wn = w_names(self.n)
        out = MultiPoly(wn)
        dpoly = None
        for (e, m), c in self.terms.items():
            t = MultiPoly(wn, {e: c})
            if m:
                if dpoly is None:
                    z = z_names(self.n)
                    sub = {z[0]: Fraction(0)}
                    sub.update({z[j - 1]: MultiPoly.var(wn, f"w{j}") for j in range(2, self.n + 1)})
                    dpoly = discriminant_poly(self.n).substitute(sub).with_vars(wn)
                t = t * dpoly ** m
            out = out + t
        if names is not None:
            out = out.substitute({a: MultiPoly.var(names, b) for a, b in zip(wn, names)}) \
                if tuple(names) != wn else out
        return out

    # -- comparison / serialization -------------------------------------------------
    def __eq__(self, other: Any) -> bool:
        return isinstance(other, BalancedFunction) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def isclose(self, other: "BalancedFunction", tol: float = 1e-9) -> bool:
        self._check(other)
        keys = set(self.terms) | set(other.terms)
        return all(close(self.terms.get(k, 0), other.terms.get(k, 0), tol) for k in keys)

    def __repr__(self) -> str:
        parts = [f"{c}*w^{list(e)}*D^{m}" for (e, m), c in sorted(self.terms.items())]
        return f"BalancedFunction(n={self.n}, {' + '.join(parts) or '0'})"

    def to_json(self) -> list:
        return [{"c": encode(c), "w_exp": list(e), "m": m} for (e, m), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, n: int, terms: Iterable[Mapping[str, Any]]) -> "BalancedFunction":
        out = cls.zero(n)
        for t in terms:
            c = decode(t.get("c", 1))
            m = int(t.get("m", 0))
            if "S" in t:
                out = out + cls.S(n, int(t["S"]), c, m)
            elif "w_exp" in t:
                out = out + cls.monomial(n, [int(x) for x in t["w_exp"]], c, m)
            else:
                raise ValueError(f"balanced term needs 'w_exp' or 'S': {t!r}")
        return out


# -- triangular automorphisms -----------------------------------------------------

def _frac(x: Any) -> Any:
    return Fraction(x) if isinstance(x, int) else x


def _nonzero(x: Any) -> bool:
    return x != 0 if is_exact(x) else abs(complex(x)) > 0


def _is_one(x: Any, tol: float) -> bool:
    return close(x, 1, tol)


@dataclass(frozen=True, eq=False)
class TriangularAut:
    """``Q -> s*Q0 + t*D(Q0)^k*bc(Q) + b(Q0)`` on a declared space."""

    space: str
    n: int
    s: Any
    t: Any
    k: int = 0
    b: BalancedFunction = field(default=None)  # type: ignore[assignment]
    tol: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("s", "t"):
            if isinstance(getattr(self, name), int):
                object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.b is None:
            object.__setattr__(self, "b", BalancedFunction.zero(self.n))
        if self.space == "SC":
            object.__setattr__(self, "b", self.b.fold_D())
        validate(self)

    @property
    def N(self) -> int:
        return self.n * (self.n - 1)

    def a(self, Q0: Any) -> Any:
        if self.k == 0:
            return self.t
        return self.t * disc_config(Q0) ** self.k

    def __call__(self, Q: Any) -> Configuration:
        return apply_aut(self, Q)

    def __matmul__(self, other: "TriangularAut") -> "TriangularAut":
        return compose(self, other)

    def params_equal(self, other: "TriangularAut", tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return (self.space == other.space and self.n == other.n and self.k == other.k
                and close(self.s, other.s, tol) and close(self.t, other.t, tol)
                and self.b.isclose(other.b, tol))

    def is_identity(self, tol: float | None = None) -> bool:
        return self.params_equal(identity(self.space, self.n), tol)

    def to_json(self) -> dict:
        return {"space": self.space, "n": self.n, "s": encode(self.s), "t": encode(self.t),
                "k": self.k, "b": self.b.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "TriangularAut":
        n = int(obj["n"])
        return make_aut(obj.get("space", "Cn"), n, decode(obj.get("s", 1)), decode(obj.get("t", 1)),
                        int(obj.get("k", 0)), BalancedFunction.from_json(n, obj.get("b", [])))


def validate(F: TriangularAut) -> None:
    if F.space not in SPACE_TAGS:
        raise ValueError(f"unknown space {F.space!r}; expected one of {SPACE_TAGS}")
    if F.n < 2:
        raise AutConstraintError("n must be at least 2")
    if F.b.n != F.n:
        raise AutConstraintError("b is defined for a different n")
    if not _nonzero(F.s):
        raise AutConstraintError("s must be nonzero")
    if not _nonzero(F.t):
        raise AutConstraintError("t must be nonzero")
    if F.space in ("SC", "Sigma", "pair") and F.k != 0:
        raise AutConstraintError(f"{F.space} requires k = 0")
    if F.space == "SC" and not _is_one(F.s ** F.N, F.tol):
        raise AutConstraintError(f"SC requires s^(n(n-1)) = 1, i.e. s^{F.N} = 1")
    if F.space == "Sigma" and any(m != 0 for _, m in F.b.terms):
        raise AutConstraintError("Sigma requires b without powers of D (D vanishes there)")
    if F.space == "pair" and F.b.min_m < 0:
        raise AutConstraintError("pair requires b regular on C^n (no negative powers of D)")


def make_aut(space: str, n: int, s: Any, t: Any, k: int = 0,
             b: BalancedFunction | None = None, tol: float = 1e-9) -> TriangularAut:
    return TriangularAut(space, n, s, t, k, b if b is not None else BalancedFunction.zero(n), tol)


def identity(space: str, n: int) -> TriangularAut:
    return make_aut(space, n, Fraction(1), Fraction(1))


def _check_space(F: TriangularAut, Q: Configuration) -> None:
    if Q.n != F.n:
        raise DomainError(f"expected {F.n} points, got {Q.n}")
    tag = {"Cn": "Cn", "SC": "SC", "Sigma": "Sigma"}.get(F.space)
    if tag and not membership(Q, tag, F.tol):
        raise DomainError(f"configuration is not in {F.space}")


def apply_aut(F: TriangularAut, Q: Any, check: bool = True) -> Configuration:
    Q = as_config(Q)
    if check:
        _check_space(F, Q)
    bc, Q0 = barycenter_project(Q)
    shift = F.a(Q0) * bc + F.b(Q0)
    return Configuration([F.s * q + shift for q in Q0], Q.ordered)


def compose(G: TriangularAut, F: TriangularAut) -> TriangularAut:
    """``G o F`` (apply ``F`` first)."""
    if (G.space, G.n) != (F.space, F.n):
        raise ValueError(f"space mismatch: {G.space}/{G.n} vs {F.space}/{F.n}")
    s, N = F.s, F.N
    t = G.t * F.t * s ** (G.k * N)
    b = (F.b * (G.t * s ** (G.k * N))).times_D(G.k) + G.b.scaled(s)
    return TriangularAut(F.space, F.n, G.s * s, t, F.k + G.k, b, min(F.tol, G.tol))


def invert(F: TriangularAut) -> TriangularAut:
    N = F.N
    sinv = 1 / F.s if is_exact(F.s) else 1 / complex(F.s)
    t = F.s ** (F.k * N) / F.t
    b = (F.b * (-1 / F.t)).times_D(-F.k).scaled(sinv)
    return TriangularAut(F.space, F.n, sinv, t, -F.k, b, F.tol)


def commutator(G: TriangularAut, F: TriangularAut) -> TriangularAut:
    """``[G, F] = G^-1 F^-1 G F``."""
    return compose(invert(G), compose(invert(F), compose(G, F)))


def group_law(F: TriangularAut, G: TriangularAut | None, kind: str) -> TriangularAut:
    if kind == "compose":
        return compose(F, G)
    if kind == "invert":
        return invert(F)
    if kind == "commutator":
        return commutator(F, G)
    raise ValueError(f"unknown group operation {kind!r}")


# -- powers and torsion ---------------------------------------------------------------

def power(F: TriangularAut, m: int) -> TriangularAut:
    if m < 0:
        return power(invert(F), -m)
    result = identity(F.space, F.n)
    base = F
    while m:
        if m & 1:
            result = compose(base, result)
        base = compose(base, base)
        m >>= 1
    return result


def power_closed_form(F: TriangularAut, m: int, Q: Any) -> Configuration:
    """``s^m Q0 + t^m bc + sum_j t^(m-j-1) b(s^j Q0)`` for ``a = t`` constant."""
    if F.k != 0:
        raise ValueError("closed form needs k = 0")
    Q = as_config(Q)
    bc, Q0 = barycenter_project(Q)
    shift = F.t ** m * bc
    for j in range(m):
        shift = shift + F.t ** (m - j - 1) * F.b(Q0.map(lambda q: F.s ** j * q))
    return Configuration([F.s ** m * q + shift for q in Q0], Q.ordered)


def order(F: TriangularAut, bound: int = ORDER_BOUND, tol: float | None = None) -> int | None:
    """Smallest ``m <= bound`` with ``F^m = id``, or ``None`` if none is detected."""
    P = F
    for m in range(1, bound + 1):
        if P.is_identity(tol):
            return m
        P = compose(F, P)
    return None


def powers_and_torsion(F: TriangularAut, m: int, Q: Any | None = None) -> dict:
    Fm = power(F, m)
    out: dict = {"power": Fm, "order": order(F)}
    if Q is not None and F.k == 0:
        out["closed_form"] = power_closed_form(F, m, Q)
        out["iterated"] = apply_aut(Fm, Q, check=False)
        out["agree"] = out["closed_form"] == out["iterated"]
    return out


def torsion_condition(b: BalancedFunction, s: Any, t: Any, m: int) -> BalancedFunction:
    """``sum_j t^(m-j-1) b(s^j .)``; zero exactly when ``F^m = id`` for ``s^m = t^m = 1``."""
    s, t = _frac(s), _frac(t)
    total = BalancedFunction.zero(b.n)
    for j in range(m):
        total = total + b.scaled(s ** j) * t ** (m - j - 1)
    return total


def inversion_formula(b: BalancedFunction, s: Any, t: Any, m: int,
                      verbatim: bool = False) -> BalancedFunction:
    """A function ``bt`` with ``t*bt - bt(s .) = b`` for a solution ``b`` of the torsion condition.

    The default uses weights ``(m-j)/m * t^(m-j-1)`` on ``b(s^j .)``.  With
    ``verbatim=True`` the variant with ``t^(m-j)`` and ``b(s^(j-1) .)`` is
    returned instead; it satisfies ``t*bt - bt(s .) = t * b(s^-1 .)``.
    """
    s, t = _frac(s), _frac(t)
    total = BalancedFunction.zero(b.n)
    for j in range(m):
        w = Fraction(m - j, m)
        if verbatim:
            total = total + b.scaled(s ** (j - 1)) * (w * t ** (m - j))
        else:
            total = total + b.scaled(s ** j) * (w * t ** (m - j - 1))
    return total


def coboundary(bt: BalancedFunction, s: Any, t: Any) -> BalancedFunction:
    """``t*bt - bt(s .)``."""
    return bt * t - bt.scaled(s)


def semisimple_build(s: Any, t: Any, b: BalancedFunction, space: str = "Cn") -> TriangularAut:
    """``Q -> s Q0 + t bc + t b(Q0) - b(s Q0)``."""
    return make_aut(space, b.n, s, t, 0, coboundary(b, s, t))


# -- tame maps and canonical actions --------------------------------------------------

@dataclass(frozen=True)
class AffineMapOfLine:
    a: Any
    b: Any

    def __post_init__(self) -> None:
        if not _nonzero(self.a):
            raise ValueError("affine map needs a != 0")

    def __call__(self, zeta: Any) -> Any:
        return self.a * zeta + self.b

    def to_json(self) -> dict:
        return {"a": encode(self.a), "b": encode(self.b)}


def tame_affine_map(F: TriangularAut, Q: Any) -> AffineMapOfLine:
    """``T(Q): zeta -> s(zeta - bc) + a(Q0) bc + b(Q0)``, so that ``T(Q)Q = F(Q)``."""
    bc, Q0 = barycenter_project(as_config(Q))
    return AffineMapOfLine(F.s, F.a(Q0) * bc - F.s * bc + F.b(Q0))


def nu_torus(s: Any, t: Any, Q: Any) -> Configuration:
    bc, Q0 = barycenter_project(as_config(Q))
    return Configuration([s * q + t * bc for q in Q0], as_config(Q).ordered)


def shift_action(lam: Any, b: BalancedFunction, Q: Any) -> Configuration:
    Q = as_config(Q)
    _, Q0 = barycenter_project(Q)
    delta = lam * b(Q0)
    return Q.map(lambda q: q + delta)


def canonical_actions(kind: str, params: Sequence[Any], Q: Any) -> Configuration:
    if kind == "nu_torus":
        return nu_torus(params[0], params[1], Q)
    if kind == "shift":
        return shift_action(params[0], params[1], Q)
    raise ValueError(f"unknown action {kind!r}")


# -- automorphisms of configurations of C* ------------------------------------------------

@dataclass(frozen=True)
class ZindeAut:
    """``Q -> s * h_n(Q)^k * Q^eps`` on configurations of nonzero distinct points."""

    s: Any
    k: int
    eps: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if not _nonzero(self.s):
            raise ValueError("s must be nonzero")

    def __call__(self, Q: Any) -> Configuration:
        Q = as_config(Q)
        h = h_n(Q)
        factor = self.s * h ** self.k
        return Q.map(lambda q: factor * (q if self.eps == 1 else 1 / q))

    def __matmul__(self, other: "ZindeAut") -> "ZindeAut":
        s2 = other.s if self.eps == 1 else 1 / other.s
        return ZindeAut(self.s * s2, self.k + self.eps * other.k, self.eps * other.eps)

    def inverse(self) -> "ZindeAut":
        s = 1 / self.s if self.eps == 1 else self.s
        return ZindeAut(s, -self.eps * self.k, self.eps)

    def to_json(self) -> dict:
        return {"s": encode(self.s), "k": self.k, "eps": self.eps}


def zinde_group(F: ZindeAut, G: Any, kind: str) -> Any:
    if kind == "apply":
        return F(G)
    if kind == "compose":
        return F @ G
    if kind == "invert":
        return F.inverse()
    raise ValueError(f"unknown operation {kind!r}")


# -- covering of the balanced configuration space --------------------------------------

def covering_map(c: Any, m: int, Q0: Any) -> Configuration:
    Q0 = as_config(Q0)
    factor = c * disc_config(Q0) ** m
    return Q0.map(lambda q: factor * q)


def covering_preimages(c: Any, m: int, Q0: Any, tol: float = 1e-8) -> dict:
    """The ``N = m n(n-1) + 1`` preimages of ``Q0`` under ``X -> c D(X)^m X``.

    They are ``omega * Q0`` with ``omega^N c D(Q0)^m = 1``.  Raises
    :class:`DomainError` if two of them coincide, which happens exactly when a
    nontrivial N-th root of unity stabilizes ``Q0``.
    """
    Q0 = as_config(Q0).map(complex)
    n = Q0.n
    if m < 0:
        raise ValueError("m must be non-negative")
    if abs(sum(Q0.points)) > tol * max(1.0, max(abs(q) for q in Q0.points)):
        raise DomainError("covering needs a balanced configuration")
    D = complex(disc_config(Q0))
    if abs(D) <= tol:
        raise DomainError("covering needs distinct points")
    N = m * n * (n - 1) + 1
    base = cmath.exp(-cmath.log(complex(c) * D ** m) / N)
    omegas = [base * cmath.exp(2j * cmath.pi * j / N) for j in range(N)]
    pre = [Q0.map(lambda q, w=w: w * q) for w in omegas]
    for i in range(N):
        for j in range(i + 1, N):
            if pre[i].isclose(pre[j], tol):
                raise DomainError("balanced configuration has a nontrivial stabilizer")
    residuals = []
    for P in pre:
        img = covering_map(c, m, Configuration(P.points, ordered=True))
        residuals.append(max(abs(x - y) for x, y in zip(img.points, Q0.points)))
    return {"N": N, "omegas": omegas, "preimages": pre, "residuals": residuals,
            "ok": len(pre) == N and max(residuals) < tol}


# -- commutator witnesses ------------------------------------------------------------------

def commutator_witness(t: Any, n: int, samples: Sequence[Any] = (), tol: float = 1e-9) -> dict:
    """Scaling of the barycenter by ``t`` as a commutator of two triangular maps."""
    N = n * (n - 1)
    s = cmath.exp(cmath.log(complex(t)) / N)
    Ft = make_aut("Cn", n, s, s, 0)
    Ftp = make_aut("Cn", n, Fraction(1), Fraction(1), 1)
    C = commutator(Ftp, Ft)
    target = make_aut("Cn", n, Fraction(1), t, 0)
    ok = C.params_equal(target, tol)
    for Q in samples:
        Q = as_config(Q)
        bc, Q0 = barycenter_project(Q)
        want = Configuration([q + t * bc for q in Q0])
        ok = ok and apply_aut(C, Q).isclose(want, tol)
    return {"F": Ft, "F_prime": Ftp, "commutator": C, "s": s, "ok": ok}


def shift_commutator_witness(b: BalancedFunction, space: str = "Cn") -> dict:
    """The shift ``y -> y + b`` as ``[F', F'']`` with ``y -> -y - b/2`` and ``y -> y + b/2``."""
    n = b.n
    Fp = make_aut(space, n, Fraction(1), Fraction(-1), 0, b * Fraction(-1, 2))
    Fpp = make_aut(space, n, Fraction(1), Fraction(1), 0, b * Fraction(1, 2))
    C = commutator(Fp, Fpp)
    target = make_aut(space, n, Fraction(1), Fraction(1), 0, b)
    return {"F_prime": Fp, "F_second": Fpp, "commutator": C, "ok": C.params_equal(target)}


# -- automorphisms of the pair (C^n, Sigma) ----------------------------------------------------

def relative_aut(s: Any, t: Any, b: BalancedFunction | MultiPoly, n: int | None = None) -> TriangularAut:
    if isinstance(b, MultiPoly):
        if n is None:
            raise ValueError("n is needed when b is a polynomial")
        b = BalancedFunction.from_wpoly(b, n)
    if b.min_m < 0:
        raise AutConstraintError("pair requires b polynomial (no negative powers of D)")
    return make_aut("pair", b.n, s, t, 0, b)


def symbolic_image(F: TriangularAut) -> tuple:
    """``F`` in coefficient coordinates: polynomials ``z_i(F(z))`` in ``z1..zn``."""
    if F.k != 0:
        raise ValueError("symbolic image needs k = 0")
    n = F.n
    zs = MultiPoly.gens(z_names(n))
    w, y = chart_blc_inv(zs)
    wn = w_names(n)
    bpoly = F.b.to_multipoly()
    b_of_z = bpoly.substitute(dict(zip(wn, w))) if bpoly.terms else MultiPoly(z_names(n))
    new_w = [F.s ** j * wj for j, wj in zip(range(2, n + 1), w)]
    new_y = y * F.t + b_of_z
    return tuple(zi.with_vars(z_names(n)) if isinstance(zi, MultiPoly) else MultiPoly.const(z_names(n), zi)
                 for zi in chart_blc(new_w, new_y))


def relative_disc_check(F: TriangularAut) -> bool:
    """``d_n(F(z)) = s^(n(n-1)) d_n(z)`` as a polynomial identity."""
    n = F.n
    d = discriminant_poly(n)
    image = symbolic_image(F)
    lhs = d.substitute(dict(zip(z_names(n), image)))
    return lhs == d * F.s ** F.N
