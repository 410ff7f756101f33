"""Configurations of the complex line and the charts between their spaces.

A configuration is a finite multiset (or ordered tuple) of points of C.  Its
Vieta image is the coefficient vector ``z`` of the monic polynomial with those
roots, ``z_i = (-1)^i sigma_i``.  The balanced chart splits ``z`` into the
barycenter coordinate ``y`` and the coefficients ``w = (w_2, ..., w_n)`` of the
recentred polynomial.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np

from .exactalg import (QuadExt, decode, discriminant_poly, encode, is_exact, symmetric_expand)

FLOAT_TOL = 1e-9

SPACES = ("Cn", "Sigma", "SC", "Cn_blc", "Sigma_blc", "SC_blc", "Cn_cstar")


class DomainError(ValueError):
    """An input lies outside the domain of the requested map."""


class RootsNotConverged(ArithmeticError):
    pass


def _sort_key(x: Any) -> tuple:
    if isinstance(x, QuadExt):
        return (x.a, x.b)
    return (Fraction(x), Fraction(0))


@dataclass(frozen=True)
class Configuration:
    """Points of C, either as a multiset (default) or as an ordered tuple."""

    points: tuple
    ordered: bool = False

    def __init__(self, points: Iterable[Any], ordered: bool = False) -> None:
        pts = tuple(Fraction(p) if isinstance(p, int) and not isinstance(p, bool) else p
                    for p in points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "ordered", ordered)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def exact(self) -> bool:
        return all(is_exact(p) for p in self.points)

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def map(self, f) -> "Configuration":
        return Configuration([f(p) for p in self.points], self.ordered)

    def canonical(self) -> tuple:
        if self.ordered:
            return self.points
        return tuple(sorted(self.points, key=_sort_key))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        if self.exact and other.exact:
            return self.n == other.n and self.canonical() == other.canonical()
        return self.isclose(other, FLOAT_TOL)

    def __hash__(self) -> int:
        return hash((self.canonical(), self.ordered)) if self.exact else hash(self.n)

    def isclose(self, other: "Configuration", tol: float = FLOAT_TOL) -> bool:
        """Tolerance comparison, relative for points of modulus above 1.

        Unordered configurations use greedy nearest matching.
        """
        if self.n != other.n:
            return False
        a = [complex(p) for p in self.points]
        b = [complex(p) for p in other.points]

        def near(x: complex, y: complex) -> bool:
            return abs(x - y) <= tol * max(1.0, abs(x), abs(y))

        if self.ordered or other.ordered:
            return all(near(x, y) for x, y in zip(a, b))
        pool = list(b)
        for x in a:
            j = min(range(len(pool)), key=lambda i: abs(pool[i] - x))
            if not near(pool[j], x):
                return False
            pool.pop(j)
        return True

    def to_json(self) -> dict:
        return {"mode": self.mode, "points": [encode(p) for p in self.points]}

    @classmethod
    def from_json(cls, obj: Any, ordered: bool = False) -> "Configuration":
        if isinstance(obj, dict):
            if "points" not in obj:
                raise ValueError("configuration JSON needs a 'points' field")
            pts = [decode(p) for p in obj["points"]]
            if obj.get("mode") == "float":
                pts = [complex(p) for p in pts]
            return cls(pts, ordered)
        return cls([decode(p) for p in obj], ordered)


def as_config(Q: Any, ordered: bool = False) -> Configuration:
    return Q if isinstance(Q, Configuration) else Configuration(Q, ordered)


# -- Vieta correspondence ------------------------------------------------------

def vieta_map(Q: Any) -> tuple:
    """Coefficients ``(z_1, ..., z_n)`` of ``prod (lam - q)``."""
    return symmetric_expand(list(as_config(Q).points))


def _horner(coeffs: Sequence[complex], x: complex) -> tuple[complex, complex]:
    p, dp = 0j, 0j
    for c in coeffs:
        dp = dp * x + p
        p = p * x + c
    return p, dp


def roots_numeric(z: Sequence[Any], tol: float = 1e-12, max_iter: int = 500) -> Configuration:
    """All roots of ``lam^n + z_1 lam^(n-1) + ... + z_n`` by Aberth-Ehrlich iteration.

    Falls back to companion-matrix eigenvalues when the iteration stalls (for
    instance at multiple roots), then polishes with Newton steps that are only
    kept when they reduce the residual.
    """
    coeffs = [1 + 0j] + [complex(c) for c in z]
    n = len(coeffs) - 1
    if n == 0:
        return Configuration([])
    radius = 1 + max(abs(c) for c in coeffs[1:])
    xs = [radius * cmath.exp(1j * (2 * cmath.pi * k / n + 0.4)) for k in range(n)]
    converged = False
    for _ in range(max_iter):
        biggest = 0.0
        for k in range(n):
            p, dp = _horner(coeffs, xs[k])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else complex(1e300)
            s = sum(1 / (xs[k] - xs[j]) for j in range(n) if j != k and xs[k] != xs[j])
            step = ratio / (1 - ratio * s)
            xs[k] -= step
            biggest = max(biggest, abs(step) / (1 + abs(xs[k])))
        if biggest < 1e-15:
            converged = True
            break
    if not converged:
        xs = [complex(r) for r in np.roots(np.array(coeffs))]
    polished = []
    for x in xs:
        best, res = x, abs(_horner(coeffs, x)[0])
        for _ in range(5):
            p, dp = _horner(coeffs, best)
            if dp == 0:
                break
            cand = best - p / dp
            cres = abs(_horner(coeffs, cand)[0])
            if cres >= res:
                break
            best, res = cand, cres
        polished.append(best)
    scale = max(1.0, max(abs(c) for c in coeffs))
    worst = max(abs(_horner(coeffs, x)[0]) for x in polished)
    if worst > max(tol, 1e-9) * scale * (1 + max(abs(x) for x in polished)) ** n:
        raise RootsNotConverged(f"root finder residual {worst:.3e} above tolerance")
    return Configuration(polished)


def disc_config(Q: Any) -> Any:
    """``prod_{i<j} (q_i - q_j)^2``; zero exactly when a point repeats."""
    pts = as_config(Q).points
    acc: Any = Fraction(1)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            acc = acc * (pts[i] - pts[j]) ** 2
    return acc


def disc_coeffs(z: Sequence[Any]) -> Any:
    n = len(z)
    if n < 2:
        return Fraction(1)
    return discriminant_poly(n).eval(list(z))


def barycenter(Q: Any) -> Any:
    pts = as_config(Q).points
    return sum(pts, Fraction(0)) / len(pts)


def barycenter_project(Q: Any) -> tuple[Any, Configuration]:
    Q = as_config(Q)
    bc = barycenter(Q)
    return bc, Q.map(lambda q: q - bc)


# -- balanced chart --------------------------------------------------------------

def taylor_shift(coeffs: Sequence[Any], c: Any) -> list:
    """Coefficients (highest first) of ``p(lam + c)`` given those of ``p``."""
    a = list(coeffs)
    n = len(a) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            a[j] = a[j] + c * a[j - 1]
    return a


def chart_blc(w: Sequence[Any], y: Any) -> tuple:
    """``z`` from balanced coefficients ``w = (w_2..w_n)`` and barycenter ``y``.

    Works for scalar or polynomial entries.
    """
    blc = [Fraction(1), Fraction(0)] + list(w)
    return tuple(taylor_shift(blc, -y)[1:])


def chart_blc_inv(z: Sequence[Any]) -> tuple[tuple, Any]:
    n = len(z)
    y = -z[0] / n
    shifted = taylor_shift([Fraction(1)] + list(z), y)
    return tuple(shifted[2:]), y


# -- membership --------------------------------------------------------------

def membership(obj: Any, space: str, tol: float = FLOAT_TOL) -> bool:
    """Membership of a configuration or coefficient vector in a named space.

    Spaces: ``Cn`` (d != 0), ``Sigma`` (d = 0), ``SC`` (d = 1), their ``_blc``
    variants (additionally z_1 = 0) and ``Cn_cstar`` (d != 0 and z_n != 0).
    """
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {SPACES}")
    if isinstance(obj, Configuration):
        z = vieta_map(obj)
        d = disc_config(obj)
    else:
        z = tuple(obj)
        d = disc_coeffs(z)
    exact = all(is_exact(x) for x in z) and is_exact(d)

    def zero(x: Any) -> bool:
        return x == 0 if exact else abs(complex(x)) <= tol

    base = space.split("_")[0]
    if base == "Cn":
        ok = not zero(d)
    elif base == "Sigma":
        ok = zero(d)
    else:
        ok = zero(d - 1)
    if space.endswith("_blc"):
        ok = ok and zero(z[0])
    if space == "Cn_cstar":
        ok = ok and not zero(z[-1])
    return ok


def _require_cstar_distinct(pts: Sequence[Any], what: str) -> None:
    for i, p in enumerate(pts):
        if p == 0 or (not is_exact(p) and abs(complex(p)) <= FLOAT_TOL):
            raise DomainError(f"{what}: point {i + 1} is zero")
    if disc_config(pts) == 0:
        raise DomainError(f"{what}: points are not distinct")


def h_n(Q: Any) -> Any:
    """``D_n(Q) / (q_1 ... q_n)^(n-1)`` on configurations of nonzero distinct points."""
    pts = as_config(Q).points
    _require_cstar_distinct(pts, "h_n")
    prod: Any = Fraction(1)
    for p in pts:
        prod = prod * p
    return disc_config(pts) / prod ** (len(pts) - 1)


# -- the regular part of the balanced discriminant --------------------------------

def sigma_blc_phi(Q: Any, tol: float = FLOAT_TOL) -> Configuration:
    """Send ``{q_1..q_{n-2}, u, u}`` (balanced) to ``{q_i - u}``."""
    pts = list(as_config(Q).points)
    n = len(pts)
    if n < 3:
        raise DomainError("phi needs n >= 3")
    exact = all(is_exact(p) for p in pts)

    def same(a: Any, b: Any) -> bool:
        return a == b if exact else abs(complex(a) - complex(b)) <= tol

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if same(pts[i], pts[j])]
    if len(pairs) != 1:
        raise DomainError("phi needs exactly one double point")
    i, j = pairs[0]
    u = pts[i] if exact else (pts[i] + pts[j]) / 2
    rest = [p for k, p in enumerate(pts) if k not in (i, j)]
    if not same(sum(rest, Fraction(0)) + 2 * u, 0):
        raise DomainError("phi needs a balanced configuration")
    return Configuration([q - u for q in rest])


def sigma_blc_psi(Qp: Any) -> Configuration:
    """Inverse of :func:`sigma_blc_phi`: ``{q'_i + v, v, v}`` with ``v = -(1/n) sum q'``."""
    pts = list(as_config(Qp).points)
    _require_cstar_distinct(pts, "psi")
    n = len(pts) + 2
    v = -sum(pts, Fraction(0)) / n
    return Configuration([q + v for q in pts] + [v, v])


# -- charts on ordered configurations of C* ---------------------------------------

def eta(Q: Any) -> tuple[tuple, Any]:
    pts = as_config(Q, ordered=True).points
    _require_cstar_distinct(pts, "eta")
    last = pts[-1]
    return tuple(q / last for q in pts[:-1]), last


def eta_inv(Qp: Sequence[Any], y: Any) -> Configuration:
    return Configuration([y * q for q in Qp] + [y], ordered=True)


def phi_tilde(Q: Any) -> Configuration:
    pts = as_config(Q, ordered=True).points
    _require_cstar_distinct(pts, "phi_tilde")
    c = sum(pts, Fraction(0)) / (len(pts) + 1)
    return Configuration([q - c for q in pts] + [-c], ordered=True)


def phi_tilde_inv(Q: Any) -> Configuration:
    pts = as_config(Q, ordered=True).points
    if len(pts) < 2:
        raise DomainError("phi_tilde_inv needs at least two points")
    if disc_config(pts) == 0:
        raise DomainError("phi_tilde_inv: points are not distinct")
    last = pts[-1]
    return Configuration([q - last for q in pts[:-1]], ordered=True)


def cstar_charts(Q: Any, which: str) -> Any:
    if which == "eta":
        return eta(Q)
    if which == "eta_inv":
        Qp, y = Q
        return eta_inv(Qp, y)
    if which == "phi_tilde":
        return phi_tilde(Q)
    if which == "phi_tilde_inv":
        return phi_tilde_inv(Q)
    raise ValueError(f"unknown chart {which!r}")


# -- involutions ------------------------------------------------------------------

INVOLUTIONS = ("iota", "tau_inv", "upsilon", "sigma_prime", "rho_invol", "U")


def involution_suite(Q: Any, which: str) -> Any:
    """The involutions of ordered configurations of C*, and ``U`` on (z_1, z_2)."""
    if which == "U":
        z1, z2 = Q
        if z2 == 0 or z1 * z1 - 4 * z2 == 0:
            raise DomainError("U acts on pairs with z_2 != 0 and z_1^2 - 4 z_2 != 0")
        return (z1, z1 * z1 / 4 - z2)
    pts = list(as_config(Q, ordered=True).points)
    _require_cstar_distinct(pts, which)
    n = len(pts)
    if which == "iota":
        out = [1 / q for q in pts]
    elif which == "tau_inv":
        out = [q / pts[-1] ** 2 for q in pts]
    elif which == "upsilon":
        out = [pts[-1] ** 2 / q for q in pts]
    elif which == "sigma_prime":
        if n < 2:
            raise DomainError("sigma_prime needs n >= 2")
        c = pts[-1] / pts[-2]
        swapped = pts[:-2] + [pts[-1], pts[-2]]
        out = [c * q for q in swapped]
    elif which == "rho_invol":
        out = [q - pts[-1] for q in pts[:-1]] + [-pts[-1]]
    else:
        raise ValueError(f"unknown involution {which!r}")
    return Configuration(out, ordered=True)


# -- Moebius model of S(n+2) ----------------------------------------------------------

INF = (Fraction(1), Fraction(0))


def _bracket(p: tuple, q: tuple) -> Any:
    return p[0] * q[1] - q[0] * p[1]


def mobius_action(sigma: Any, Qp: Any) -> Configuration:
    """Action of a permutation of ``n + 2`` letters on ordered points of C minus {0, 1}.

    ``Qp`` is extended to ``(q'_1, ..., q'_{n-1}, 0, 1, oo)``; the entry in slot
    ``i`` moves to slot ``sigma(i)`` and the result is renormalized by the
    Moebius map sending the last three slots to ``0, 1, oo``.
    """
    images = list(getattr(sigma, "images", sigma))
    pts = list(as_config(Qp, ordered=True).points)
    m = len(pts) + 3
    if sorted(images) != list(range(1, m + 1)):
        raise ValueError(f"expected a permutation of 1..{m}")
    for p in pts:
        if p == 0 or p == 1 or (not is_exact(p) and min(abs(complex(p)), abs(complex(p) - 1)) <= FLOAT_TOL):
            raise DomainError("points must avoid 0 and 1")
    if disc_config(pts) == 0:
        raise DomainError("points must be distinct")
    one = Fraction(1)
    slots = [(p, one) for p in pts] + [(Fraction(0), one), (one, one), INF]
    moved: list = [None] * m
    for i, img in enumerate(images):
        moved[img - 1] = slots[i]
    a, b, c = moved[-3], moved[-2], moved[-1]
    bc_, ba = _bracket(b, c), _bracket(b, a)
    if bc_ == 0 or ba == 0:
        raise DomainError("degenerate cross-ratio")
    out = []
    for z in moved[:-3]:
        x = _bracket(z, a) * bc_
        y = _bracket(z, c) * ba
        if y == 0:
            raise DomainError("degenerate cross-ratio")
        out.append(x / y)
    return Configuration(out, ordered=True)
