"""Reduced quartics, their cubic resolvent and the elliptic fibration of the level set discr = 1.

A reduced quartic is ``X^4 + z2 X^2 + z3 X + z4``.  Its cubic resolvent is
``X^3 + v1 X^2 + v2 X + v3`` and the depressed resolvent is ``Y^3 + u2 Y + u3``.
The map ``(z2, z3, z4) -> (u2, u3)`` fibres the surface ``discr = 1`` over the
curve ``-(4 u2^3 + 27 u3^2) = 1``.
"""
from __future__ import annotations

import cmath
import random
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .configspace import DomainError
from .exactalg import (MultiPoly, QuadExt, SQRT_M3, UniPoly, close, discriminant_univariate,
                       is_exact)

QVARS = ("z2", "z3", "z4")
DELTA = SQRT_M3
A_CONST = Fraction(3, 2) * DELTA  # a^3
B_CONST = 3 * DELTA  # b^2


def _field_zero(x: Any, tol: float) -> bool:
    return x == 0 if is_exact(x) else abs(complex(x)) <= tol


# -- resolvent and Tschirnhausen ------------------------------------------------------

def cubic_resolvent(z2: Any, z3: Any, z4: Any) -> tuple:
    return (-z2, -4 * z4, 4 * z2 * z4 - z3 * z3)


def tschirnhausen(z2: Any, z3: Any, z4: Any) -> tuple:
    u2 = -z2 * z2 / 3 - 4 * z4
    u3 = Fraction(8, 3) * z2 * z4 - Fraction(2, 27) * z2 ** 3 - z3 * z3
    return (u2, u3)


def quartic_discriminant(z2: Any, z3: Any, z4: Any) -> Any:
    return discriminant_univariate(UniPoly([z4, z3, z2, Fraction(0), Fraction(1)], "X"))


def base_discriminant(u2: Any, u3: Any) -> Any:
    """Discriminant ``-4 u2^3 - 27 u3^2`` of ``Y^3 + u2 Y + u3``."""
    return -4 * u2 ** 3 - 27 * u3 * u3


def resolvent_chain_identities() -> dict:
    """``discr f = discr R3 = discr g`` in Q[z2, z3, z4], each discriminant via resultants."""
    z2, z3, z4 = MultiPoly.gens(QVARS)
    zero = MultiPoly(QVARS)
    one = MultiPoly.const(QVARS, 1)
    df = discriminant_univariate(UniPoly([z4, z3, z2, zero, one], "X"))
    v1, v2, v3 = cubic_resolvent(z2, z3, z4)
    dr = discriminant_univariate(UniPoly([v3, v2, v1, one], "X"))
    u2, u3 = tschirnhausen(z2, z3, z4)
    dg = discriminant_univariate(UniPoly([u3, u2, zero, one], "Y"))
    return {"discr_f": df, "discr_R3": dr, "discr_g": dg,
            "f=R3": df == dr, "R3=g": dr == dg, "ok": df == dr == dg}


# -- fibration and j ----------------------------------------------------------------------

def on_surface(x: Sequence[Any], tol: float = 1e-9) -> bool:
    return _field_zero(quartic_discriminant(*x) - 1, tol)


def fibration_project(x: Sequence[Any], tol: float = 1e-9) -> tuple:
    if not on_surface(x, tol):
        raise DomainError("point is not on the surface discr f = 1")
    return tschirnhausen(*x)


def j_from_invariants(p3: Any, q2: Any) -> Any:
    """``c4^3 / Delta`` for ``y^2 = x^3 + p x + q`` given ``p^3`` and ``q^2``."""
    disc = 4 * p3 + 27 * q2
    if _field_zero(disc, 0.0):
        raise DomainError("singular fibre: 4 g2^3 + 27 g3^2 = 0")
    delta_e = -16 * disc
    c4_cubed = (-48) ** 3 * p3
    return c4_cubed / delta_e


def j_invariant(u2: Any, u3: Any) -> dict:
    """j of the fibre over ``(u2, u3)``, with ``g2 = u2`` and ``g3 = -u3``.

    Also reports ``2^8 3^3 u2^3`` and the sign relating it to the oracle value on
    the base curve.
    """
    j = j_from_invariants(u2 ** 3, u3 * u3)
    displayed = 6912 * u2 ** 3
    if _field_zero(displayed, 1e-12):
        sign = None
    elif is_exact(j) and is_exact(displayed):
        sign = 1 if j == displayed else (-1 if j == -displayed else None)
    else:
        ratio = complex(j) / complex(displayed)
        sign = 1 if abs(ratio - 1) < 1e-9 else (-1 if abs(ratio + 1) < 1e-9 else None)
    return {"j": j, "displayed_formula": displayed, "sign": sign}


# -- the mu_12 action --------------------------------------------------------------------

def mu12_action(zeta: Any, x: Sequence[Any], kind: str = "quartic", tol: float = 1e-9) -> tuple:
    if not close(zeta ** 12, 1, tol):
        raise DomainError("zeta is not a 12th root of unity")
    if kind == "quartic":
        z2, z3, z4 = x
        return (zeta ** 2 * z2, zeta ** 3 * z3, zeta ** 4 * z4)
    if kind == "base":
        u2, u3 = x
        return (zeta ** 4 * u2, zeta ** 6 * u3)
    raise ValueError(f"unknown kind {kind!r}")


def mu12_symbolic_check() -> dict:
    """Weighted homogeneity of u2, u3 and the literal substitution identity in Q[z, zeta]."""
    ring = QVARS + ("zeta",)
    z2, z3, z4, zeta = MultiPoly.gens(ring)
    u2, u3 = tschirnhausen(z2, z3, z4)
    weights = {"z2": 2, "z3": 3, "z4": 4}
    su2, su3 = tschirnhausen(zeta ** 2 * z2, zeta ** 3 * z3, zeta ** 4 * z4)
    return {
        "u2_weight": u2.is_weighted_homogeneous(weights),
        "u3_weight": u3.is_weighted_homogeneous(weights),
        "u2_equivariant": su2 == zeta ** 4 * u2,
        "u3_equivariant": su3 == zeta ** 6 * u3,
        "ok": (u2.is_weighted_homogeneous(weights) == 4 and u3.is_weighted_homogeneous(weights) == 6
               and su2 == zeta ** 4 * u2 and su3 == zeta ** 6 * u3),
    }


# -- the endomorphism F_{a,b} -----------------------------------------------------------

def float_constants() -> tuple[complex, complex]:
    d = complex(DELTA)
    a = cmath.exp(cmath.log(1.5 * d) / 3)
    b = cmath.exp(cmath.log(3 * d) / 2)
    return a, b


def counterexample_endo(x: Sequence[Any], a: Any = None, b: Any = None) -> tuple:
    """``f -> X^4 + a u2 X^2 + b u3 X - (a u2)^2 / 12``."""
    if a is None or b is None:
        a, b = float_constants()
    u2, u3 = tschirnhausen(*x)
    p = a * u2
    return (p, b * u3, -p * p / 12)


def master_identity() -> dict:
    """``discr(X^4 + p X^2 + q X - p^2/12) = -(1/27)(8 p^3 + 27 q^2)^2`` in Q[p, q]."""
    ring = ("p", "q")
    p, q = MultiPoly.gens(ring)
    lhs = discriminant_univariate(UniPoly([-p * p / 12, q, p, MultiPoly(ring), MultiPoly.const(ring, 1)], "X"))
    rhs = -(p ** 3 * 8 + q ** 2 * 27) ** 2 / 27
    residual = lhs - rhs
    return {"ok": residual.is_zero(), "residual": str(residual)}


def field_identity() -> dict:
    """With ``A = (3/2) delta`` and ``B = 3 delta`` over Q(sqrt -3):
    ``-(1/27)(8 A u2^3 + 27 B u3^2)^2 = (4 u2^3 + 27 u3^2)^2``, first with ``u2, u3``
    as indeterminates and then as the Tschirnhausen polynomials, where the right
    side equals ``(discr f)^2``.
    """
    ring = ("u2", "u3")
    u2, u3 = MultiPoly.gens(ring)
    lhs = -(u2 ** 3 * (8 * A_CONST) + u3 ** 2 * (27 * B_CONST)) ** 2 / 27
    rhs = (u2 ** 3 * 4 + u3 ** 2 * 27) ** 2
    generic = (lhs - rhs).is_zero()
    z2, z3, z4 = MultiPoly.gens(QVARS)
    U2, U3 = tschirnhausen(z2, z3, z4)
    lhs_z = -(U2 ** 3 * (8 * A_CONST) + U3 ** 2 * (27 * B_CONST)) ** 2 / 27
    df = quartic_discriminant(z2, z3, z4)
    in_z = (lhs_z - df * df).is_zero()
    return {"generic": generic, "in_z": in_z, "ok": generic and in_z,
            "residual": str(lhs - rhs)}


def image_on_u2_zero() -> bool:
    """The image quartic has ``u2 = 0`` (equivalently ``12 z4 + z2^2 = 0``) for any ``p``, ``q``."""
    ring = ("p", "q")
    p, q = MultiPoly.gens(ring)
    z2, z3, z4 = p, q, -p * p / 12
    u2, _ = tschirnhausen(z2, z3, z4)
    return u2.is_zero() and (z4 * 12 + z2 * z2).is_zero()


# -- points of the surface ------------------------------------------------------------------

SEED_POINT = (Fraction(0), DELTA / 3, Fraction(1, 4))


def _fiber_third_point(P: tuple, Q: tuple, u2: Any, u3: Any) -> tuple | None:
    """Third intersection of a chord (or tangent) with the fibre curve
    ``y^2 = -(8/27) x^3 - (2/3) u2 x - u3`` where ``x = z2`` and ``y = z3``."""
    A, B = Fraction(-8, 27), -Fraction(2, 3) * u2
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2:
        if y1 != y2 or y1 == 0:
            return None
        lam = (3 * A * x1 * x1 + B) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam / A - x1 - x2
    return (x3, lam * x3 + nu)


def _size(x: Any) -> int:
    parts = (x.a, x.b) if isinstance(x, QuadExt) else (Fraction(x),)
    return sum(len(str(p.numerator)) + len(str(p.denominator)) for p in parts)


def exact_surface_points(count: int) -> list[tuple]:
    """Exact points of ``discr f = 1`` over Q(sqrt -3).

    Starting from ``(0, delta/3, 1/4)`` the chord-tangent construction on the
    fibre through it produces new points; the sixth roots of unity (which lie in
    the field) then act by weights ``(2, 3, 4)``.
    """
    u2, u3 = tschirnhausen(*SEED_POINT)
    fiber = [(SEED_POINT[0], SEED_POINT[1]), (SEED_POINT[0], -SEED_POINT[1])]
    seen = set(fiber)
    i = 0
    while len(fiber) < count // 2 + 4 and i < len(fiber):
        for j in range(i + 1):
            R = _fiber_third_point(fiber[i], fiber[j], u2, u3)
            if R is None:
                continue
            for S in (R, (R[0], -R[1])):
                if S not in seen:
                    seen.add(S)
                    fiber.append(S)
        i += 1
    fiber.sort(key=lambda P: _size(P[0]) + _size(P[1]))
    omega = (1 + DELTA) / 2  # primitive sixth root of unity
    roots = [omega ** k for k in range(6)]
    points: list[tuple] = []
    for x, y in fiber:
        z4 = -(u2 + x * x / 3) / 4
        for r in roots:
            pt = mu12_action(r, (x, y, z4))
            if pt not in points:
                points.append(pt)
            if len(points) == count:
                return points
    return points


def float_surface_points(count: int, seed: int = 0) -> list[tuple]:
    """Random complex points with ``discr f = 1``: choose z2, z3 and solve for z4."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        z3 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        # discr as a cubic in z4
        c = [256, -128 * z2 ** 2, 16 * z2 ** 4 + 144 * z2 * z3 ** 2,
             -4 * z2 ** 3 * z3 ** 2 - 27 * z3 ** 4 - 1]
        for r in np.roots(np.array(c)):
            z4 = complex(r)
            x = (z2, z3, z4)
            if abs(complex(quartic_discriminant(*x)) - 1) < 1e-10:
                out.append(x)
                break
    return out
