"""Seeded random inputs shared by the verification suites and the tests."""
from __future__ import annotations

import cmath
import random
from fractions import Fraction
from typing import Any

from .autgroup import BalancedFunction, TriangularAut, make_aut
from .configspace import Configuration, barycenter_project, disc_config
from .exactalg import I, QuadExt, SQRT_M3

OMEGA6 = (1 + SQRT_M3) / 2  # primitive sixth root of unity
OMEGA3 = (-1 + SQRT_M3) / 2


def rand_rational(rng: random.Random, num: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_gaussian(rng: random.Random, num: int = 9, den: int = 4) -> Any:
    return QuadExt.make(rand_rational(rng, num, den), rand_rational(rng, num, den), -1)


def rand_eisenstein(rng: random.Random, num: int = 6, den: int = 3) -> Any:
    return QuadExt.make(rand_rational(rng, num, den), rand_rational(rng, num, den), -3)


def rand_config(rng: random.Random, n: int, field: str = "Q(i)", distinct: bool = True,
                nonzero: bool = False) -> Configuration:
    draw = {"Q": rand_rational, "Q(i)": rand_gaussian, "Q(sqrt-3)": rand_eisenstein}[field]
    while True:
        pts = [draw(rng) for _ in range(n)]
        if nonzero and any(p == 0 for p in pts):
            continue
        if not distinct or len(set(pts)) == n:
            return Configuration(pts)


def rand_ordered_cstar(rng: random.Random, n: int, field: str = "Q(i)") -> Configuration:
    return Configuration(rand_config(rng, n, field, True, True).points, ordered=True)


def rand_sigma_config(rng: random.Random, n: int, field: str = "Q(i)") -> Configuration:
    base = rand_config(rng, n - 1, field)
    pts = list(base.points) + [base.points[rng.randrange(n - 1)]]
    rng.shuffle(pts)
    return Configuration(pts)


SC_SEED3 = (Fraction(0), Fraction(-1), OMEGA3)


def rand_sc_exact(rng: random.Random) -> Configuration:
    """An exact point of the n = 3 special configuration space over Q(sqrt -3)."""
    rot = OMEGA6 ** rng.randrange(6)
    shift = rand_eisenstein(rng)
    return Configuration([rot * q + shift for q in SC_SEED3])


def rand_sc_float(rng: random.Random, n: int) -> Configuration:
    """A random complex configuration rescaled to D = 1."""
    Q = rand_config(rng, n, "Q(i)").map(complex)
    bc, Q0 = barycenter_project(Q)
    c = cmath.exp(-cmath.log(complex(disc_config(Q0))) / (n * (n - 1)))
    return Configuration([c * q + bc for q in Q0])


def rand_balanced(rng: random.Random, n: int, terms: int = 2, max_exp: int = 2,
                  m_range: tuple[int, int] = (0, 0), field: str = "Q", with_s: bool = False) -> BalancedFunction:
    b = BalancedFunction.zero(n)
    draw = {"Q": rand_rational, "Q(i)": rand_gaussian, "Q(sqrt-3)": rand_eisenstein}[field]
    for _ in range(terms):
        e = [rng.randint(0, max_exp) if rng.random() < 0.5 else 0 for _ in range(n - 1)]
        b = b + BalancedFunction.monomial(n, e, draw(rng, 3, 2), rng.randint(*m_range))
    if with_s and rng.random() < 0.5:
        b = b + BalancedFunction.S(n, 2 * rng.randint(1, 2), draw(rng, 3, 2))
    return b


def rand_unit(rng: random.Random, field: str) -> Any:
    if field == "Q(i)":
        return I ** rng.randrange(4)
    if field == "Q(sqrt-3)":
        return OMEGA6 ** rng.randrange(6)
    return Fraction(rng.choice([1, -1]))


def rand_aut(rng: random.Random, space: str, n: int, field: str = "Q(i)") -> TriangularAut:
    """A random exact automorphism of the given space."""
    nonzero = [Fraction(x) for x in (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-3, 2))]
    if space == "Cn":
        s = rng.choice(nonzero) * rand_unit(rng, field)
        t = rng.choice(nonzero) * rand_unit(rng, field)
        return make_aut("Cn", n, s, t, rng.randint(-1, 1), rand_balanced(rng, n, m_range=(-1, 1), with_s=True))
    if space == "SC":
        N = n * (n - 1)
        while True:
            s = rand_unit(rng, field)
            if s ** N == 1:
                break
        t = rng.choice(nonzero) * rand_unit(rng, field)
        return make_aut("SC", n, s, t, 0, rand_balanced(rng, n, m_range=(-1, 1), with_s=True))
    if space in ("Sigma", "pair"):
        s = rng.choice(nonzero) * rand_unit(rng, field)
        t = rng.choice(nonzero) * rand_unit(rng, field)
        return make_aut(space, n, s, t, 0, rand_balanced(rng, n, with_s=True))
    raise ValueError(space)
