"""Dense univariate polynomials, Sylvester resultants and discriminants."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .poly import MultiPoly


def _is_zero(x: Any) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def _div(a: Any, b: Any) -> Any:
    if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
        if not isinstance(a, MultiPoly):
            a = MultiPoly.const(b.vars, a)
        if not isinstance(b, MultiPoly):
            return a / b
        return a.divexact(b)
    return a / b


class UniPoly:
    """Polynomial in one distinguished variable, coefficients lowest degree first.

    Coefficients may be scalars or :class:`MultiPoly` (polynomials in other
    variables).  Trailing zero coefficients are stripped.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Sequence[Any], var: str = "lam") -> None:
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_roots_monic(cls, z: Sequence[Any], var: str = "lam") -> "UniPoly":
        """``lam^n + z_1 lam^(n-1) + ... + z_n``."""
        return cls(list(reversed(list(z))) + [Fraction(1)], var)

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: str) -> "UniPoly":
        rest = tuple(v for v in p.vars if v != var)
        d = p.degree(var)
        coeffs = []
        for k in range(d + 1):
            c = p.coeff_of(var, k).with_vars(rest) if rest else p.coeff_of(var, k)
            if not rest:
                c = c.constant_value()
            coeffs.append(c)
        return cls(coeffs, var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def monic(self) -> bool:
        return bool(self.coeffs) and self.lc == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x: Any) -> Any:
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, UniPoly) and self.var == other.var and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]}, var={self.var!r})"


def bareiss_det(matrix: Sequence[Sequence[Any]]) -> Any:
    """Fraction-free (Bareiss) determinant over an integral domain.

    Entries may be scalars or :class:`MultiPoly`; every division performed is
    exact.  Row swaps handle zero pivots.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev: Any = Fraction(1)
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = _div(num, prev)
            a[i][k] = a[i][k] * 0
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[Any]]:
    m, k = f.degree, g.degree
    size = m + k
    zero = f.coeffs[0] * 0
    fh = list(reversed(f.coeffs))
    gh = list(reversed(g.coeffs))
    rows = []
    for i in range(k):
        rows.append([zero] * i + fh + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gh + [zero] * (size - k - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly) -> Any:
    """Res(f, g) as the Sylvester determinant, by Bareiss elimination."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if f.var != g.var:
        raise ValueError(f"resultant variables differ: {f.var} vs {g.var}")
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant needs degree >= 1 in both arguments")
    return bareiss_det(sylvester_matrix(f, g))


def discriminant_univariate(f: UniPoly) -> Any:
    """(-1)^(n(n-1)/2) Res(f, f'), equal to prod_{i<j}(q_i - q_j)^2 over the roots."""
    if f.is_zero():
        raise ValueError("discriminant of the zero polynomial")
    if not f.monic:
        raise ValueError("discriminant_univariate expects a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(f, f.derivative())
    return r if (n * (n - 1) // 2) % 2 == 0 else -r


def symmetric_expand(roots: Sequence[Any]) -> tuple:
    """Coefficients ``z_i = (-1)^i sigma_i(roots)`` of ``prod (lam - q)``."""
    if not roots:
        raise ValueError("need at least one root")
    coeffs: list[Any] = [Fraction(1)]  # highest degree first
    for q in roots:
        nxt = coeffs + [coeffs[0] * 0]
        for i in range(1, len(nxt)):
            nxt[i] = nxt[i] - q * coeffs[i - 1]
        coeffs = nxt
    return tuple(coeffs[1:])


_DISC_CACHE: dict[int, MultiPoly] = {}


def z_names(n: int) -> tuple[str, ...]:
    return tuple(f"z{i}" for i in range(1, n + 1))


def discriminant_poly(n: int) -> MultiPoly:
    """The symbolic discriminant ``d_n`` in ``z1, ..., zn``."""
    if n not in _DISC_CACHE:
        names = z_names(n)
        zs = MultiPoly.gens(names)
        f = UniPoly.from_roots_monic(zs)
        d = discriminant_univariate(f)
        if not isinstance(d, MultiPoly):
            d = MultiPoly.const(names, d)
        _DISC_CACHE[n] = d.with_vars(names)
    return _DISC_CACHE[n]
