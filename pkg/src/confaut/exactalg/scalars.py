"""Exact scalars: rationals, the quadratic fields Q(i) and Q(sqrt -3), complex floats.

Rationals are plain :class:`fractions.Fraction`.  Elements of Q(i) and
Q(sqrt -3) are :class:`QuadExt`; an element whose irrational part vanishes
collapses back to a ``Fraction`` so that equality and zero tests stay exact
across the tower.  Python ``complex`` plays the role of the floating scalar.
"""
from __future__ import annotations

import cmath
import re
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

FIELD_TAGS = {-1: "Q(i)", -3: "Q(sqrt-3)"}
TAG_FIELDS = {v: k for k, v in FIELD_TAGS.items()}


class FieldMismatch(TypeError):
    """Raised when elements of two different quadratic fields are combined."""


class QuadExt:
    """``a + b*delta`` with ``delta**2 == d`` and ``d`` in {-1, -3}."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Any, b: Any, d: int) -> None:
        if d not in FIELD_TAGS:
            raise ValueError(f"unsupported quadratic field delta^2 = {d}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def make(cls, a: Any, b: Any, d: int) -> Union["QuadExt", Fraction]:
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return cls(a, b, d)

    def _coerce(self, other: Any) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatch(
                    f"cannot combine {FIELD_TAGS[self.d]} with {FIELD_TAGS[other.d]}")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other: Any) -> Any:
        if isinstance(other, complex) or isinstance(other, float):
            return complex(self) + other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt.make(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self) -> "QuadExt":
        return self

    def __sub__(self, other: Any) -> Any:
        return self + (-other)

    def __rsub__(self, other: Any) -> Any:
        return (-self) + other

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, complex) or isinstance(other, float):
            return complex(self) * other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt.make(self.a * o.a + self.d * self.b * o.b,
                            self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other: Any) -> Any:
        if isinstance(other, complex) or isinstance(other, float):
            return complex(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> Any:
        if isinstance(other, complex) or isinstance(other, float):
            return other / complex(self)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> Any:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result: Any = Fraction(1)
        base: Any = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __complex__(self) -> complex:
        delta = 1j if self.d == -1 else 1j * 3 ** 0.5
        return complex(float(self.a)) + float(self.b) * delta

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        sym = "i" if self.d == -1 else "sqrt(-3)"
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*{sym}"


I = QuadExt(0, 1, -1)
SQRT_M3 = QuadExt(0, 1, -3)

Scalar = Union[Fraction, QuadExt, complex]


def is_exact(x: Any) -> bool:
    return isinstance(x, (int, Rational, QuadExt))


def to_complex(x: Any) -> complex:
    return complex(x)


def is_zero(x: Any, tol: float = 0.0) -> bool:
    if is_exact(x):
        return x == 0
    return abs(complex(x)) <= tol


def close(x: Any, y: Any, tol: float = 1e-9) -> bool:
    """Exact equality for exact inputs, absolute tolerance otherwise."""
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(complex(x) - complex(y)) <= tol


def principal_root(x: Any, k: int) -> complex:
    """Principal ``k``-th root on the principal branch of the logarithm."""
    return cmath.exp(cmath.log(complex(x)) / k)


# -- serialization -----------------------------------------------------------

_FRAC = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(rf"^\s*({_FRAC})\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*d\s*$")


def encode(x: Any) -> Any:
    """JSON encoding: "p/q", {"value": "p/q+r/s*d", "field": tag}, or [re, im]."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return str(Fraction(x))
    if isinstance(x, QuadExt):
        sign = "+" if x.b >= 0 else "-"
        return {"value": f"{x.a}{sign}{abs(x.b)}*d", "field": FIELD_TAGS[x.d]}
    if isinstance(x, (float, complex)):
        c = complex(x)
        return [c.real, c.imag]
    raise TypeError(f"not a scalar: {x!r}")


def decode(obj: Any) -> Scalar:
    """Inverse of :func:`encode`; also accepts bare JSON ints and floats."""
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        return complex(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj.strip())
        except ValueError as exc:
            raise ValueError(f"malformed rational {obj!r}") from exc
    if isinstance(obj, (list, tuple)):
        if len(obj) != 2:
            raise ValueError(f"complex scalar needs [re, im], got {obj!r}")
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, dict):
        tag = obj.get("field")
        if tag not in TAG_FIELDS:
            raise ValueError(f"unknown field tag {tag!r}")
        m = _QUAD_RE.match(str(obj.get("value", "")))
        if not m:
            raise ValueError(f"malformed quadratic scalar {obj!r}")
        b = Fraction(m.group(3))
        if m.group(2) == "-":
            b = -b
        return QuadExt.make(Fraction(m.group(1)), b, TAG_FIELDS[tag])
    raise ValueError(f"cannot decode scalar from {obj!r}")
