"""Sparse multivariate polynomials with exact (or complex) coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .scalars import encode, decode

Exps = tuple  # tuple[int, ...]


class UnknownVariable(KeyError):
    pass


def _grlex_key(e: Exps) -> tuple:
    return (sum(e), e)


class MultiPoly:
    """Polynomial over an ordered list of variable names.

    ``terms`` maps exponent tuples (aligned with ``vars``) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exps, Any] | None = None) -> None:
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean = {}
        if terms:
            nv = len(self.vars)
            for e, c in terms.items():
                if len(e) != nv:
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, vars: Sequence[str], c: Any) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(vars, v) for v in vars)

    # -- basic queries -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: str) -> int:
        i = self._index(name)
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exps, Any]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exps, Any]:
        return max(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def constant_value(self) -> Any:
        """Return the scalar value of a constant polynomial."""
        if any(any(e) for e in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def free_vars(self) -> tuple[str, ...]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(v for i, v in enumerate(self.vars) if i in used)

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    # -- variable bookkeeping ---------------------------------------------
    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over ``vars`` (must contain every variable in use)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for i, k in enumerate(e):
                if k:
                    name = self.vars[i]
                    if name not in pos:
                        raise UnknownVariable(name)
                    ne[pos[name]] = k
            out[tuple(ne)] = c
        return MultiPoly(vars, out)

    def _align(self, other: Any) -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            return self, MultiPoly.const(self.vars, other)
        if other.vars == self.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(merged), other.with_vars(merged)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: Any) -> "MultiPoly":
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e, 0) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return MultiPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "MultiPoly":
        return self + (-other)

    def __rsub__(self, other: Any) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        a, b = self._align(other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(a.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        return MultiPoly(self.vars, {e: c / other for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = MultiPoly.const(self.vars, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, MultiPoly):
            if self.vars == other.vars:
                return self.terms == other.terms
            a, b = self._align(other)
            return a.terms == b.terms
        try:
            return self.is_constant() and self.constant_value() == other
        except ValueError:
            return False

    def __hash__(self) -> int:
        if self._hash is None:
            nz = self.free_vars()
            red = self.with_vars(tuple(sorted(nz)))
            self._hash = hash((red.vars, frozenset(red.terms.items())))
        return self._hash

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` on remainder."""
        a, b = self._align(other)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(b.terms) == 1:
            (eb, cb), = b.terms.items()
            out = {}
            for e, c in a.terms.items():
                q = tuple(x - y for x, y in zip(e, eb))
                if min(q, default=0) < 0:
                    raise ArithmeticError("inexact polynomial division")
                out[q] = c / cb
            return MultiPoly(a.vars, out)
        lt_e, lt_c = b.leading_term()
        rem = dict(a.terms)
        quot: dict = {}
        while rem:
            e, c = max(rem.items(), key=lambda t: _grlex_key(t[0]))
            q = tuple(x - y for x, y in zip(e, lt_e))
            if min(q) < 0:
                raise ArithmeticError("inexact polynomial division")
            qc = c / lt_c
            quot[q] = qc
            for eb, cb in b.terms.items():
                t = tuple(x + y for x, y in zip(q, eb))
                v = rem.get(t, 0) - qc * cb
                if v == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return MultiPoly(a.vars, quot)

    # -- calculus and evaluation ------------------------------------------
    def diff(self, name: str) -> "MultiPoly":
        if name not in self.vars:
            return MultiPoly(self.vars)
        i = self._index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return MultiPoly(self.vars, out)

    def eval(self, point: Mapping[str, Any] | Sequence[Any]) -> Any:
        """Evaluate at a full point (mapping by name or sequence aligned with vars)."""
        if isinstance(point, Mapping):
            missing = [v for v in self.free_vars() if v not in point]
            if missing:
                raise UnknownVariable(missing[0])
            values = [point.get(v, 0) for v in self.vars]
        else:
            values = list(point)
            if len(values) != len(self.vars):
                raise ValueError("point dimension does not match variables")
        powers: list[dict] = [{0: Fraction(1)} for _ in values]

        def pw(i: int, k: int) -> Any:
            cache = powers[i]
            if k not in cache:
                cache[k] = values[i] ** k
            return cache[k]

        total: Any = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return total

    def substitute(self, mapping: Mapping[str, Any]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials or scalars.

        The result lives over the surviving variables followed by any new
        variables introduced by the substituted polynomials.
        """
        for name in mapping:
            self._index(name)
        keep = tuple(v for v in self.vars if v not in mapping)
        extra: list[str] = []
        for val in mapping.values():
            if isinstance(val, MultiPoly):
                extra.extend(v for v in val.vars if v not in keep and v not in extra)
        target = keep + tuple(extra)
        images = []
        for v in self.vars:
            if v in mapping:
                val = mapping[v]
                images.append(val.with_vars(target) if isinstance(val, MultiPoly)
                              else MultiPoly.const(target, val))
            else:
                images.append(MultiPoly.var(target, v))
        cache: list[dict] = [{} for _ in images]

        def pw(i: int, k: int) -> MultiPoly:
            if k not in cache[i]:
                cache[i][k] = images[i] ** k
            return cache[i][k]

        out = MultiPoly(target)
        for e, c in self.terms.items():
            t = MultiPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def map_coeffs(self, f) -> "MultiPoly":
        return MultiPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def coeff_of(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of ``name**k`` as a polynomial in the remaining variables."""
        i = self._index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                ne = list(e)
                ne[i] = 0
                out[tuple(ne)] = c
        return MultiPoly(self.vars, out)

    def is_weighted_homogeneous(self, weights: Mapping[str, int]) -> int | None:
        """Return the common weighted degree, or ``None`` if terms disagree."""
        w = [weights.get(v, 0) for v in self.vars]
        degs = {sum(a * b for a, b in zip(e, w)) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return 0 if not degs else None

    def __iter__(self) -> Iterator[tuple[Exps, Any]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    # -- display / serialization -------------------------------------------
    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"vars": list(self.vars),
                "terms": [[list(e), encode(c)] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "MultiPoly":
        vars = obj["vars"]
        return cls(vars, {tuple(e): decode(c) for e, c in obj["terms"]})


def poly_ops(p: MultiPoly, q: Any, kind: str) -> Any:
    """Dispatch helper mirroring the ring operations by name.

    ``eval`` takes ``q`` as a point, ``substitute`` as a mapping, and
    ``partial_derivative`` as a variable name.
    """
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    if kind == "eval":
        return p.eval(q)
    if kind == "substitute":
        return p.substitute(q)
    if kind == "partial_derivative":
        if q not in p.vars:
            raise UnknownVariable(q)
        return p.diff(q)
    raise ValueError(f"unknown polynomial operation {kind!r}")


def polyvars(names: Iterable[str]) -> tuple[MultiPoly, ...]:
    return MultiPoly.gens(tuple(names))
