"""Permutation and signed-permutation groups, with brute-force lemma checks.

Composition is ``(p * q)(i) = p(q(i))`` throughout: the right factor acts first.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Any, Callable, Hashable, Iterable, Sequence

SIZE_CAP = 10 ** 6
AUT_CAP = 10 ** 3


class GroupTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Perm:
    """Bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Perm":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p, k = p * self, k + 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cs = self.cycles()
        return "".join(str(c).replace(" ", "") for c in cs) if cs else "()"

    def to_json(self) -> list:
        return list(self.images)


def transposition(n: int, i: int, j: int) -> Perm:
    return Perm.from_cycles(n, (i, j))


@dataclass(frozen=True)
class SignedPerm:
    """``e_i -> signs[i] * e_perm(i)``; an element of the hyperoctahedral group."""

    perm: Perm
    signs: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != self.perm.degree or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a +-1 vector matching the degree")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(Perm.identity(n), (1,) * n)

    @classmethod
    def sign_change(cls, n: int, i: int) -> "SignedPerm":
        return cls(Perm.identity(n), tuple(-1 if k == i else 1 for k in range(1, n + 1)))

    @classmethod
    def from_perm(cls, p: Perm) -> "SignedPerm":
        return cls(p, (1,) * p.degree)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        perm = self.perm * other.perm
        signs = tuple(other.signs[i] * self.signs[other.perm.images[i] - 1]
                      for i in range(self.perm.degree))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        inv = self.perm.inverse()
        signs = tuple(self.signs[inv.images[i] - 1] for i in range(self.perm.degree))
        return SignedPerm(inv, signs)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and all(s == 1 for s in self.signs)

    def matrix(self) -> list[list[int]]:
        n = self.perm.degree
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[self.perm.images[i] - 1][i] = self.signs[i]
        return m

    def __repr__(self) -> str:
        return f"SignedPerm({list(self.perm.images)}, {list(self.signs)})"

    def to_json(self) -> dict:
        return {"perm": list(self.perm.images), "signs": list(self.signs)}


# -- finite groups ------------------------------------------------------------------

class FiniteGroup:
    """Closure of a set of generators under multiplication."""

    def __init__(self, generators: Iterable[Any], identity: Any = None, cap: int = SIZE_CAP) -> None:
        gens = list(generators)
        if identity is None:
            if not gens:
                raise ValueError("need generators or an identity")
            g0 = gens[0]
            identity = type(g0).identity(g0.perm.degree if isinstance(g0, SignedPerm) else g0.degree)
        self.generators = tuple(gens)
        self.identity = identity
        self.elements = [identity]
        self.index = {identity: 0}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x * g
                if y not in self.index:
                    if len(self.elements) >= cap:
                        raise GroupTooLarge(f"closure exceeds {cap} elements")
                    self.index[y] = len(self.elements)
                    self.elements.append(y)
                    queue.append(y)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Any) -> bool:
        return x in self.index

    def __iter__(self):
        return iter(self.elements)

    def conjugacy_classes(self) -> list[frozenset]:
        seen: set = set()
        classes = []
        for x in self.elements:
            if x in seen:
                continue
            cls = {x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for g in self.generators:
                    z = g * y * g.inverse()
                    if z not in cls:
                        cls.add(z)
                        queue.append(z)
            seen |= cls
            classes.append(frozenset(cls))
        return classes

    def center(self) -> list:
        return [x for x in self.elements if all(x * g == g * x for g in self.generators)]

    def normalizer(self, H: "FiniteGroup") -> list:
        hs = H.index
        return [g for g in self.elements
                if all(g * h * g.inverse() in hs for h in H.generators)]

    def centralizer(self, H: "FiniteGroup") -> list:
        return [g for g in self.elements if all(g * h == h * g for h in H.generators)]

    def stabilizer(self, point: int) -> list:
        return [g for g in self.elements if g(point) == point]

    def subgroup(self, elements: Iterable[Any]) -> "FiniteGroup":
        return FiniteGroup(list(elements) or [self.identity], self.identity)


def group_engine(generators: Sequence[Any], query: str, arg: Any = None) -> Any:
    G = FiniteGroup(generators)
    if query == "closure":
        return G
    if query == "conjugacy_classes":
        return G.conjugacy_classes()
    if query == "center":
        return G.center()
    if query == "normalizer":
        return G.normalizer(arg)
    if query == "centralizer":
        return G.centralizer(arg)
    if query == "stabilizer":
        return G.stabilizer(arg)
    raise ValueError(f"unknown query {query!r}")


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([], Perm.identity(1))
    return FiniteGroup([transposition(n, i, i + 1) for i in range(1, n)])


def wb_group(n: int) -> FiniteGroup:
    gens = [SignedPerm.sign_change(n, 1)] + [SignedPerm.from_perm(transposition(n, i, i + 1))
                                              for i in range(1, n)]
    return FiniteGroup(gens)


def sign_subgroup(n: int) -> FiniteGroup:
    return FiniteGroup([SignedPerm.sign_change(n, i) for i in range(1, n + 1)])


# -- automorphisms ---------------------------------------------------------------------

def _element_order(G: FiniteGroup, x: Any) -> int:
    y, k = x, 1
    while y != G.identity:
        y, k = y * x, k + 1
    return k


def generating_set(G: FiniteGroup) -> list:
    """A small generating set: a generating pair when one exists, otherwise greedy."""
    elems = sorted(G.elements, key=lambda x: -_element_order(G, x))
    n = G.order
    if n == 1:
        return []
    for i, a in enumerate(elems):
        if FiniteGroup([a], G.identity).order == n:
            return [a]
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if FiniteGroup([a, b], G.identity).order == n:
                return [a, b]
    gens: list = []
    span = FiniteGroup([G.identity], G.identity)
    for x in elems:
        if x not in span:
            gens.append(x)
            span = FiniteGroup(gens, G.identity)
            if span.order == n:
                break
    return gens


def _extend(G: FiniteGroup, gens: Sequence[Any], images: Sequence[Any]) -> tuple | None:
    """The homomorphism sending ``gens`` to ``images``, as an index tuple, or ``None``."""
    phi: dict = {G.identity: G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for g, fg in zip(gens, images):
            y = x * g
            fy = fx * fg
            if y in phi:
                if phi[y] != fy:
                    return None
            else:
                phi[y] = fy
                queue.append(y)
    if len(phi) != G.order or len(set(phi.values())) != G.order:
        return None
    return tuple(G.index[phi[x]] for x in G.elements)


def automorphism_search(G: FiniteGroup, cap: int = AUT_CAP) -> dict:
    """All automorphisms of ``G`` as permutations of element indices."""
    if G.order > cap:
        raise GroupTooLarge(f"automorphism search limited to order {cap}")
    gens = generating_set(G)
    orders = [_element_order(G, g) for g in gens]
    by_order: dict[int, list] = {}
    for x in G.elements:
        by_order.setdefault(_element_order(G, x), []).append(x)
    auts: list[tuple] = []

    def rec(i: int, chosen: list) -> None:
        if i == len(gens):
            phi = _extend(G, gens, chosen)
            if phi is not None:
                auts.append(phi)
            return
        for cand in by_order.get(orders[i], []):
            rec(i + 1, chosen + [cand])

    rec(0, [])
    inner = set()
    for g in G.elements:
        ginv = g.inverse()
        inner.add(tuple(G.index[g * x * ginv] for x in G.elements))
    return {"generators": gens, "aut": auts, "inn": sorted(inner),
            "aut_order": len(auts), "inn_order": len(inner),
            "out_order": len(auts) // len(inner) if inner else 0}


def is_automorphism(G: FiniteGroup, phi: Sequence[int]) -> bool:
    """Bijective and multiplicative on the full multiplication table."""
    if sorted(phi) != list(range(G.order)):
        return False
    el = G.elements
    for i, x in enumerate(el):
        for j, y in enumerate(el):
            if phi[G.index[x * y]] != G.index[el[phi[i]] * el[phi[j]]]:
                return False
    return True


def map_from_dict(G: FiniteGroup, mapping: dict) -> tuple:
    return tuple(G.index[mapping[x]] for x in G.elements)


# -- WB_2 named elements ------------------------------------------------------------------

def wb2_named() -> dict[str, SignedPerm]:
    e1 = SignedPerm.sign_change(2, 1)
    e2 = SignedPerm.sign_change(2, 2)
    sigma = SignedPerm.from_perm(transposition(2, 1, 2))
    w0 = e1 * e2
    return {"e": SignedPerm.identity(2), "eps1": e1, "eps2": e2, "w0": w0, "sigma": sigma,
            "w0*sigma": w0 * sigma, "eps1*sigma": e1 * sigma, "eps2*sigma": e2 * sigma}


def wb2_expected_classes() -> list[frozenset]:
    x = wb2_named()
    return [frozenset({x["e"]}), frozenset({x["w0"]}), frozenset({x["eps1*sigma"], x["eps2*sigma"]}),
            frozenset({x["eps1"], x["eps2"]}), frozenset({x["sigma"], x["w0*sigma"]})]


def graph_involution(G: FiniteGroup) -> tuple:
    x = wb2_named()
    pairs = [("e", "e"), ("w0", "w0"), ("eps1", "sigma"), ("eps2", "w0*sigma"),
             ("eps1*sigma", "eps2*sigma")]
    m = {}
    for a, b in pairs:
        m[x[a]] = x[b]
        m[x[b]] = x[a]
    return map_from_dict(G, m)


def wb_family(n: int, check: str) -> dict:
    if n not in (2, 3):
        raise ValueError("wb_family supports n in {2, 3}")
    G = wb_group(n)
    E = sign_subgroup(n)
    e_idx = {G.index[x] for x in E.elements}
    normal = len(G.normalizer(E)) == G.order
    res = automorphism_search(G)
    stabilizing = [phi for phi in res["aut"] if {phi[i] for i in e_idx} == e_idx]
    report = {"n": n, "order": G.order, "E_order": E.order, "E_normal": normal,
              "aut_order": res["aut_order"], "stabilizing": len(stabilizing)}
    if check == "E_characteristic":
        report["ok"] = normal and len(stabilizing) == res["aut_order"]
    elif check == "E2_not_characteristic":
        moving = [phi for phi in res["aut"] if {phi[i] for i in e_idx} != e_idx]
        report["moving"] = len(moving)
        if n == 2:
            gi = graph_involution(G)
            report["graph_involution_is_aut"] = is_automorphism(G, gi)
            report["graph_involution_moves_E"] = {gi[i] for i in e_idx} != e_idx
            report["ok"] = bool(moving) and report["graph_involution_is_aut"] \
                and report["graph_involution_moves_E"]
        else:
            report["ok"] = bool(moving)
    else:
        raise ValueError(f"unknown check {check!r}")
    return report


# -- normalizers in S(n+2) ----------------------------------------------------------------

def _fixing_group(m: int, fixed: set[int]) -> FiniteGroup:
    free = [i for i in range(1, m + 1) if i not in fixed]
    gens = [transposition(m, a, b) for a, b in zip(free, free[1:])]
    return FiniteGroup(gens, Perm.identity(m))


def lemma_verifiers(n: int, which: str) -> dict:
    if not 3 <= n <= 5:
        raise ValueError("lemma checks support 3 <= n <= 5")
    m = n + 2
    S = symmetric_group(m)
    if which == "N2":
        H = _fixing_group(m, {n, n + 2})
        N = S.normalizer(H)
        swap = transposition(m, n, n + 2)
        expected = set(H.elements) | {h * swap for h in H.elements}
        ok = set(N) == expected and len(N) == 2 * factorial(n)
        return {"n": n, "H_order": H.order, "normalizer_order": len(N),
                "expected_order": 2 * factorial(n), "equals_H_times_swap": set(N) == expected, "ok": ok}
    if which == "N2bis":
        H = _fixing_group(m, {n + 2})
        N = S.normalizer(H)
        ok = set(N) == set(H.elements) and len(N) == factorial(n + 1)
        return {"n": n, "H_order": H.order, "normalizer_order": len(N),
                "expected_order": factorial(n + 1), "self_normalizing": set(N) == set(H.elements),
                "ok": ok}
    raise ValueError(f"unknown lemma {which!r}")


# -- S(4) image of braid words -----------------------------------------------------------------

def braid_image(word: Sequence[int], n: int = 4) -> Perm:
    """Image of a braid word (``+i`` for sigma_i, ``-i`` for its inverse) in S(n)."""
    p = Perm.identity(n)
    for letter in word:
        p = p * transposition(n, abs(letter), abs(letter) + 1)
    return p


def klein_example() -> dict:
    s = braid_image([3, -1])
    t = braid_image([2, 3, -1, -2])
    u = braid_image([2, -1])
    v = braid_image([1, 2, -1, -1])
    K = FiniteGroup([s, t], Perm.identity(4))
    klein = {Perm.identity(4), Perm.from_cycles(4, (1, 2), (3, 4)),
             Perm.from_cycles(4, (1, 3), (2, 4)), Perm.from_cycles(4, (1, 4), (2, 3))}
    st, uv = s * t, u * v
    report = {
        "s": repr(s), "t": repr(t), "u": repr(u), "v": repr(v), "st": repr(st), "uv": repr(uv),
        "s_is_(12)(34)": s == Perm.from_cycles(4, (1, 2), (3, 4)),
        "K_order": K.order,
        "K_is_klein": set(K.elements) == klein,
        "u_v_inverse_3_cycles": u.order() == 3 and v.order() == 3 and u * v == Perm.identity(4),
        "uv_trivial": uv.is_identity(),
        "st_nontrivial_klein": not st.is_identity() and st in klein,
    }
    report["ok"] = all(report[k] for k in ("s_is_(12)(34)", "K_is_klein", "u_v_inverse_3_cycles",
                                          "uv_trivial", "st_nontrivial_klein")) and K.order == 4
    return report
