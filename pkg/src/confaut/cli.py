"""Command-line front end: JSON in, JSON out.

Exit codes: 0 success, 1 failed verification check, 2 malformed input,
3 domain precondition failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import autgroup as ag
from . import configspace as cs
from . import elliptic as el
from .exactalg import FieldMismatch, SQRT_M3, decode, encode, is_exact
from .verify import SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED, EXIT_DOMAIN = 0, 1, 2, 3


class MalformedInput(ValueError):
    pass


class Invocation:
    def __init__(self, args: argparse.Namespace, data: Any) -> None:
        self.mode = args.mode
        self.tol = args.tol
        self.n = args.n
        self.data = data

    def field(self, key: str, default: Any = ...) -> Any:
        if not isinstance(self.data, dict):
            raise MalformedInput("input must be a JSON object")
        if key not in self.data:
            if default is ...:
                raise MalformedInput(f"missing field {key!r}")
            return default
        return self.data[key]

    def scalar(self, obj: Any) -> Any:
        x = decode(obj)
        if self.mode == "float":
            return complex(x)
        if not is_exact(x):
            raise MalformedInput(f"exact mode needs exact scalars, got {obj!r}")
        return x

    def scalar_field(self, key: str, default: Any = ...) -> Any:
        return self.scalar(self.field(key, default))

    def points(self, key: str = "points", ordered: bool = False) -> cs.Configuration:
        raw = self.field(key)
        if not isinstance(raw, list):
            raise MalformedInput(f"{key!r} must be a list of scalars")
        Q = cs.Configuration([self.scalar(p) for p in raw], ordered or bool(self.field("ordered", False)))
        if self.n is not None and Q.n != self.n:
            raise MalformedInput(f"--n {self.n} does not match {Q.n} points")
        return Q

    def coeffs(self, key: str = "z") -> list:
        raw = self.field(key)
        if not isinstance(raw, list) or not raw:
            raise MalformedInput(f"{key!r} must be a non-empty list of coefficients")
        return [self.scalar(c) for c in raw]

    def aut(self, key: str = "aut") -> ag.TriangularAut:
        obj = self.field(key)
        if not isinstance(obj, dict) or "n" not in obj:
            raise MalformedInput(f"{key!r} must be an automorphism object with 'n'")
        F = ag.TriangularAut.from_json(obj)
        if self.mode == "float":
            F = ag.make_aut(F.space, F.n, complex(F.s), complex(F.t), F.k,
                            F.b * Fraction(1), self.tol)
        return F


def _config_out(Q: cs.Configuration) -> list:
    return [encode(p) for p in Q.points]


# -- compute subcommands --------------------------------------------------------------------

def cmd_discriminant(inv: Invocation) -> dict:
    if "z" in inv.data:
        return {"D": encode(cs.disc_coeffs(inv.coeffs()))}
    return {"D": encode(cs.disc_config(inv.points()))}


def cmd_vieta(inv: Invocation) -> dict:
    return {"z": [encode(z) for z in cs.vieta_map(inv.points())]}


def cmd_roots(inv: Invocation) -> dict:
    return {"points": _config_out(cs.roots_numeric(inv.coeffs(), min(inv.tol, 1e-12)))}


def cmd_apply_aut(inv: Invocation) -> dict:
    F = inv.aut()
    return {"points": _config_out(ag.apply_aut(F, inv.points()))}


def cmd_compose_aut(inv: Invocation) -> dict:
    op = inv.field("op", "compose")
    F = inv.aut("F")
    G = inv.aut("G") if op != "invert" else None
    return {"aut": ag.group_law(G if G is not None else F, F if G is not None else None, op).to_json()}


def cmd_aut_order(inv: Invocation) -> dict:
    bound = int(inv.field("bound", ag.ORDER_BOUND))
    return {"order": ag.order(inv.aut(), bound), "bound": bound}


def cmd_tame_map(inv: Invocation) -> dict:
    return ag.tame_affine_map(inv.aut(), inv.points()).to_json()


def _quartic(inv: Invocation) -> tuple:
    return tuple(inv.scalar_field(k) for k in ("z2", "z3", "z4"))


def cmd_resolvent(inv: Invocation) -> dict:
    return {"cubic": [encode(c) for c in el.cubic_resolvent(*_quartic(inv))]}


def cmd_tschirnhausen(inv: Invocation) -> dict:
    u2, u3 = el.tschirnhausen(*_quartic(inv))
    return {"u2": encode(u2), "u3": encode(u3)}


def cmd_j_invariant(inv: Invocation) -> dict:
    rep = el.j_invariant(inv.scalar_field("u2"), inv.scalar_field("u3"))
    return {"j": encode(rep["j"]), "displayed_formula": encode(rep["displayed_formula"]),
            "sign": rep["sign"]}


def cmd_mu12(inv: Invocation) -> dict:
    """``zeta = exp(2 pi i k / 12)``; exact only when ``k`` is even (order dividing 6)."""
    k = int(inv.field("k")) % 12
    kind = inv.field("kind", "quartic")
    x = inv.field("x")
    if not isinstance(x, list):
        raise MalformedInput("'x' must be a list of coordinates")
    if inv.mode == "exact":
        if k % 2:
            raise cs.DomainError("exact mode supports roots of unity of order at most 6 (even k)")
        zeta = ((1 + SQRT_M3) / 2) ** (k // 2) if k else Fraction(1)
    else:
        import cmath
        zeta = cmath.exp(2j * cmath.pi * k / 12)
    return {"x": [encode(c) for c in el.mu12_action(zeta, [inv.scalar(c) for c in x], kind, inv.tol)]}


def cmd_preimages(inv: Invocation) -> dict:
    Q0 = inv.points()
    m = int(inv.field("m", 1))
    c = inv.scalar_field("c", 1)
    if "n" in inv.data and int(inv.data["n"]) != Q0.n:
        raise MalformedInput("'n' does not match the number of points")
    rep = ag.covering_preimages(c, m, Q0, max(inv.tol, 1e-8))
    return {"N": rep["N"], "count": len(rep["preimages"]),
            "preimages": [_config_out(P) for P in rep["preimages"]],
            "max_residual": max(rep["residuals"]), "ok": rep["ok"]}


def cmd_h_n(inv: Invocation) -> dict:
    return {"h": encode(cs.h_n(inv.points()))}


def cmd_sigma_iso(inv: Invocation) -> dict:
    direction = inv.field("direction", "phi")
    if direction == "phi":
        return {"points": _config_out(cs.sigma_blc_phi(inv.points(), inv.tol))}
    if direction == "psi":
        return {"points": _config_out(cs.sigma_blc_psi(inv.points()))}
    raise MalformedInput("direction must be 'phi' or 'psi'")


def cmd_mobius(inv: Invocation) -> dict:
    sigma = inv.field("sigma")
    if not isinstance(sigma, list) or not all(isinstance(i, int) for i in sigma):
        raise MalformedInput("'sigma' must be a list of images 1..n+2")
    return {"points": _config_out(cs.mobius_action(sigma, inv.points(ordered=True)))}


COMMANDS: dict[str, Callable[[Invocation], dict]] = {
    "discriminant": cmd_discriminant,
    "vieta": cmd_vieta,
    "roots": cmd_roots,
    "apply-aut": cmd_apply_aut,
    "compose-aut": cmd_compose_aut,
    "aut-order": cmd_aut_order,
    "tame-map": cmd_tame_map,
    "resolvent": cmd_resolvent,
    "tschirnhausen": cmd_tschirnhausen,
    "j-invariant": cmd_j_invariant,
    "mu12": cmd_mu12,
    "preimages": cmd_preimages,
    "h-n": cmd_h_n,
    "sigma-iso": cmd_sigma_iso,
    "mobius": cmd_mobius,
}


# -- driver -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--in", dest="infile", default=None, help="input JSON file (default: stdin)")
    parser = argparse.ArgumentParser(prog="confaut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite_pos", nargs="?", choices=SUITE_NAMES + ("all",), metavar="SUITE")
    v.add_argument("--suite", choices=SUITE_NAMES + ("all",), default=None)
    return parser


def _emit(obj: Any, stream=None) -> None:
    print(json.dumps(obj, indent=2), file=stream or sys.stdout)


def _error(kind: str, exc: BaseException, code: int) -> int:
    _emit({"error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}})
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if args.command == "verify":
        suite = args.suite or args.suite_pos or "all"
        report = run_suite(suite, args.seed, args.tol, args.n)
        _emit(report)
        return EXIT_OK if report["ok"] else EXIT_FAILED
    try:
        text = open(args.infile).read() if args.infile else sys.stdin.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        return _error("malformed_input", exc, EXIT_MALFORMED)
    try:
        result = COMMANDS[args.command](Invocation(args, data))
    except (cs.DomainError, ag.AutConstraintError, cs.RootsNotConverged, ZeroDivisionError) as exc:
        return _error("domain_error", exc, EXIT_DOMAIN)
    except (MalformedInput, ValueError, KeyError, TypeError, FieldMismatch) as exc:
        return _error("malformed_input", exc, EXIT_MALFORMED)
    _emit(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
