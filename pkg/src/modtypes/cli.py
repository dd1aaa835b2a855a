"""
Command-line interface: ``modtypes {orbit,cuspidal,hecke,examples}``.

Every command prints a JSON report (or a table with ``--format table``).
Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
or precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import charorbits as co
from . import cuspidal as cu
from .bernstein import check_bernstein_relations
from .fields import GF, QQ, GFElem, parse_field
from .hecke import HeckeAlgebra, check_associativity, check_coxeter_relations
from .heckemod import find_simple_submodules, induce_from_laurent_char, is_reducible_rank2, verify_Y1_bijection
from .reproductions import REPRODUCTIONS
from .weyl import Composition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 20240601
MAX_RANK = 5


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "status": "pass" if ok else "fail", "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "results": _jsonable(self.results),
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"command: {self.command}"]
        for k, v in _jsonable(self.inputs).items():
            lines.append(f"  input   {k:<28} {json.dumps(v)}")
        for k, v in _jsonable(self.results).items():
            lines.append(f"  result  {k:<28} {json.dumps(v)}")
        for c in self.checks:
            lines.append(f"  check   {c['name']:<28} {c['status']}  {c['detail']}".rstrip())
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, GFElem):
        return int(x)
    return x


def _seed(args) -> int:
    env = os.environ.get("HECKE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HECKE_SEED must be an integer, got {env!r}")
    return args.seed


# orbit

def cmd_orbit(args) -> Report:
    try:
        ctx = co.CharCtx(args.q, args.n)
        co.reduce_mod_ell(ctx.char(0), args.ell)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.char is None and not args.all:
        raise UsageError("give --char K or --all")
    rep = Report("orbit", {"q": args.q, "n": args.n, "ell": args.ell, "char": args.char, "all": args.all})
    chars = ctx.all_chars() if args.all else [ctx.char(args.char)]
    rows = []
    for chi in chars:
        orbit = co.frobenius_orbit(chi)
        red = co.reduce_mod_ell(chi, args.ell)
        try:
            r = co.check_orbit_reduction(chi, args.ell)
            ok, detail = True, f"case {r.case}, u={r.u}"
        except co.IdentityViolation as exc:
            r, ok, detail = None, False, str(exc)
        rows.append({
            "k": chi.k,
            "order": chi.order,
            "orbit": list(orbit.orbit),
            "f_tilde": orbit.size,
            "reduced_k": red.k,
            "reduced_modulus": red.ctx.modulus,
            "f_red": co.frobenius_orbit(red).size,
            "case": r.case if r else None,
            "u": r.u if r else None,
            "regular": orbit.size == args.n,
        })
        rep.check(f"orbit_reduction[{chi.k}]", ok, detail)
    rep.results = {"num_characters": len(rows), "characters": rows}
    if len(rows) == 1:
        rep.results.update({k: rows[0][k] for k in ("f_tilde", "f_red")})
    return rep


# cuspidal

def cmd_cuspidal(args) -> Report:
    try:
        datum = cu.TypeDatum.build(
            args.m, args.d, args.q, args.e, args.f, args.chi, m_prime=args.mprime, d_prime=args.dprime
        )
        cu._check_ell(args.q, args.ell)
        if not co.is_regular(datum.chi):
            raise ValueError(f"chi={datum.chi} is not regular")
    except ValueError as exc:
        raise UsageError(str(exc))
    ell = args.ell
    rep = Report("cuspidal", {**datum.as_dict(), "ell": ell})
    top = cu.invariants(datum, cu.CHAR_ZERO)
    red = cu.invariants(datum, ell)
    try:
        shape = cu.reduction_shape(datum, ell)
        rep.check("reduction_length_shape", True, f"a={shape.a}")
    except co.IdentityViolation as exc:
        rep.check("reduction_length_shape", False, str(exc))
        return rep
    try:
        zeta = cu.zeta_identities(datum, ell)
    except co.IdentityViolation as exc:
        zeta = None
        rep.check("twist_orbit_report", False, str(exc))
    lift = cu.liftability_search(datum, ell)
    rep.results = {
        "invariants_char_zero": top.as_dict(),
        "invariants_mod_ell": red.as_dict(),
        "a": shape.a,
        "a_prime_to_ell": shape.a_prime_to_ell,
        "shape": shape.symbolic(),
        "nu_order": shape.nu_order,
        "banal": cu.is_banal(datum.m, datum.d, datum.q, ell),
        "reducibility_points_rational": list(cu.reducibility_points(datum, QQ)),
        "reducibility_points_mod_ell": list(cu.reducibility_points(datum, GF(ell), ell)),
        "zeta": zeta.as_dict() if zeta else None,
        "liftability": None if lift is None else lift.chi.k,
    }
    rec = cu.check_sweep_record(datum, ell)
    for name, ok in rec.checks.items():
        rep.check(name, ok)
    return rep


# hecke

def cmd_hecke(args) -> Report:
    if not 1 <= args.r <= MAX_RANK:
        raise UsageError(f"--r must be in 1..{MAX_RANK}")
    try:
        F = parse_field(args.field)
        alg = HeckeAlgebra(args.r, _parse_scalar(args.q), F)
    except ValueError as exc:
        raise UsageError(str(exc))
    inputs = {"r": args.r, "q": args.q, "field": F.name, "action": args.action}
    rep = Report("hecke", inputs)
    if args.action == "relations":
        for c in check_coxeter_relations(alg):
            rep.check(c.name, c.passed)
        rep.results = {"num_relations": len(rep.checks)}
    elif args.action == "assoc":
        seed = _seed(args)
        rep.inputs.update({"seed": seed, "count": args.count})
        ok = check_associativity(alg, args.count, random.Random(seed))
        rep.results = {"passed": ok, "total": args.count}
        rep.check("associativity", ok == args.count, f"{ok}/{args.count}")
    elif args.action == "bernstein":
        for c in check_bernstein_relations(alg):
            rep.check(c.name, c.passed)
        rep.results = {"num_relations": len(rep.checks)}
    elif args.action == "y1":
        if not args.alpha:
            raise UsageError("y1 needs --alpha")
        try:
            alpha = Composition.parse(args.alpha)
        except ValueError as exc:
            raise UsageError(str(exc))
        if alpha.total != args.r:
            raise UsageError(f"--alpha {args.alpha} does not sum to r={args.r}")
        rep.inputs["alpha"] = str(alpha)
        y = verify_Y1_bijection(alpha, alg.param, F)
        rep.results = {
            "dim": y.dim,
            "rank_y1": y.rank_y1,
            "rank_ydelta": y.rank_ydelta,
            "rank": f"{y.rank_y1}/{y.dim}",
        }
        rep.check("y1_bijective", y.rank_y1 == y.dim)
        rep.check("ydelta_bijective", y.rank_ydelta == y.dim)
        rep.check("y_w_factor_through_y1", all(y.solvable.values()))
    elif args.action == "module":
        if args.z is None:
            raise UsageError("module needs --z")
        if args.r != 2:
            raise UsageError("module is implemented for r = 2")
        try:
            z = F(_parse_scalar(args.z))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc))
        if not z:
            raise UsageError("--z must be nonzero")
        rep.inputs["z"] = args.z
        reducible = is_reducible_rank2(alg, z)
        mod = induce_from_laurent_char(alg, (F.one, z))
        subs = find_simple_submodules(mod)
        expected = z == alg.param or z * alg.param == 1
        rep.results = {
            "reducible": reducible,
            "dim": mod.dim,
            "simple_submodule_dims": [len(S) for S in subs],
        }
        rep.check("reducible_iff_z_is_q_or_inverse", reducible == expected)
        rep.check("spinning_agrees", reducible == (min(len(S) for S in subs) < mod.dim))
    return rep


def _parse_scalar(text):
    return Fraction(str(text))


# examples

def _golden(name: str) -> dict:
    return json.loads(resources.files("modtypes").joinpath("golden", f"{name}.json").read_text())


def cmd_examples(args) -> Report:
    if args.id not in REPRODUCTIONS:
        raise UsageError(f"unknown example id {args.id!r}; choose from {sorted(REPRODUCTIONS)}")
    name, fn = REPRODUCTIONS[args.id]
    out = fn()
    rep = Report("examples", {"id": args.id, "name": name, **out["inputs"]}, out["results"])
    for check_name, ok in out["checks"]:
        rep.check(check_name, ok)
    golden = _golden(name)
    rep.check("golden_match", _jsonable(out["results"]) == golden, f"golden/{name}.json")
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="modtypes", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orbit", parents=[common], help="Frobenius orbits of characters and their reduction mod ell")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--ell", type=int, required=True)
    g = o.add_mutually_exclusive_group()
    g.add_argument("--char", type=int)
    g.add_argument("--all", action="store_true")
    o.set_defaults(func=cmd_orbit)

    c = sub.add_parser("cuspidal", parents=[common], help="invariants and reduction of a cuspidal datum")
    for flag in ("m", "d", "q", "ell", "e", "f", "chi"):
        c.add_argument(f"--{flag}", type=int, required=True)
    c.add_argument("--mprime", type=int)
    c.add_argument("--dprime", type=int)
    c.set_defaults(func=cmd_cuspidal)

    h = sub.add_parser("hecke", parents=[common], help="affine Hecke algebra checks")
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--q", required=True)
    h.add_argument("--field", default="Q")
    h.add_argument("--count", type=int, default=200)
    h.add_argument("action", choices=("relations", "assoc", "bernstein", "y1", "module"))
    h.add_argument("--alpha")
    h.add_argument("--z")
    h.set_defaults(func=cmd_hecke)

    e = sub.add_parser("examples", parents=[common], help="reproduce a worked example against its golden file")
    e.add_argument("id")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rep = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(rep.to_table() if args.format == "table" else rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
