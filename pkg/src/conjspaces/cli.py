"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input
(parse errors, malformed models, missing files, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import dual_steenrod as ds
from . import frames as fr
from .coefficients import (chart_lookup, chart_rows, coeff_degree,
                           format_coeff, format_laurent, parse_coeff,
                           phi_shadow)
from .degree import format_degree
from .errors import DegreeOverflowError, ModelError, ParseError
from .gf2 import format_poly, parse_poly
from .selftest import run_selftest
from .steenrod import format_bpoly, steinberg


def _default_bound() -> int:
    raw = os.environ.get("RO2_BOUND", "10")
    try:
        return int(raw)
    except ValueError:
        raise ModelError(f"RO2_BOUND must be an integer, got {raw!r}")


def _resolve_model(ref: str) -> fr.SpaceModel:
    if os.path.exists(ref):
        return fr.load_model(ref)
    for model in fr.builtin_models():
        if model.name == ref:
            return model
    raise ModelError(f"no file or built-in model named {ref!r}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_chart(args) -> int:
    for row in chart_rows(args.pmin, args.pmax, args.qmin, args.qmax):
        print(row)
    return 0


def _format_restriction(exps) -> str:
    if not exps:
        return "0"
    parts = []
    for n in sorted(exps):
        parts.append("1" if n == 0 else ("u" if n == 1 else f"u^{n}"))
    return " + ".join(parts)


def cmd_coeff(args) -> int:
    x = parse_coeff(args.expr)
    for extra in args.times or []:
        x = x * parse_coeff(extra)
    info: dict = {"value": format_coeff(x)}
    if not x:
        info["degree"] = None
    else:
        try:
            d = coeff_degree(x)
        except ValueError:
            d = None
            info["degree"] = "mixed"
        if d is not None:
            info["degree"] = format_degree(d)
            info["dimension"] = d.dimension
            info["shape"] = chart_lookup(d).tag
            from .coefficients import restriction
            info["restriction"] = _format_restriction(restriction(x))
            info["shadow"] = format_laurent(phi_shadow(x))
    if args.json:
        print(json.dumps(info, sort_keys=True))
        return 0
    for key in ("value", "degree", "dimension", "shape", "restriction", "shadow"):
        if key in info and info[key] is not None:
            print(f"{key}: {info[key]}")
    return 0


def cmd_asteen(args) -> int:
    if args.sub == "normalize":
        e = ds.parse_expression(args.expr, args.bound)
        print(ds.format_element(e))
    elif args.sub == "coprod":
        e = ds.parse_expression(args.expr, args.bound)
        print(ds.format_tensor(ds.coproduct(e, args.bound)))
    elif args.sub == "psi":
        if re.fullmatch(r"\d+", args.expr):
            e = ds.psi_zeta(int(args.expr))
        else:
            e = ds.parse_expression(args.expr, args.bound)
        print(ds.format_element(e))
    elif args.sub == "pn":
        p, q = ds.p_sequence(args.n)
        print(f"P{args.n} = {ds.format_element(p)}")
        print(f"Q{args.n} = {ds.format_element(q)}")
    elif args.sub == "pair":
        mono_elem = ds.parse_expression(args.mono)
        if len(mono_elem) != 1:
            raise ParseError("expected a single basis monomial", args.mono, 0)
        mono = next(iter(mono_elem))
        if mono[0] or mono[1]:
            raise ParseError("basis monomial must be coefficient-free",
                             args.mono, 0)
        e = ds.parse_expression(args.expr, args.bound)
        print(format_coeff(ds.pair(mono, e)))
    return 0


def _print_frame_result(name: str, ok: bool, verdicts, as_json: bool) -> None:
    if as_json:
        print(json.dumps({
            "model": name,
            "ok": ok,
            "verdicts": [{"name": v.name, "ok": v.ok, "detail": v.detail}
                         for v in verdicts],
        }, sort_keys=True))
        return
    for v in verdicts:
        if v.ok:
            print(f"PASS {v.name}" + (f" ({v.detail})" if v.detail else ""))
        else:
            print(f"FAIL {v.name}: {v.detail}")
    print(f"FRAME {'PASS' if ok else 'FAIL'} {name}")


def cmd_frame(args) -> int:
    if args.sub == "check":
        model = _resolve_model(args.model)
        ok, verdicts, _ = fr.frame_check(model, args.bound)
        _print_frame_result(model.name, ok, verdicts, args.json)
        return 0 if ok else 1
    return cmd_examples(args)


def cmd_examples(args) -> int:
    results = []
    failed = 0
    for model in fr.builtin_models():
        ok, verdicts, _ = fr.frame_check(model)
        results.append((model.name, ok, verdicts))
        if not ok:
            failed += 1
    if getattr(args, "json", False):
        print(json.dumps([
            {"model": name, "ok": ok,
             "verdicts": [{"name": v.name, "ok": v.ok, "detail": v.detail}
                          for v in verdicts]}
            for name, ok, verdicts in results], sort_keys=True))
        return 0 if failed == 0 else 1
    for name, ok, verdicts in results:
        if ok:
            print(f"PASS {name}")
        else:
            first = next(v for v in verdicts if not v.ok)
            print(f"FAIL {name}: {first.name}: {first.detail}")
    if failed:
        print(f"EXAMPLES FAIL ({failed} of {len(results)} models)")
        return 1
    print(f"EXAMPLES PASS ({len(results)} models)")
    return 0


def cmd_purity(args) -> int:
    model = _resolve_model(args.model)
    res = fr.purity_check(model, args.bound)
    if args.json:
        out = {"model": model.name, "ok": res.ok}
        if res.ok:
            out["generators"] = [{"class": nm, "level": lvl}
                                 for nm, lvl in res.module.generators]
        else:
            out["reason"] = res.reason
            out["degree"] = res.degree
        print(json.dumps(out, sort_keys=True))
        return 0 if res.ok else 1
    if res.ok:
        gens = ", ".join(f"{nm}@{lvl}" for nm, lvl in res.module.generators)
        print(f"PURE {model.name}: {gens}")
        return 0
    print(f"IMPURE {model.name}: {res.reason} at {res.degree} "
          f"(dims {res.dims})")
    return 1


def cmd_steinberg(args) -> int:
    model = _resolve_model(args.model)
    names = [g for g, _ in model.even.generators]
    x = model.even.reduce(parse_poly(args.cls, names))
    if not x:
        print(f"rsigma({args.cls}) = 0")
        return 0
    model.even.poly_degree(x)  # homogeneous input only
    k0 = fr.kappa0_apply(model, x)
    sigma = steinberg(model.fixed, k0)
    print(f"rsigma({args.cls}) = {format_bpoly(sigma)}")
    return 0


def cmd_selftest(args) -> int:
    bound = args.bound if args.bound is not None else _default_bound()
    ok = run_selftest(bound=bound, jobs=args.jobs)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjspaces",
        description="Exact mod-2 computations: the RO(C2)-graded coefficient "
                    "ring, the dual equivariant Steenrod algebra, and "
                    "conjugation-space frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chart", help="CSV chart of the coefficient Mackey functor")
    p.add_argument("--pmin", type=int, default=-10)
    p.add_argument("--pmax", type=int, default=10)
    p.add_argument("--qmin", type=int, default=-10)
    p.add_argument("--qmax", type=int, default=10)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("coeff", help="evaluate a coefficient-ring expression")
    p.add_argument("expr")
    p.add_argument("--times", action="append",
                   help="multiply by another expression (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("asteen", help="dual equivariant Steenrod algebra")
    asub = p.add_subparsers(dest="sub", required=True)
    q = asub.add_parser("normalize", help="tau-square-free normal form")
    q.add_argument("expr")
    q.add_argument("--bound", type=int, default=None)
    q = asub.add_parser("coprod", help="coproduct of an expression")
    q.add_argument("expr")
    q.add_argument("--bound", type=int, default=None)
    q = asub.add_parser("psi", help="image of a classical Milnor monomial")
    q.add_argument("expr", help="an index n for the n-th generator, or a z-expression")
    q.add_argument("--bound", type=int, default=None)
    q = asub.add_parser("pn", help="P_n and Q_n of the quotient recursion")
    q.add_argument("n", type=int)
    q = asub.add_parser("pair", help="coefficient pairing against a monomial")
    q.add_argument("mono")
    q.add_argument("expr")
    q.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_asteen)

    p = sub.add_parser("frame", help="conjugation-frame checks")
    fsub = p.add_subparsers(dest="sub", required=True)
    q = fsub.add_parser("check", help="run all checks on one model")
    q.add_argument("model", help="a JSON model file or a built-in name")
    q.add_argument("--bound", type=int, default=None)
    q.add_argument("--json", action="store_true")
    q = fsub.add_parser("examples", help="check every built-in model")
    q.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("examples", help="same as: frame examples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("purity", help="purity check for a model")
    p.add_argument("model")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("steinberg", help="frame value on an even class")
    p.add_argument("model")
    p.add_argument("--class", dest="cls", required=True,
                   help="homogeneous even class, e.g. x or x^2")
    p.set_defaults(func=cmd_steinberg)

    p = sub.add_parser("selftest", help="run the deterministic check registry")
    p.add_argument("--bound", type=int, default=None,
                   help="size bound (default: RO2_BOUND or 10)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ModelError, DegreeOverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
