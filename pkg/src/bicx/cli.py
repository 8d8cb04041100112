"""Command-line front end.

Exit codes: 0 success, 1 failed verification or arithmetic error
(non-invertible input, irrational root, overflow), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .core import (
    Bicomplex,
    NonInvertible,
    NotRepresentable,
    Vec4,
    from_vec4,
    inverse_idempotent,
    square_roots,
    to_idempotent,
    to_vec4,
)
from .expr import DivisionByZero, EvalOverflow, ExprSyntaxError, display_form, evaluate, parse
from .geometry import Axis, Hyperplane, ZeroNormal, reflect_axis, reflect_hyperplane
from .group import cayley_table, d8_table, subgroups
from .involution import TAGS, ConjTag, apply
from .invert import KINDS, ConjugateProductKind, conjugate_product, inverse_via_conjugates
from .scalar import EXACT, MODES, as_scalar, convert, format_scalar

FORMATS = ("text", "json", "md", "csv")


class UsageError(Exception):
    pass


def _vec_text(v: Vec4) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def _vec_json(v: Vec4) -> list[str]:
    return [format_scalar(x) for x in v]


def _render(value: Bicomplex, form: str = "cartesian") -> str:
    if form == "idem":
        return str(to_idempotent(value))
    if form == "vec":
        return _vec_text(to_vec4(value))
    return str(value)


def _value_json(value: Bicomplex) -> dict:
    f = to_idempotent(value)
    return {
        "cartesian": str(value),
        "vec": _vec_json(to_vec4(value)),
        "idem": [str(f.ze1), str(f.ze2)],
    }


def _expression(args) -> tuple[Bicomplex, str]:
    node = parse(args.expr)
    return evaluate(node, args.mode), display_form(node)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print("\n".join(lines))


# -- commands ---------------------------------------------------------------------


def cmd_eval(args) -> int:
    value, form = _expression(args)
    _emit(args, {"input": args.expr, "value": _value_json(value)}, [_render(value, form)])
    return 0


def cmd_conj(args) -> int:
    value, form = _expression(args)
    tags = [ConjTag.parse(t) for t in args.tag] if args.tag else list(TAGS)
    images = {tag: apply(tag, value) for tag in tags}
    _emit(
        args,
        {"input": args.expr, "images": {str(t): _value_json(v) for t, v in images.items()}},
        [f"{t}: {_render(v, form)}" for t, v in images.items()],
    )
    return 0


def cmd_inverse(args) -> int:
    value, form = _expression(args)
    if args.kind == "idempotent":
        results = {"idempotent": inverse_idempotent(value)}
    else:
        kinds = KINDS if args.kind == "all" else [ConjugateProductKind.parse(args.kind)]
        results = {"idempotent": inverse_idempotent(value)}
        for kind in kinds:
            results[kind.name.lower()] = inverse_via_conjugates(value, kind)
    products = {k.name.lower(): str(conjugate_product(value, k)) for k in KINDS}
    _emit(
        args,
        {
            "input": args.expr,
            "inverse": {k: _value_json(v) for k, v in results.items()},
            "conjugate_products": products,
        },
        [f"{k}: {_render(v, form)}" for k, v in results.items()],
    )
    return 0


def cmd_roots(args) -> int:
    value, form = _expression(args)
    roots = sorted(square_roots(value), key=lambda r: tuple(to_vec4(r)))
    _emit(
        args,
        {"input": args.expr, "roots": [_value_json(r) for r in roots]},
        [_render(r, form) for r in roots] or ["(no roots)"],
    )
    return 0


def _parse_normal(text: str, mode: str) -> Vec4:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError("--normal needs four comma-separated coordinates")
    try:
        return Vec4(*(convert(as_scalar(p), mode) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --normal: {exc}") from None


def cmd_reflect(args) -> int:
    value, _ = _expression(args)
    v = to_vec4(value)
    if args.axis:
        out = reflect_axis(Axis.parse(args.axis), v)
        label = f"R_{args.axis.lower()}"
    else:
        normal = _parse_normal(args.normal, args.mode)
        out = reflect_hyperplane(Hyperplane(normal), v)
        label = f"R_{_vec_text(normal)}"
    _emit(
        args,
        {"input": args.expr, "reflection": label, "vec": _vec_json(out), "value": _value_json(from_vec4(out))},
        [f"{label}{_vec_text(v)} = {_vec_text(out)}", f"as bicomplex: {from_vec4(out)}"],
    )
    return 0


def _table(which: str):
    return cayley_table() if which == "conj" else d8_table()


def cmd_table(args) -> int:
    table = _table(args.which)
    if args.format == "json":
        sys.stdout.write(table.to_json())
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        sys.stdout.write(table.to_markdown())
    return 0


def cmd_subgroups(args) -> int:
    table = _table(args.which)
    groups = [[str(x) for x in table.order if x in g] for g in subgroups(table)]
    if args.format == "json":
        print(json.dumps({"order": [str(x) for x in table.order], "subgroups": groups}, ensure_ascii=False))
    elif args.format == "csv":
        for g in groups:
            print(",".join([str(len(g))] + g))
    else:
        for g in groups:
            print(f"order {len(g)}: {{{', '.join(g)}}}")
    return 0


def cmd_verify(args) -> int:
    if args.mode != EXACT:
        raise UsageError("verify runs in exact mode only")
    names = None if args.all or not args.theorem else args.theorem
    try:
        results = verify_mod.run(names, samples=args.samples)
    except KeyError as exc:
        raise UsageError(f"{exc.args[0]}; known checks: {', '.join(verify_mod.CHECKS)}") from None
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "seed": verify_mod.seed_from_env(),
                    "samples": args.samples,
                    "passed": not failed,
                    "first_failure": failed[0].name if failed else None,
                    "checks": [r.to_dict() for r in results],
                },
                ensure_ascii=False,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            for d in r.details[:3]:
                print(f"    {d}")
        if failed:
            print(f"first failing check: {failed[0].name}")
        else:
            print(f"all {len(results)} checks passed")
    return 1 if failed else 0


# -- argument parsing -------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--mode", choices=MODES, default=default(EXACT), help="scalar arithmetic (default exact)")
    parser.add_argument("--format", choices=FORMATS, default=default("text"), help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicx", description="Bicomplex numbers and their conjugations.")
    _global_options(parser, lambda d: d)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, lambda d: argparse.SUPPRESS)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate an expression")
    p.add_argument("expr")

    p = add("conj", cmd_conj, "images under the conjugations")
    p.add_argument("expr")
    p.add_argument("--tag", action="append", help="dag0..dag5, pdag6, pdag7 (repeatable; default all)")

    p = add("inverse", cmd_inverse, "inverse by idempotent components and by conjugate products")
    p.add_argument("expr")
    p.add_argument(
        "--kind",
        default="all",
        choices=["all", "idempotent"] + [k.name.lower() for k in KINDS],
    )

    p = add("roots", cmd_roots, "all square roots (exact when rational)")
    p.add_argument("expr")

    p = add("reflect", cmd_reflect, "reflect the coordinate vector of an expression")
    p.add_argument("expr")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--axis", choices=["i1", "i2", "j1"])
    group.add_argument("--normal", help="hyperplane normal as a,b,c,d")

    p = add("table", cmd_table, "Cayley table")
    p.add_argument("--which", choices=["conj", "d8"], default="conj")

    p = add("subgroups", cmd_subgroups, "all subgroups")
    p.add_argument("--which", choices=["conj", "d8"], default="conj")

    p = add("verify", cmd_verify, "run verification checks")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true", help="run every check (default)")
    sel.add_argument("--theorem", action="append", metavar="NAME", help=", ".join(verify_mod.CHECKS))
    p.add_argument("--samples", type=int, default=verify_mod.DEFAULT_SAMPLES)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, UsageError, ZeroNormal, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonInvertible, NotRepresentable, DivisionByZero, EvalOverflow) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
