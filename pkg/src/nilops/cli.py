"""Command-line interface: ``nilops <command> ...``.

Exit status is 0 on success, 1 on a domain error (strip violation, failed
check, oversized oracle run) and 2 on a usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import genext, homs, objects, orders, oracle, sweeps
from .objects import S1Object, format_object, format_pickets, parse_object, to_json


class _UsageError(Exception):
    pass


def _obj(text: str) -> S1Object:
    try:
        return parse_object(text)
    except objects.ObjectSyntaxError as exc:
        raise _UsageError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_mul(args) -> int:
    y, x = _obj(args.quot), _obj(args.sub)
    z, swapped = genext.star(y, x), genext.star(x, y)
    text = "\n".join([
        format_object(z),
        format_pickets(z),
        "Z = Y*X: extension of Y (quotient) by X (subobject)",
        f"  Y = {format_pickets(y)}",
        f"  X = {format_pickets(x)}",
        f"roles swapped, X*Y = {format_object(swapped)} = {format_pickets(swapped)}",
        objects.render_tableau(z),
    ])
    _emit(args, text.rstrip("\n"), {
        "quotient": to_json(y), "sub": to_json(x),
        "product": to_json(z), "pickets": format_pickets(z),
        "swapped": to_json(swapped),
    })
    return 0


def cmd_pow(args) -> int:
    x = _obj(args.obj)
    z = genext.star_power(x, args.k)
    _emit(args, f"{format_object(z)}\n{format_pickets(z)}", {"power": to_json(z)})
    return 0


def cmd_decompose_word(args) -> int:
    x = _obj(args.obj)
    word = genext.generator_word(x)
    text = " * ".join(f"[{format_pickets(w)}]" for w in word) or "(empty word)"
    _emit(args, text, {"word": [to_json(w) for w in word]})
    return 0


def cmd_witness(args) -> int:
    y, x = _obj(args.quot), _obj(args.sub)
    w = genext.extension_witness(y, x)
    lines = [
        f"{r.label}: 0 -> {format_pickets(r.sub)} -> {format_pickets(r.middle)}"
        f" -> {format_pickets(r.quotient)} -> 0"
        for r in w.rows
    ]
    lines.append(f"sum of middle terms: {format_object(w.middles())}")
    _emit(args, "\n".join(lines), {
        "rows": [
            {"kind": r.kind, "params": r.params, "sub": to_json(r.sub),
             "middle": to_json(r.middle), "quotient": to_json(r.quotient)}
            for r in w.rows
        ],
        "middle": to_json(w.middles()),
    })
    return 0


def cmd_hom(args) -> int:
    x, y = _obj(args.x), _obj(args.y)
    d = homs.hom_dim(x, y)
    _emit(args, str(d), {"hom_dim": d})
    return 0


def cmd_orbit_dim(args) -> int:
    x = _obj(args.x)
    f, e = homs.orbit_dim_formula(x), homs.orbit_dim_via_end(x)
    text = f"formula: {f}\nvia End: {e}"
    if f != e:
        text += "\nMISMATCH"
    _emit(args, text, {"formula": f, "via_end": e, "agree": f == e})
    return 0 if f == e else 1


def cmd_order(args) -> int:
    x, y = _obj(args.x), _obj(args.y)
    v = orders.ORDERS[args.via](x, y)
    rel = "<=" if v.leq else "not <="
    text = f"{format_object(x)} {rel} {format_object(y)} ({args.via})"
    if args.via == "deg":
        text += "\ndegeneration order: coincides with the dominance order"
    if v.witness:
        text += f"\nwitness: {v.witness}"
    _emit(args, text, {"leq": v.leq, "via": args.via, "witness": v.witness})
    return 0


def cmd_enumerate(args) -> int:
    objs = objects.enumerate_s1(args.a, args.b)
    text = "\n".join(f"{format_object(x)}  {format_pickets(x)}" for x in objs)
    _emit(args, text, [to_json(x) for x in objs])
    return 0


def cmd_hasse(args) -> int:
    sys.stdout.write(orders.export_hasse(args.a, args.b, args.format))
    return 0


def cmd_render(args) -> int:
    x = _obj(args.obj)
    print(objects.render_tableau(x, args.format))
    return 0


def cmd_oracle_ext(args) -> int:
    y, x = _obj(args.quot), _obj(args.sub)
    exts = oracle.enumerate_extensions(y, x, args.p)
    text = "\n".join(
        f"{format_object(z)}  {format_pickets(z)}  dim End = {homs.end_dim(z)}" for z in exts
    )
    _emit(args, text, {"extensions": [to_json(z) for z in exts]})
    return 0


def cmd_oracle_verify(args) -> int:
    y, x = _obj(args.quot), _obj(args.sub)
    rep = oracle.verify_generic(y, x, args.p)
    _emit(args, str(rep), rep.to_json())
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    res = sweeps.SUITES[args.suite](args.max_b)
    text = res.summary()
    if res.failures:
        text += "\n" + "\n".join(res.failures[:20])
    _emit(args, text, {
        "suite": args.suite, "max_b": args.max_b, "checked": res.checked,
        "failures": res.failures, "ok": res.ok,
    })
    return 0 if res.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="nilops",
        description="Generic extensions of semisimple invariant subspaces of nilpotent operators.",
        epilog=objects.GRAMMAR_HINT,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("mul", cmd_mul, "generic extension Y*X of QUOT by SUB")
    p.add_argument("quot")
    p.add_argument("sub")

    p = add("pow", cmd_pow, "k-fold generic extension of OBJ with itself")
    p.add_argument("obj")
    p.add_argument("k", type=int)

    p = add("decompose-word", cmd_decompose_word, "write OBJ as a product of monoid generators")
    p.add_argument("obj")

    p = add("witness", cmd_witness, "short exact sequences realising QUOT*SUB")
    p.add_argument("quot")
    p.add_argument("sub")

    p = add("hom", cmd_hom, "dim Hom(X, Y)")
    p.add_argument("x")
    p.add_argument("y")

    p = add("orbit-dim", cmd_orbit_dim, "orbit dimension, closed form and via End")
    p.add_argument("x")

    p = add("order", cmd_order, "compare two objects of the same S_a^b")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--via", choices=sorted(orders.ORDERS), default="dom")

    p = add("enumerate", cmd_enumerate, "list all objects of S_a^b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("hasse", cmd_hasse, "Hasse diagram of the degeneration order on S_a^b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=["dot"], default="dot")

    p = add("render", cmd_render, "draw the LR-tableau of OBJ")
    p.add_argument("obj")
    p.add_argument("--format", choices=["ascii", "latex"], default="ascii")

    p = sub.add_parser("oracle", help="brute-force extension oracle over F_p")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    for name, func, help in (
        ("ext", cmd_oracle_ext, "all extension types of QUOT by SUB"),
        ("verify", cmd_oracle_verify, "check QUOT*SUB against the enumerated extensions"),
    ):
        q = osub.add_parser(name, parents=[common], help=help)
        q.add_argument("quot")
        q.add_argument("sub")
        q.add_argument("--p", type=int, default=2, help="field size (prime, default 2)")
        q.set_defaults(func=func)

    p = add("verify", cmd_verify, "run an exhaustive property sweep")
    p.add_argument("--suite", choices=sorted(sweeps.SUITES), required=True)
    p.add_argument("--max-b", type=int, required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"nilops: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, oracle.OracleSizeError) as exc:
        print(f"nilops: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
