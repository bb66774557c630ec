"""Command-line front end: ``onesided <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import sys

from . import coherence, rewrite
from .actions import act_left, act_right_on_ypoly
from .coeff_ring import RingSpec
from .division import DEFAULT_MAX_DEG, divide, regularity_report, tau
from .expr import Config, ParseError, parse_element
from .linalg import ESPAN, FULL, TruncBasis, mult_map, nullspace
from .verify import SUITES, verify_all


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=1, help="number of variables (default 1)")
    p.add_argument("--ring", default="Q", help="Z, Q or Zmod:<m> (default Q)")
    p.add_argument("--max-deg", type=int, default=None, dest="max_deg",
                   help=f"largest truncation box searched (default {DEFAULT_MAX_DEG})")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="onesided",
                                     description="Exact arithmetic in the algebra of one-sided inverses S_n(A).")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("eval", "normal form of an expression"),
                        ("involution", "apply x_i <-> y_i"),
                        ("pi", "augmentation (all generators -> 1)"),
                        ("laurent", "image in the Laurent polynomial ring")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("expr")

    p = sub.add_parser("act", parents=[common], help="module action on polynomials")
    p.add_argument("--f", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left",
                   help="left: S_n on A[x_1..x_n]; right: A[y] as a right S_1-module")

    p = sub.add_parser("divide", parents=[common], help="one-sided division f = g*t or t*g")
    p.add_argument("--f", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right",
                   help="right: g*t = f; left: t*g = f")

    p = sub.add_parser("tau", parents=[common], help="tau_t(a), the g with a*t = t*g")
    p.add_argument("--t", required=True)
    p.add_argument("--a", required=True)

    p = sub.add_parser("regularity", parents=[common], help="left/right annihilators of t on boxes")
    p.add_argument("--t", required=True)

    p = sub.add_parser("kernel", parents=[common], help="kernel of a multiplication map on a box")
    p.add_argument("--mult", required=True)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--subspace", choices=(FULL, ESPAN), default=FULL)

    sub.add_parser("coherence", parents=[common],
                   help="kernel of right multiplication by x1 - x2 in S_2")

    p = sub.add_parser("oracle-check", parents=[common],
                       help="compare word reduction with the closed-form product")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=10, dest="max_len")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--suite", action="append", choices=SUITES)
    return parser


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _text_report(report: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_text_report(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def run(args) -> int:
    ring = RingSpec.parse(args.ring)
    n = 2 if args.command == "coherence" else args.n
    default_deg = 6 if args.command in ("verify", "regularity") else DEFAULT_MAX_DEG
    max_deg = args.max_deg if args.max_deg is not None else default_deg
    cfg = Config(n=n, ring=ring, max_deg=max_deg, output="json" if args.json else "text")

    def el(text):
        return parse_element(text, cfg)

    cmd = args.command
    if cmd in ("eval", "involution"):
        f = el(args.expr)
        if cmd == "involution":
            f = f.involution()
        _emit(args, f.to_json(), str(f))
    elif cmd == "pi":
        c = el(args.expr).pi()
        _emit(args, {"ring": str(ring), "value": str(c)}, str(c))
    elif cmd == "laurent":
        lp = el(args.expr).laurent_image()
        _emit(args, lp.to_json(), str(lp))
    elif cmd == "act":
        f, p = el(args.f), el(args.poly)
        out = act_left(f, p) if args.side == "left" else act_right_on_ypoly(p, f)
        _emit(args, out.to_json(), str(out))
    elif cmd == "divide":
        res = divide(el(args.f), el(args.t), args.side, max_deg)
        _emit(args, res.to_json(),
              f"{res.status}: {res.quotient}" if res.found
              else f"{res.status} (searched boxes up to {res.degree_used})")
    elif cmd == "tau":
        g = tau(el(args.t), el(args.a), max_deg)
        _emit(args, {"t": args.t, "a": args.a, "tau": g.to_json()}, str(g))
    elif cmd == "regularity":
        rep = regularity_report(el(args.t), max_deg)
        _emit(args, rep, _text_report(rep))
    elif cmd == "kernel":
        M = mult_map(el(args.mult), args.side, TruncBasis(n, args.deg, args.subspace))
        for v in nullspace(M):
            print(json.dumps(v.to_json()) if args.json else str(v))
    elif cmd == "coherence":
        rep = coherence.coherence_report(max_deg, ring)
        _emit(args, rep, _text_report({k: v for k, v in rep.items() if k != "identities"}))
    elif cmd == "oracle-check":
        rep = rewrite.random_word_check(args.trials, args.max_len, args.n, args.seed)
        _emit(args, rep.to_json(), _text_report(rep.to_json()))
        return 0 if rep.passed else 1
    elif cmd == "verify":
        suites = SUITES if args.all else tuple(args.suite)
        code, rep = verify_all(cfg, args.seed, suites)
        if args.json:
            print(json.dumps(rep, indent=2))
        else:
            for name, r in rep["suites"].items():
                print(f"{'PASS' if r['passed'] else 'FAIL'}  {name}")
            print("all passed" if rep["passed"] else "FAILURES")
        return code
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
    except (ValueError, ArithmeticError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
