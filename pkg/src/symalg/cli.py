"""Command-line front end.

Subcommands: classify, block, decompose, construct, verify, dim.  Matrix
files use the JSON/CSV formats of `symalg.io`.  Exit codes: 0 success,
2 input error, 3 constructor precondition violation, 4 verification
failure — so CI can tell bad inputs apart from mathematical failures.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import io as mio
from .blockform import to_block
from .construct import (
    CONSTRUCTIBLE,
    make_alternating_pairs,
    make_array_sum,
    make_associated,
    make_balanced,
    make_most_perfect,
    make_most_perfect_block,
    make_pandiagonal,
    make_quartered,
    make_quartered_semimagic,
    make_reverse,
    make_reversible,
    make_semimagic,
    make_vertex_cross,
    random_member,
)
from .decompose import split
from .errors import (
    DimensionError,
    ParseError,
    PreconditionError,
    SymalgError,
    VerificationError,
)
from .predicates import classify
from .verify import build_constraints, dimension_probe, run_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


def _default_seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("SYMALG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"SYMALG_SEED must be an integer, got {env!r}") from exc
    return 0


def _print_matrix(m, fmt: str) -> None:
    if fmt == "pretty":
        width = max(len(mio.scalar_pretty(x)) for x in m.entries)
        for i in range(m.n):
            print(
                "  ".join(mio.scalar_pretty(m[i, j]).rjust(width) for j in range(m.n))
            )
    elif fmt == "csv":
        sys.stdout.write(mio.dumps_matrix_csv(m))
    else:
        print(mio.dumps_matrix(m))


def cmd_classify(args) -> int:
    report = classify(mio.read_matrix(args.input))
    if args.format == "pretty":
        print(report.pretty())
    else:
        print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def cmd_block(args) -> int:
    bf = to_block(mio.read_matrix(args.input))
    if args.out:
        mio.write_matrix(bf.conjugate, args.out)
    else:
        _print_matrix(bf.conjugate, args.format)
    return EXIT_OK


def cmd_decompose(args) -> int:
    pair = split(mio.read_matrix(args.input), args.split)
    mio.write_matrix(pair.even_part, args.even_out)
    mio.write_matrix(pair.odd_part, args.odd_out)
    if pair.weight is not None:
        print(f"even-part weight: {mio.scalar_pretty(pair.weight)}")
    return EXIT_OK


def _value(x):
    if isinstance(x, str):
        return mio.scalar_from_string(x)
    if isinstance(x, (int, list)):
        return x
    raise ParseError(f"cannot interpret parameter value {x!r}")


def _coerce_params(raw: dict) -> dict:
    out = {}
    for key, val in raw.items():
        if isinstance(val, str):
            out[key] = mio.scalar_from_string(val)
        elif isinstance(val, list) and val and isinstance(val[0], list):
            out[key] = [[_value(x) for x in row] for row in val]
        elif isinstance(val, list):
            out[key] = [_value(x) for x in val]
        else:
            out[key] = val
    return out


def _construct_from_params(kind: str, n: int, params: dict):
    p = _coerce_params(params)
    if kind == "a":
        return make_associated(p.get("phi"), p.get("psi"), n)
    if kind == "b":
        return make_balanced(p.get("upsilon"), p.get("omega"), n)
    if kind == "s":
        return make_semimagic(
            n, Y=p.get("Y"), V=p.get("V"), W=p.get("W"), Z=p.get("Z"), w=p.get("w")
        )
    if kind == "v":
        return make_vertex_cross(
            n,
            Y=p.get("Y"),
            a=p.get("a"),
            b=p.get("b"),
            v=p.get("v"),
            x=p.get("x"),
            y=p.get("y"),
            z=p.get("z"),
        )
    if kind == "n":
        return make_alternating_pairs(
            n, Y=p.get("Y"), V=p.get("V"), W=p.get("W"), Z=p.get("Z"), lam=p.get("lam")
        )
    if kind == "m":
        return make_array_sum(
            n,
            a=p.get("a"),
            b=p.get("b"),
            Z=p.get("Z"),
            v=p.get("v"),
            x=p.get("x"),
            y=p.get("y"),
            z=p.get("z"),
        )
    if kind == "r":
        return make_reverse(n, gamma=p.get("gamma"), x=p.get("x"), z=p.get("z"), Z=p.get("Z"))
    if kind == "p":
        return make_pandiagonal(p["A"], p.get("B"))
    if kind == "q":
        return make_quartered(p["A"], p.get("B"))
    if kind == "mps":
        if "gamma" in p or "delta" in p:
            return make_most_perfect(p.get("gamma"), p.get("delta"), n)
        return make_most_perfect_block(p.get("a"), p.get("b"), p.get("Z"), n)
    if kind == "nqs":
        return make_quartered_semimagic(p.get("Y"), p.get("Z"), p.get("V"), p.get("W"), n)
    if kind == "rv":
        return make_reversible(p.get("a"), p.get("b"), n, w=p.get("w"))
    raise ParseError(f"unknown construction type {kind!r}")


def cmd_construct(args) -> int:
    kind = args.type.lower()
    if kind not in CONSTRUCTIBLE:
        raise ParseError(f"unknown construction type {args.type!r}")
    w = mio.scalar_from_string(args.w) if args.w is not None else None
    if args.params:
        try:
            with open(args.params, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read parameter file: {exc}") from exc
        if w is not None:
            raw.setdefault("w", args.w)
        m = _construct_from_params(kind, args.n, raw)
    else:
        if w is not None and kind not in ("s", "rv"):
            raise ParseError(f"--w applies only to weighted types, not {kind!r}")
        rng = random.Random(_default_seed(args.seed))
        m = random_member(kind, args.n, rng, weight=w)
    if args.out:
        mio.write_matrix(m, args.out)
    else:
        _print_matrix(m, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(
        args.suite, n_max=args.n_max, trials=args.trials, seed=_default_seed(args.seed)
    )
    print(json.dumps(report, indent=2, default=str))
    return EXIT_OK if report["ok"] else EXIT_VERIFICATION


def cmd_dim(args) -> int:
    value = dimension_probe(args.space, args.n)
    print(json.dumps({"space": args.space.upper(), "n": args.n, "dimension": value}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symalg",
        description="Exact classification, construction and verification of "
        "matrix symmetry spaces over Q(√2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="report all symmetry properties of a matrix file")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("block", help="print the block representation X·M·X")
    p.add_argument("input")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("decompose", help="split a matrix along one direct sum")
    p.add_argument("input")
    p.add_argument("--split", choices=("ba", "sv", "nm", "qp"), required=True)
    p.add_argument("--even-out", required=True)
    p.add_argument("--odd-out", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="emit a member of a symmetry space")
    p.add_argument("--type", required=True, metavar="{" + ",".join(CONSTRUCTIBLE) + "}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--w", help="weight, as an exact scalar literal")
    p.add_argument("--params", help="JSON file with explicit construction parameters")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite, print a JSON report")
    p.add_argument(
        "--suite",
        choices=("gradings", "dimensions", "ranks", "lemmas", "all"),
        default="all",
    )
    p.add_argument("--n-max", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dim", help="dimension of a symmetry space")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except SymalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
