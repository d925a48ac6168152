"""Command line entry point ``qsymb``.

Exit codes: 0 everything verified (or the command succeeded), 1 some identity
failed or an input was not expandable, 2 invalid parameters.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .combinat import format_descent_set, format_partition, parse_partition
from .config import get_caps
from .errors import InvalidParams, MalformedInput, NotQuasisymmetric, NotSymmetric, SizeLimit
from .expand import (NotExpandable, expand_in_domino_basis, expand_in_fundamental_A,
                     expand_in_fundamental_B, expand_in_schur, lr_expand)
from .harness import (REGISTRY, SuiteConfig, _run, exit_code, load_suite_config, make_case,
                      verify_all)
from .qpoly import parse_poly
from .tableaux import (enum_sbt, enum_sdt, enum_ssbt, enum_ssdt, enum_ssyt, enum_syt,
                       format_domino_tableau, format_ptableau, format_tableau)

XY_IDS = {"eq3", "eq4", "eq5", "prop3"}


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsymb", description="Exact quasisymmetric function toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one or more registered identities")
    v.add_argument("ids", nargs="+", metavar="id", help=f"one of: {', '.join(REGISTRY)}")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--alphabet", type=int, help="size M of the alphabet X")
    v.add_argument("--alphabet-y", type=int, help="size of the alphabet Y (defaults to --alphabet)")
    v.add_argument("--p", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--lambda", dest="lam")
    v.add_argument("--mu")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--jobs", type=int, default=1)

    va = sub.add_parser("verify-all", help="verify the whole registry")
    va.add_argument("--caps", help="JSON file with caps, size_clip, alphabet and per-id params")
    va.add_argument("--format", choices=("json", "text"), default="text")
    va.add_argument("--jobs", type=int, default=1)

    lr = sub.add_parser("lr", help="Littlewood-Richardson expansion of s_lambda * s_mu")
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--mu", required=True)

    en = sub.add_parser("enum", help="list tableaux")
    en.add_argument("kind", choices=("syt", "ssyt", "sbt", "ssbt", "sdt", "ssdt"))
    en.add_argument("--shape", required=True)
    en.add_argument("--p", type=int, default=0)
    en.add_argument("--alphabet", type=int)
    en.add_argument("--count", action="store_true", help="print only the number of objects")

    ex = sub.add_parser("expand", help="expand a polynomial file in a basis")
    ex.add_argument("basis", choices=("schur", "fund-a", "fund-b", "domino"))
    ex.add_argument("--input", required=True, help="polynomial in the text format ('-' for stdin)")
    ex.add_argument("--n", type=int, help="degree (inferred when the input is homogeneous)")
    ex.add_argument("--at-q", choices=("one", "generic"), default="one")
    ex.add_argument("--minus-weight", type=int)
    return ap


def _verify_params(args, ident: str) -> dict:
    params = {"n": args.n, "m": args.m, "p": args.p, "q": args.q, "lambda": args.lam, "mu": args.mu,
              "M": args.alphabet}
    if ident in XY_IDS:
        params["My"] = args.alphabet_y if args.alphabet_y is not None else args.alphabet
    elif args.alphabet_y is not None:
        raise InvalidParams(f"{ident} uses a single alphabet; --alphabet-y does not apply")
    return {k: v for k, v in params.items() if v is not None}


def _emit(reports, fmt: str):
    if fmt == "json":
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for r in reports:
            print(r.to_text())


def _cmd_verify(args) -> int:
    cases = [make_case(ident, _verify_params(args, ident)) for ident in args.ids]
    work = [(c, get_caps()) for c in cases]
    if args.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run, work))
    else:
        reports = [_run(w) for w in work]
    _emit(reports, args.format)
    return exit_code(reports)


def _cmd_verify_all(args) -> int:
    config = load_suite_config(args.caps) if args.caps else SuiteConfig()
    reports = verify_all("default", config, jobs=args.jobs)
    _emit(reports, args.format)
    return exit_code(reports)


def _cmd_lr(args) -> int:
    out = lr_expand(parse_partition(args.lam), parse_partition(args.mu))
    print(json.dumps({format_partition(nu): c for nu, c in sorted(out.items(), reverse=True)}, indent=2))
    return 0


def _cmd_enum(args) -> int:
    shape = parse_partition(args.shape)
    needs_m = args.kind in ("ssyt", "ssbt", "ssdt")
    if needs_m and args.alphabet is None:
        raise InvalidParams(f"enum {args.kind} needs --alphabet")
    M = args.alphabet
    kinds = {
        "syt": (lambda: enum_syt(shape), format_tableau),
        "ssyt": (lambda: enum_ssyt(shape, M), format_tableau),
        "sbt": (lambda: enum_sbt(shape, args.p), format_ptableau),
        "ssbt": (lambda: enum_ssbt(shape, args.p, M), format_ptableau),
        "sdt": (lambda: enum_sdt(shape), format_domino_tableau),
        "ssdt": (lambda: enum_ssdt(shape, M), format_domino_tableau),
    }
    items, fmt = kinds[args.kind]
    objs = items()
    if args.count:
        print(len(objs))
    else:
        for obj in objs:
            print(fmt(obj))
    return 0


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _cmd_expand(args) -> int:
    p = parse_poly(_read(args.input))
    n = args.n
    if n is None:
        degrees = p.degrees()
        if len(degrees) > 1:
            raise InvalidParams("input is not homogeneous; pass --n")
        n = degrees.pop() if degrees else 0
    M = p.alphabet.M
    if args.basis == "schur":
        out = {format_partition(k): str(v) for k, v in sorted(expand_in_schur(p, n, M).items(), reverse=True)}
    elif args.basis == "fund-a":
        got = expand_in_fundamental_A(p, n, M)
        out = {format_descent_set(k): str(v) for k, v in sorted(got.items(), key=lambda kv: sorted(kv[0]))}
    elif args.basis == "fund-b":
        got = expand_in_fundamental_B(p, n, M)
        out = {format_descent_set(k): str(v) for k, v in sorted(got.items(), key=lambda kv: sorted(kv[0]))}
    else:
        got = expand_in_domino_basis(p, n, M, args.at_q, args.minus_weight)
        if isinstance(got, NotExpandable):
            print(json.dumps({"status": "not-expandable", "reason": got.reason,
                              "residual": got.residual, "solution": got.solution}, indent=2))
            return 1
        out = {format_partition(k): str(v) for k, v in sorted(got.items(), reverse=True)}
    print(json.dumps(out, indent=2))
    return 0


COMMANDS = {"verify": _cmd_verify, "verify-all": _cmd_verify_all, "lr": _cmd_lr,
            "enum": _cmd_enum, "expand": _cmd_expand}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InvalidParams, MalformedInput, SizeLimit, OSError, json.JSONDecodeError) as exc:
        print(f"qsymb: error: {exc}", file=sys.stderr)
        return 2
    except (NotSymmetric, NotQuasisymmetric) as exc:
        print(f"qsymb: not expandable: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
