"""Command-line surface: compute, export tables, run verification sweeps.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
failure (a theorem target found a counterexample).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import compositions, lunar, promotion, verify
from .errors import DomainError, ParseError
from .sets import (
    FiniteSet,
    divisor_count,
    divisors,
    interval,
    interval_positive,
    is_irreducible,
    sumset,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


def parse_set(text: str) -> FiniteSet:
    """Set literals: '0,2,3' or the interval forms '[7]' and '[7+]'."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1]
        plus = body.endswith("+")
        if plus:
            body = body[:-1]
        try:
            k = int(body)
        except ValueError:
            raise ParseError(f"invalid interval literal {text!r}") from None
        if k < 0 or (plus and k < 1):
            raise ParseError(f"invalid interval endpoint in {text!r}")
        return interval_positive(k) if plus else interval(k)
    try:
        return FiniteSet(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ParseError(f"invalid set literal {text!r}") from None


def _emit(args, plain: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _set_payload(s: FiniteSet) -> list[int]:
    return list(s.elements)


# ---------------------------------------------------------------------------
# Subcommand handlers.

def _cmd_sum(args) -> int:
    result = sumset(parse_set(args.a), parse_set(args.b))
    _emit(args, str(result), _set_payload(result))
    return EXIT_OK


def _cmd_divisors(args) -> int:
    divs = divisors(parse_set(args.a))
    _emit(
        args,
        "\n".join(str(d) for d in divs),
        [_set_payload(d) for d in divs],
    )
    return EXIT_OK


def _cmd_count(args) -> int:
    d = divisor_count(parse_set(args.a))
    _emit(args, str(d), d)
    return EXIT_OK


def _cmd_irreducible(args) -> int:
    flag = is_irreducible(parse_set(args.a))
    _emit(args, "true" if flag else "false", flag)
    return EXIT_OK


def _cmd_lunar(args) -> int:
    if args.lunar_op == "add":
        result = lunar.lunar_add(
            lunar.LunarNumber.parse(args.x), lunar.LunarNumber.parse(args.y)
        )
        _emit(args, str(result), str(result))
    elif args.lunar_op == "mul":
        result = lunar.lunar_mul(
            lunar.LunarNumber.parse(args.x), lunar.LunarNumber.parse(args.y)
        )
        _emit(args, str(result), str(result))
    else:  # divisors
        divs = lunar.lunar_divisors(lunar.LunarNumber.parse(args.x))
        plain = "\n".join(str(d) for d in divs) + f"\ncount: {len(divs)}"
        _emit(
            args,
            plain,
            {"divisors": [str(d) for d in divs], "count": len(divs)},
        )
    return EXIT_OK


def _cmd_beta(args) -> int:
    if args.inverse:
        s = lunar.beta_inv(lunar.LunarNumber.parse(args.value))
        _emit(args, str(s), _set_payload(s))
    else:
        n = lunar.beta(parse_set(args.value))
        _emit(args, str(n), str(n))
    return EXIT_OK


def _cmd_promote(args) -> int:
    result = promotion.promote(
        parse_set(args.a), args.k, parse_set(args.factor), args.other_max
    )
    _emit(args, str(result), _set_payload(result))
    return EXIT_OK


def _cmd_compositions(args) -> int:
    if args.parts is not None:
        n = compositions.headstrong_by_parts(args.n, args.parts)
        _emit(args, str(n), n)
        return EXIT_OK
    if args.count:
        n = compositions.headstrong_count(args.n)
        _emit(args, str(n), n)
        return EXIT_OK
    comps = compositions.enumerate_headstrong(args.n)
    _emit(
        args,
        "\n".join(str(c) for c in comps),
        [list(c.parts) for c in comps],
    )
    return EXIT_OK


def _table_rows(kind: str, rows: int, cols: int | None) -> list[list[int]]:
    if kind == "F":
        return compositions.f_table(rows, cols if cols is not None else rows)
    return compositions.h_table(rows)


def format_table(table: list[list[int]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(table)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps(table, sort_keys=True)
    return "\n".join(" ".join(str(v) for v in row) for row in table)


def _cmd_table(args) -> int:
    table = _table_rows(args.kind, args.rows, args.cols)
    print(format_table(table, args.format))
    return EXIT_OK


def _cmd_export(args) -> int:
    table = _table_rows(args.kind, args.rows, args.cols)
    text = format_table(table, args.format)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    print(f"wrote {args.kind} table ({args.rows} rows) to {args.out}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    params = {}
    if args.max_k is not None:
        params["max_k"] = args.max_k
    if args.promotion_max_k is not None:
        params["promotion_max_k"] = args.promotion_max_k
    report = verify.run_target(args.target, workers=args.workers, **params)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(f"target: {report.target}")
        print(f"range: {report.range}")
        print(f"status: {report.status}")
        print(f"counterexamples: {len(report.counterexamples)}")
        for c in report.counterexamples[:20]:
            print(f"  {c}")
        if report.details:
            print(f"details: {json.dumps(report.details, sort_keys=True)}")
        print(f"elapsed: {report.elapsed:.2f}s  workers: {report.worker_count}")
    return EXIT_COUNTEREXAMPLE if report.status == "fail" else EXIT_OK


# ---------------------------------------------------------------------------
# Parser wiring.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumdiv",
        description=(
            "Sumset divisor arithmetic, lunar numbers, headstrong "
            "compositions, and verification sweeps. Set literals: '0,2,3', "
            "'[7]' (full interval), '[7+]' (interval without 0)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("sum", help="sumset of two sets")
    p.add_argument("a")
    p.add_argument("b")
    add_json(p)
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("divisors", help="all sumset divisors of a set")
    p.add_argument("a")
    add_json(p)
    p.set_defaults(handler=_cmd_divisors)

    p = sub.add_parser("count", help="number of sumset divisors")
    p.add_argument("a")
    add_json(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("irreducible", help="test additive irreducibility")
    p.add_argument("a")
    add_json(p)
    p.set_defaults(handler=_cmd_irreducible)

    p = sub.add_parser("lunar", help="lunar arithmetic on digit strings")
    lsub = p.add_subparsers(dest="lunar_op", required=True)
    for op in ("add", "mul"):
        lp = lsub.add_parser(op)
        lp.add_argument("x")
        lp.add_argument("y")
        add_json(lp)
        lp.set_defaults(handler=_cmd_lunar)
    lp = lsub.add_parser("divisors")
    lp.add_argument("x")
    add_json(lp)
    lp.set_defaults(handler=_cmd_lunar)

    p = sub.add_parser("beta", help="set <-> binary lunar number")
    p.add_argument("value")
    p.add_argument("--inverse", action="store_true",
                   help="convert a base-2 number back to a set")
    add_json(p)
    p.set_defaults(handler=_cmd_beta)

    p = sub.add_parser("promote", help="k-promotion of a factor")
    p.add_argument("a", help="the 0-rooted product set")
    p.add_argument("k", type=int, help="interval endpoint")
    p.add_argument("factor", help="factor being augmented")
    p.add_argument("other_max", type=int,
                   help="max of the complementary factor")
    add_json(p)
    p.set_defaults(handler=_cmd_promote)

    p = sub.add_parser("compositions", help="headstrong compositions of n")
    p.add_argument("n", type=int)
    p.add_argument("--parts", type=int, default=None,
                   help="count only those with exactly this many parts")
    p.add_argument("--count", action="store_true",
                   help="print the total count instead of the list")
    add_json(p)
    p.set_defaults(handler=_cmd_compositions)

    for name, handler in (("table", _cmd_table), ("export", _cmd_export)):
        p = sub.add_parser(
            name,
            help="print (or write) the F or H table",
        )
        p.add_argument("kind", choices=("F", "H"))
        p.add_argument("--rows", type=int, required=True)
        p.add_argument("--cols", type=int, default=None,
                       help="columns for the F table (default: rows)")
        p.add_argument(
            "--format",
            choices=("plain", "csv", "json") if name == "table" else ("csv", "json"),
            default="plain" if name == "table" else "csv",
        )
        if name == "export":
            p.add_argument("--out", required=True)
        p.set_defaults(handler=handler)

    p = sub.add_parser("verify", help="run a verification target")
    p.add_argument(
        "target",
        choices=verify.THEOREM_TARGETS + verify.CONJECTURE_TARGETS,
    )
    p.add_argument("--max-k", type=int, default=None, dest="max_k")
    p.add_argument("--promotion-max-k", type=int, default=None,
                   dest="promotion_max_k",
                   help="bound for the family-disjointness sweep (crlodd)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: SUMDIV_WORKERS or all)")
    add_json(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
