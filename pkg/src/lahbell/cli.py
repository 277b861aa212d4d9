"""Command-line interface: tables, polynomials, single values, verification.

Commands print their payload to stdout; diagnostics go to stderr.  Exit
status is 0 on success, 1 when a verification suite reports a failed
identity, and 2 on usage errors.  Output is deterministic: identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bell import (
    ONES,
    SequenceSpec,
    complete_bell,
    complete_lah_bell,
    complete_r_lah_bell,
    complete_r_lah_bell_expansion,
    incomplete_bell,
    incomplete_lah_bell,
    incomplete_r_lah_bell,
    lah_bell_polynomial,
)
from .exact_core import lah, lah_bell_number, r_lah_bell_number, rlah
from .poly import SCALAR_X, SparsePolynomial, var
from .verify import SUITE_NAMES, run_suites

__all__ = ["main", "run"]

_TABLE_FAMILIES = ("lah", "rlah", "lah-bell", "r-lah-bell")
_VALUE_FAMILIES = ("lah", "rlah", "lah-bell", "r-lah-bell", "lah-bell-poly")
_POLY_FAMILIES = (
    "complete-bell",
    "incomplete-bell",
    "complete-lah-bell",
    "incomplete-lah-bell",
    "incomplete-r-lah-bell",
    "complete-r-lah-bell",
    "theorem7",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lahbell",
        description="Exact Lah number and Bell polynomial family computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a triangle or row-total sequence")
    table.add_argument("family", choices=_TABLE_FAMILIES)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--r", type=int)
    table.add_argument("--format", choices=("text", "json", "csv"), default="text")

    polyp = sub.add_parser("poly", help="print one polynomial in canonical form")
    polyp.add_argument("family", choices=_POLY_FAMILIES)
    polyp.add_argument("--n", type=int, required=True)
    polyp.add_argument("--k", type=int)
    polyp.add_argument("--r", type=int)
    polyp.add_argument("--x", type=int)
    polyp.add_argument("--seq-a", help="ones, factorials, symbolic, or comma-separated ints")
    polyp.add_argument("--seq-b", help="ones, factorials, symbolic, or comma-separated ints")
    polyp.add_argument("--format", choices=("text", "json"), default="text")

    value = sub.add_parser("value", help="print one number")
    value.add_argument("family", choices=_VALUE_FAMILIES)
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--k", type=int)
    value.add_argument("--r", type=int)
    value.add_argument("--x", type=int)
    value.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="re-derive identity families and compare")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--n-max", type=int, default=12)
    verify.add_argument("--r-max", type=int, default=2)
    verify.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _parse_sequence(
    parser: argparse.ArgumentParser, text: str | None, family: str
) -> SequenceSpec:
    if text is None or text == "symbolic":
        return SequenceSpec.symbolic(family)
    if text == "ones":
        return ONES
    if text == "factorials":
        return SequenceSpec.factorials()
    try:
        return SequenceSpec.explicit([int(part) for part in text.split(",")])
    except ValueError:
        parser.error(
            f"invalid sequence {text!r}: expected ones, factorials, symbolic, "
            "or comma-separated integers"
        )


def _require(parser: argparse.ArgumentParser, args: argparse.Namespace, names: Sequence[str]) -> None:
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"--{name.replace('_', '-')} is required for family {args.family!r}")
    for name in ("n", "n_max", "k", "r", "r_max"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative")


def _cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    needs_r = args.family in ("rlah", "r-lah-bell")
    _require(parser, args, ["r"] if needs_r else [])
    if not needs_r and args.r is not None:
        parser.error(f"--r does not apply to family {args.family!r}")
    query: dict = {"family": args.family, "n_max": args.n_max}
    if needs_r:
        query["r"] = args.r
    if args.family == "lah":
        record = {
            "kind": "triangle",
            "query": query,
            "rows": [[lah(n, k) for k in range(n + 1)] for n in range(args.n_max + 1)],
        }
    elif args.family == "rlah":
        record = {
            "kind": "triangle",
            "query": query,
            "rows": [
                [rlah(n, k, args.r) for k in range(n + 1)] for n in range(args.n_max + 1)
            ],
        }
    elif args.family == "lah-bell":
        record = {
            "kind": "sequence",
            "query": query,
            "values": [lah_bell_number(n) for n in range(args.n_max + 1)],
        }
    else:
        record = {
            "kind": "sequence",
            "query": query,
            "values": [r_lah_bell_number(n, args.r) for n in range(args.n_max + 1)],
        }
    sys.stdout.write(_render(parser, record, args.format))
    return 0


def _cmd_value(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family = args.family
    required = {
        "lah": ["k"],
        "rlah": ["k", "r"],
        "lah-bell": [],
        "r-lah-bell": ["r"],
        "lah-bell-poly": ["r", "x"],
    }[family]
    _require(parser, args, required)
    query: dict = {"family": family, "n": args.n}
    for name in required:
        query[name] = getattr(args, name)
    if family == "lah":
        result = lah(args.n, args.k)
    elif family == "rlah":
        result = rlah(args.n, args.k, args.r)
    elif family == "lah-bell":
        result = lah_bell_number(args.n)
    elif family == "r-lah-bell":
        result = r_lah_bell_number(args.n, args.r)
    else:
        result = lah_bell_polynomial(args.n, args.r, args.x).as_int()
    record = {"kind": "number", "query": query, "value": result}
    sys.stdout.write(_render(parser, record, args.format))
    return 0


def _cmd_poly(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family = args.family
    required = {
        "complete-bell": [],
        "incomplete-bell": ["k"],
        "complete-lah-bell": [],
        "incomplete-lah-bell": ["k"],
        "incomplete-r-lah-bell": ["k", "r"],
        "complete-r-lah-bell": ["r"],
        "theorem7": ["r"],
    }[family]
    _require(parser, args, required)
    single_sequence = family in (
        "complete-bell",
        "incomplete-bell",
        "complete-lah-bell",
        "incomplete-lah-bell",
    )
    if single_sequence and args.seq_b is not None:
        parser.error(f"--seq-b does not apply to family {family!r}")
    if family != "complete-r-lah-bell" and args.x is not None:
        parser.error("--x only applies to family 'complete-r-lah-bell'")

    query: dict = {"family": family, "n": args.n}
    for name in required:
        query[name] = getattr(args, name)
    if args.seq_a is not None:
        query["seq_a"] = args.seq_a
    if args.seq_b is not None:
        query["seq_b"] = args.seq_b

    if family == "theorem7":
        seq_a = _parse_sequence(parser, args.seq_a, "x")
        seq_b = _parse_sequence(parser, args.seq_b, "y")
        result = complete_r_lah_bell_expansion(args.n, args.r, seq_a, seq_b)
    elif single_sequence:
        seq_a = _parse_sequence(parser, args.seq_a, "x")
        fn = {
            "complete-bell": lambda: complete_bell(args.n, seq_a),
            "incomplete-bell": lambda: incomplete_bell(args.n, args.k, seq_a),
            "complete-lah-bell": lambda: complete_lah_bell(args.n, seq_a),
            "incomplete-lah-bell": lambda: incomplete_lah_bell(args.n, args.k, seq_a),
        }[family]
        result = fn()
    else:
        seq_a = _parse_sequence(parser, args.seq_a, "a")
        seq_b = _parse_sequence(parser, args.seq_b, "b")
        if family == "incomplete-r-lah-bell":
            result = incomplete_r_lah_bell(args.n, args.k, args.r, seq_a, seq_b)
        else:
            x = var(SCALAR_X) if args.x is None else args.x
            if args.x is not None:
                query["x"] = args.x
            result = complete_r_lah_bell(args.n, args.r, x, seq_a, seq_b)

    record = {"kind": "polynomial", "query": query, "poly": result}
    sys.stdout.write(_render(parser, record, args.format))
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _require(parser, args, [])
    results = run_suites(args.suite, args.n_max, args.r_max)
    record = {
        "kind": "verdict",
        "query": {"suite": args.suite, "n_max": args.n_max, "r_max": args.r_max},
        "results": results,
    }
    sys.stdout.write(_render(parser, record, args.format))
    return 0 if all(item.passed for item in results) else 1


def _render(parser: argparse.ArgumentParser, record: dict, fmt: str) -> str:
    kind = record["kind"]
    if fmt == "csv" and kind not in ("triangle", "sequence"):
        parser.error("csv output is only available for tables")
    if fmt == "text":
        return _render_text(record)
    if fmt == "csv":
        return _render_csv(record)
    return _render_json(record)


def _render_text(record: dict) -> str:
    kind = record["kind"]
    if kind == "triangle":
        return "".join(" ".join(str(v) for v in row) + "\n" for row in record["rows"])
    if kind == "sequence":
        return "".join(str(v) + "\n" for v in record["values"])
    if kind == "number":
        return str(record["value"]) + "\n"
    if kind == "polynomial":
        return record["poly"].to_text() + "\n"
    lines = []
    for item in record["results"]:
        status = "PASS" if item.passed else "FAIL"
        line = f"{status} {item.suite}: {item.identity} [{item.bounds}]"
        if item.counterexample:
            line += f" counterexample: {item.counterexample}"
        lines.append(line)
    passed = sum(1 for item in record["results"] if item.passed)
    lines.append(f"{passed} of {len(record['results'])} identities passed")
    return "".join(line + "\n" for line in lines)


def _render_csv(record: dict) -> str:
    if record["kind"] == "triangle":
        lines = ["n,k,value"]
        for n, row in enumerate(record["rows"]):
            for k, value in enumerate(row):
                lines.append(f"{n},{k},{value}")
    else:
        lines = ["n,value"]
        for n, value in enumerate(record["values"]):
            lines.append(f"{n},{value}")
    return "".join(line + "\n" for line in lines)


def _render_json(record: dict) -> str:
    kind = record["kind"]
    payload: dict = {"kind": kind, "query": record["query"]}
    if kind == "triangle":
        payload["rows"] = [[str(v) for v in row] for row in record["rows"]]
    elif kind == "sequence":
        payload["values"] = [str(v) for v in record["values"]]
    elif kind == "number":
        payload["value"] = str(record["value"])
    elif kind == "polynomial":
        payload.update(record["poly"].to_json_obj())
    else:
        payload["results"] = [
            {
                "suite": item.suite,
                "identity": item.identity,
                "bounds": item.bounds,
                "passed": item.passed,
                "counterexample": item.counterexample,
            }
            for item in record["results"]
        ]
        payload["all_passed"] = all(item.passed for item in record["results"])
    return json.dumps(payload, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            return _cmd_table(parser, args)
        if args.command == "poly":
            return _cmd_poly(parser, args)
        if args.command == "value":
            return _cmd_value(parser, args)
        return _cmd_verify(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


def run() -> None:
    sys.exit(main())
