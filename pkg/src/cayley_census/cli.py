"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 a verified
disagreement between the closed-form count and the brute-force oracle.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from . import formula
from .circulant import binomial_special_case, check_odd_prime, circulant_iso_count_prime, circulant_prime_weak_count
from .config import check_scale, oracle_max_order
from .errors import CayleyCensusError, InconsistencyError
from .groups import FiniteGroup, build_group
from .oracle import oracle_class_count
from .roster import ROSTER, sweep_degrees

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREE = 2

REPORT_FIELDS = ["group", "order", "degree", "mode", "method", "count", "per_k", "agreement", "elapsed_ms"]


@dataclass
class CensusReport:
    group: str
    order: int
    degree: int
    mode: str
    method: str
    count: int
    per_k: dict[int, int] = field(default_factory=dict)
    agreement: bool | None = None
    elapsed_ms: float = 0.0


def census(G: FiniteGroup, spec: str, m: int, mode: str, method: str, workers: int = 1) -> CensusReport:
    start = time.perf_counter()
    agreement = None
    if method == "formula":
        result = formula.class_count(G, m, mode, workers=workers)
    elif method == "oracle":
        check_scale(G.order, oracle_max_order(), "oracle method")
        result = oracle_class_count(G, m, mode)
    else:
        check_scale(G.order, oracle_max_order(), "oracle method")
        result = formula.class_count(G, m, mode, workers=workers)
        other = oracle_class_count(G, m, mode)
        agreement = result.total == other.total and result.per_k == other.per_k
    elapsed = (time.perf_counter() - start) * 1000
    return CensusReport(spec, G.order, m, mode, method, result.total, dict(result.per_k), agreement,
                        round(elapsed, 3))


# -- output -----------------------------------------------------------------------

def _row(obj) -> dict:
    d = asdict(obj) if not isinstance(obj, dict) else dict(obj)
    if "per_k" in d:
        d["per_k"] = {str(k): v for k, v in d["per_k"].items()}
    return d


def render(rows: list[dict], fmt: str, fields: list[str], single: bool = False) -> str:
    if fmt == "json":
        return json.dumps(rows[0] if single else rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) or v is None else v
                             for k, v in r.items()})
        return buf.getvalue()
    lines = ["  ".join(fields)]
    for r in rows:
        lines.append("  ".join(json.dumps(r[f]) if isinstance(r[f], (dict, type(None))) else str(r[f]) for f in fields))
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------------

def cmd_count(args) -> int:
    G = build_group(args.group)
    if args.degree < 1:
        raise ValueError(f"--degree must be at least 1, got {args.degree}")
    report = census(G, args.group, args.degree, args.mode, args.method, args.parallel)
    _emit(render([_row(report)], args.format, REPORT_FIELDS, single=True), args.output)
    return EXIT_DISAGREE if report.agreement is False else EXIT_OK


def cmd_table(args) -> int:
    G = build_group(args.group)
    top = G.order - 1 if args.max_degree is None else min(args.max_degree, G.order - 1)
    reports = [census(G, args.group, m, args.mode, args.method, args.parallel) for m in range(1, top + 1)]
    _emit(render([_row(r) for r in reports], args.format, REPORT_FIELDS), args.output)
    return EXIT_DISAGREE if any(r.agreement is False for r in reports) else EXIT_OK


def parse_degrees(text: str) -> list[int]:
    """``"1..6"``, ``"2,4,6"`` or a mix such as ``"1..3,8"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise ValueError(f"degrees must be positive integers, got {text!r}")
    return sorted(set(out))


def cmd_validate(args) -> int:
    check_scale(args.max_order, oracle_max_order(), "validate --max-order")
    degrees = parse_degrees(args.degrees) if args.degrees else None
    rows, bad = [], []
    for spec in ROSTER:
        G = build_group(spec)
        if G.order > args.max_order:
            continue
        ms = sweep_degrees(G.order) if degrees is None else [m for m in degrees if m <= G.order - 1]
        for m in ms:
            for mode in ("weak", "equiv"):
                start = time.perf_counter()
                o = oracle_class_count(G, m, mode)
                try:
                    f = formula.class_count(G, m, mode)
                except InconsistencyError as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    f = None
                row = {"group": spec, "order": G.order, "degree": m, "mode": mode,
                       "formula": None if f is None else f.total, "oracle": o.total, "agreement": f == o,
                       "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
                rows.append(row)
                if not row["agreement"]:
                    bad.append(row)
    fields = ["group", "order", "degree", "mode", "formula", "oracle", "agreement", "elapsed_ms"]
    if args.report:
        Path(args.report).write_text(render(rows, "csv", fields))
    summary = {"rows": len(rows), "disagreements": len(bad), "max_order": args.max_order}
    _emit(render([summary], "json", list(summary), single=True) if args.format == "json"
          else f"{len(rows)} rows checked, {len(bad)} disagreements\n", args.output)
    for row in bad:
        print(f"DISAGREE {row['group']} m={row['degree']} {row['mode']}: "
              f"formula={row['formula']} oracle={row['oracle']}", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_circulant(args) -> int:
    p = args.prime
    check_odd_prime(p)
    rows = []
    for m in range(2, args.max_degree + 1, 2):
        weak = circulant_prime_weak_count(p, m)
        claim = None
        if math.gcd((p - 1) // 2, m // 2) == 1:
            claim = binomial_special_case(p, m)
        rows.append({
            "prime": p, "degree": m, "weak": weak, "isomorphism": circulant_iso_count_prime(p, m),
            "binomial_claim": None if claim is None else claim.claimed,
            "erratum": claim is not None and not claim.agrees,
        })
    fields = ["prime", "degree", "weak", "isomorphism", "binomial_claim", "erratum"]
    _emit(render(rows, args.format, fields), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayley-census",
                                     description="Count (weak) equivalence classes of Cayley graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="json"):
        p.add_argument("--format", choices=["json", "csv", "text"], default=default_format)
        p.add_argument("--output", help="write to this path instead of standard output")

    def census_args(p):
        p.add_argument("--group", required=True, help="Z<n>, D<n>, Q8, S<n>, A<n>, products like Z2xZ4, or file:<path>")
        p.add_argument("--mode", choices=["weak", "equiv"], default="weak")
        p.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
        p.add_argument("--parallel", type=int, default=1, metavar="THREADS",
                       help="worker processes for the formula sweep (default 1)")
        common(p)

    p = sub.add_parser("count", help="count classes for one group and degree")
    census_args(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="count classes for every degree of one group")
    census_args(p)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("validate", help="formula-vs-oracle sweep over the built-in roster")
    p.add_argument("--max-order", type=int, default=16)
    p.add_argument("--degrees", help="e.g. 1..6 or 2,4,6 (default 1..min(n-1, 8))")
    p.add_argument("--report", help="CSV file receiving one row per (group, degree, mode)")
    common(p, default_format="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("circulant", help="circulant graph counts on a prime number of vertices")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_circulant)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    if getattr(args, "parallel", 1) < 1:
        print("error: --parallel must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CayleyCensusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
