"""Command line interface.

Exit codes: 0 all requested checks passed, 1 a verification failed,
2 usage error (bad arguments or violated preconditions).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .nt_core import (
    Prime5Mod8,
    enumerate_generators,
    find_primitive_root,
    generator_info,
    inverse_generator,
)
from .report import (
    CSV_HEADER,
    render_ledger_text,
    render_report_json,
    render_report_text,
    render_scan_record_text,
    render_summary_text,
    report_csv_row,
)
from .residue_matrix import quartic_first_row
from .scan import SCAN_SOFT_CAP, scan_range
from .theorems import (
    FalsificationError,
    class_sums,
    proof_ledger,
    quartic_sum_bruteforce,
    quartic_sum_formula,
    verify_prime,
)

_FORMATS = ("text", "json", "csv")


def _default_format() -> str:
    fmt = os.environ.get("QUARTIC_LATIN_FORMAT", "text").strip().lower()
    return fmt if fmt in _FORMATS else "text"


def _prime_arg(value: int) -> Prime5Mod8:
    return Prime5Mod8.from_prime(value)


def cmd_verify(args: argparse.Namespace) -> int:
    p = _prime_arg(args.prime)
    g = generator_info(p, args.generator) if args.generator is not None else None
    report = verify_prime(p, g)
    if args.format == "json":
        print(render_report_json(report))
    elif args.format == "csv":
        print(CSV_HEADER)
        print(report_csv_row(report))
    else:
        print(render_report_text(report))
    return 0 if report.all_pass else 1


def cmd_scan(args: argparse.Namespace) -> int:
    lo, hi = args.lo, args.hi
    if lo > hi:
        raise ValueError(f"empty range: --from {lo} > --to {hi}")
    span = hi - max(lo, 0)
    if span > SCAN_SOFT_CAP:
        if not args.force:
            raise ValueError(
                f"range spans {span} > {SCAN_SOFT_CAP}; per-prime work is O(p), "
                f"pass --force to scan anyway"
            )
        print(f"warning: scanning {span} numbers, this is O(p) per prime", file=sys.stderr)
    reports, summary = scan_range(lo, hi, jobs=args.jobs, deep=args.deep)

    if args.format == "json":
        doc = {
            "summary": summary.to_json_dict(),
            "records": [r.to_json_dict() for r in reports],
        }
        payload = json.dumps(doc, sort_keys=True)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
            print(render_summary_text(summary))
        else:
            print(payload)
    elif args.format == "csv":
        rows = [CSV_HEADER] + [report_csv_row(r) for r in reports]
        if args.out:
            with open(args.out, "w") as fh:
                fh.write("\n".join(rows) + "\n")
            print(render_summary_text(summary))
        else:
            print("\n".join(rows))
            print(render_summary_text(summary), file=sys.stderr)
    else:
        lines = [render_scan_record_text(r) for r in reports]
        body = "\n".join(lines + ["", render_summary_text(summary)])
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(body + "\n")
            print(render_summary_text(summary))
        else:
            print(body)
    return 0 if summary.failures == 0 else 1


def cmd_ledger(args: argparse.Namespace) -> int:
    p = _prime_arg(args.prime)
    g = find_primitive_root(p)
    if g.two_parity != 1:
        g = inverse_generator(p, g)
    ledger, ok = proof_ledger(p, g)
    sums, sums_ok = class_sums(p, g)
    print(render_ledger_text(ledger, ok, sums, sums_ok))
    return 0 if ok and sums_ok else 1


def cmd_generators(args: argparse.Namespace) -> int:
    p = _prime_arg(args.prime)
    gens = enumerate_generators(p)
    tally = {1: 0, 3: 0}
    for gi in gens:
        tally[gi.two_parity] += 1
    print(f"p = {p.p}: {len(gens)} primitive roots, parity tally 1:{tally[1]} 3:{tally[3]}")
    for gi in gens:
        print(f"  g = {gi.g}   two_parity = {gi.two_parity}")
    return 0


def cmd_sum(args: argparse.Namespace) -> int:
    p = _prime_arg(args.prime)
    row = quartic_first_row(p)
    brute = quartic_sum_bruteforce(p)
    formula = quartic_sum_formula(p, row)
    match = formula == brute
    print(f"p = {p.p}   first row = {tuple(row)}")
    print(f"sum of quartic residues (formula):     {formula}")
    print(f"sum of quartic residues (brute force): {brute}")
    print("match" if match else "MISMATCH")
    return 0 if match else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic-latin",
        description="Verify the interval and mod-4 class matrices of quartic residues "
        "for primes p = 5 (mod 8).",
    )
    sub = parser.add_subparsers(dest="command")

    fmt_kwargs = dict(choices=_FORMATS, default=_default_format())

    v = sub.add_parser("verify", help="run every check for one prime")
    v.add_argument("--prime", type=int, required=True)
    v.add_argument("--generator", type=int, default=None,
                   help="primitive root to walk (default: smallest)")
    v.add_argument("--format", **fmt_kwargs)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="verify every prime = 5 (mod 8) in a range")
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", dest="hi", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--deep", action="store_true",
                   help="also walk every generator (primes up to 3000)")
    s.add_argument("--format", **fmt_kwargs)
    s.add_argument("--out", default=None, help="write records to this file")
    s.add_argument("--force", action="store_true",
                   help="allow ranges wider than the soft cap")
    s.set_defaults(func=cmd_scan)

    l = sub.add_parser("ledger", help="print the half and sixteenth interval identities")
    l.add_argument("--prime", type=int, required=True)
    l.set_defaults(func=cmd_ledger)

    gn = sub.add_parser("generators", help="list all primitive roots with parities")
    gn.add_argument("--prime", type=int, required=True)
    gn.set_defaults(func=cmd_generators)

    sm = sub.add_parser("sum", help="quartic residue sum, formula vs brute force")
    sm.add_argument("--prime", type=int, required=True)
    sm.set_defaults(func=cmd_sum)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except FalsificationError as exc:
        print(f"FALSIFIED: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
