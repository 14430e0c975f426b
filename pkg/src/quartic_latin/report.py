"""Text, JSON and CSV renderings of reports, ledgers and scan summaries."""

from __future__ import annotations

import json

from .scan import ScanSummary
from .theorems import ClassSums, ProofLedger, VerificationReport

CSV_HEADER = "p,g,parity,a,b,c,d,form,latin,sum_formula,sum_bruteforce,all_pass"

# Text reports list individual residues only below this count.
_RESIDUE_PRINT_LIMIT = 400


def render_matrix(rows, label: str) -> str:
    width = max(len(str(v)) for row in rows for v in row)
    lines = [label]
    for row in rows:
        lines.append("  [ " + "  ".join(str(v).rjust(width) for v in row) + " ]")
    return "\n".join(lines)


def _pass_fail(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def render_report_text(r: VerificationReport) -> str:
    lines = [
        f"p = {r.p}   g = {r.g}   two_parity = {r.two_parity}",
        f"form = {r.form}   latin = {str(r.is_latin).lower()}",
        "",
        render_matrix(r.matrix.to_lists(), "M (quarter intervals):"),
        "",
        render_matrix(r.mod4_matrix.to_lists(), "N (residues mod 4):"),
        "",
        f"sum of quartic residues: formula = {r.sum_formula}, brute force = {r.sum_bruteforce}",
    ]
    if r.quartic_residues is not None and len(r.quartic_residues) <= _RESIDUE_PRINT_LIMIT:
        lines.append("")
        lines.append(f"quartic residues ({len(r.quartic_residues)}), grouped by quarter interval:")
        for j in range(4):
            block = [x for x in r.quartic_residues if 4 * x // r.p == j]
            lines.append(f"  I_{j + 1}: " + " ".join(str(x) for x in block))
    lines.append("")
    lines.append("checks:")
    for name, ok in r.checks.items():
        note = f"   <- {r.counterexamples[name]}" if name in r.counterexamples else ""
        lines.append(f"  {_pass_fail(ok)}  {name}{note}")
    lines.append("")
    if r.all_pass:
        lines.append("result: all checks passed")
    else:
        failed = [k for k, ok in r.checks.items() if not ok]
        lines.append(f"result: FALSIFICATION, failed checks: {', '.join(failed)}")
    return "\n".join(lines)


def report_csv_row(r: VerificationReport) -> str:
    a, b, c, d = r.matrix.first_row()
    fields = [
        r.p, r.g, r.two_parity, a, b, c, d, r.form,
        str(r.is_latin).lower(),
        "" if r.sum_formula is None else r.sum_formula,
        r.sum_bruteforce,
        str(r.all_pass).lower(),
    ]
    return ",".join(str(v) for v in fields)


def render_report_json(r: VerificationReport) -> str:
    return json.dumps(r.to_json_dict(), sort_keys=True)


def render_ledger_text(ledger: ProofLedger, ok: bool, sums: ClassSums, sums_ok: bool) -> str:
    lines = [
        f"p = {ledger.p}   g = {ledger.g}",
        "",
        render_matrix(ledger.matrix, "M (quarter intervals):"),
        "",
        render_matrix(ledger.bottom_half, "bottom halves b[i][j]:"),
        "",
        render_matrix(ledger.top_half, "top halves t[i][j]:"),
        "",
        render_matrix(ledger.quarters, "sixteenth counts q[j][k] (quartic residues):"),
        "",
        "identities:",
    ]
    for name, good in ledger.identities.items():
        lines.append(f"  {_pass_fail(good)}  {name}")
    lines.append("")
    lines.append(f"class element sums b[i]: {sums.b}")
    lines.append(f"  {_pass_fail(sums_ok)}  doubling recurrence and total p(p-1)/2")
    lines.append("")
    all_ok = ok and sums_ok
    lines.append(f"result: {'all identities hold' if all_ok else 'IDENTITIES FAILED'}")
    return "\n".join(lines)


def render_summary_text(s: ScanSummary) -> str:
    lines = [
        f"scanned [{s.lo}, {s.hi}]: {s.primes_checked} primes = 5 (mod 8), "
        f"{s.failures} failures, {s.latin_count} latin squares, {s.elapsed:.2f}s",
    ]
    for name in sorted(s.check_tallies):
        n = s.check_tallies[name]
        lines.append(f"  {name}: {n}/{s.primes_checked}")
    if s.failing_primes:
        shown = ", ".join(str(p) for p in s.failing_primes[:20])
        more = "" if len(s.failing_primes) <= 20 else f" (+{len(s.failing_primes) - 20} more)"
        lines.append(f"  failing primes: {shown}{more}")
    return "\n".join(lines)


def render_scan_record_text(r: VerificationReport) -> str:
    a, b, c, d = r.matrix.first_row()
    status = "ok" if r.all_pass else "FAIL"
    return (
        f"p={r.p} g={r.g} parity={r.two_parity} row=({a},{b},{c},{d}) "
        f"form={r.form} latin={str(r.is_latin).lower()} sum={r.sum_bruteforce} {status}"
    )
