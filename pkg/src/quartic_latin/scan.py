"""Exhaustive range scans over primes p = 5 (mod 8)."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .nt_core import Prime5Mod8, primes_5mod8
from .theorems import VerificationReport, check_generator_independence, verify_prime

# Full generator enumeration per prime stays cheap only for small p.
DEEP_LIMIT = 3000

# Ranges past this need an explicit opt-in; the per-prime work is O(p).
SCAN_SOFT_CAP = 10**6


@dataclass
class ScanSummary:
    lo: int
    hi: int
    primes_checked: int
    failures: int
    latin_count: int
    elapsed: float
    check_tallies: dict[str, int] = field(default_factory=dict)
    failing_primes: list[int] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "primes_checked": self.primes_checked,
            "failures": self.failures,
            "latin_count": self.latin_count,
            "elapsed_seconds": round(self.elapsed, 3),
            "check_tallies": dict(self.check_tallies),
            "failing_primes": list(self.failing_primes),
        }


def _verify_one(args: tuple[int, bool]) -> VerificationReport:
    p, deep = args
    prime = Prime5Mod8.from_prime(p)
    report = verify_prime(prime)
    if deep and p <= DEEP_LIMIT:
        checks, notes = check_generator_independence(prime)
        report.checks.update(checks)
        report.counterexamples.update(notes)
    return report


def scan_range(
    lo: int, hi: int, jobs: int = 1, deep: bool = False
) -> tuple[list[VerificationReport], ScanSummary]:
    """Verify every prime p = 5 (mod 8) with lo <= p <= hi, in order."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    start = time.perf_counter()
    work = [(q.p, deep) for q in primes_5mod8(lo, hi)]
    if jobs > 1 and len(work) > 1:
        chunk = max(1, len(work) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_one, work, chunksize=chunk))
    else:
        reports = [_verify_one(w) for w in work]
    elapsed = time.perf_counter() - start

    tallies: dict[str, int] = {}
    failing = []
    latin = 0
    for r in reports:
        latin += r.is_latin
        if not r.all_pass:
            failing.append(r.p)
        for name, ok in r.checks.items():
            tallies[name] = tallies.get(name, 0) + bool(ok)
    summary = ScanSummary(
        lo=lo, hi=hi, primes_checked=len(reports), failures=len(failing),
        latin_count=latin, elapsed=elapsed, check_tallies=tallies,
        failing_primes=failing,
    )
    return reports, summary
