"""Time the numba kernels against the pure-numpy fallback.

Runs the three hot kernels at a few prime sizes, checks that both backends
produce identical results, and prints per-kernel timings with speedups.

    python benchmarks/bench_backends.py [--repeat 3] [--max-p 999983]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from quartic_latin import kernels
from quartic_latin.nt_core import Prime5Mod8, find_primitive_root, primes_5mod8


def _largest_prime_below(hi: int) -> int:
    best = None
    for q in primes_5mod8(max(5, hi - 10**4), hi):
        best = q.p
    if best is None:
        raise SystemExit(f"no prime = 5 (mod 8) shortly below {hi}")
    return best


def _time(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-p", type=int, default=10**6)
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    sizes = sorted({hi for hi in (10**4, 10**5, args.max_p) if hi <= args.max_p})
    primes = sorted({_largest_prime_below(hi) for hi in sizes})

    # warm the JIT so compilation is not measured
    kernels.set_backend("numba")
    kernels.walk_tallies(5, 2)
    kernels.char_powers(5, 1)
    kernels.class_agreement(5, 2, kernels.classes_from_powers(kernels.char_powers(5, 1), 2, 5))

    print(f"{'kernel':<18} {'p':>9} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for p in primes:
        m = (p - 1) // 4
        g = find_primitive_root(Prime5Mod8.from_prime(p)).g

        results = {}
        for backend in ("numba", "numpy"):
            kernels.set_backend(backend)
            t_walk, walk = _time(lambda: kernels.walk_tallies(p, g), args.repeat)
            t_char, powers = _time(lambda: kernels.char_powers(p, m), args.repeat)
            zeta = int(powers[g])
            cls = kernels.classes_from_powers(powers, zeta, p)
            t_agree, bad = _time(lambda: kernels.class_agreement(p, g, cls), args.repeat)
            results[backend] = (t_walk, t_char, t_agree, walk, powers, bad)

        nb, npy = results["numba"], results["numpy"]
        assert nb[3] == npy[3], f"walk tallies disagree at p={p}"
        assert np.array_equal(nb[4], npy[4]), f"char powers disagree at p={p}"
        assert nb[5] == npy[5] == 0, f"class agreement nonzero at p={p}"

        for idx, name in enumerate(("walk_tallies", "char_powers", "class_agreement")):
            t_nb, t_np = nb[idx], npy[idx]
            print(f"{name:<18} {p:>9} {t_nb * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")
    kernels.set_backend("auto")
    print("backends agree on all kernels")


if __name__ == "__main__":
    main()
