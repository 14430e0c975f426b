"""Exact integer arithmetic: primality, factorization, generators, quartic classes.

Everything in this module is pure Python big-int arithmetic and stays exact
for primes up to 2**62. The O(p) counting work lives in the kernels package.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator

MAX_PRIME = 1 << 62

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# enumerate_generators walks all p-1 powers of a primitive root in Python.
GENERATOR_ENUM_LIMIT = 10**7

_SIEVE_SEGMENT = 1 << 20


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus, exact at any size."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 2**62."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime5Mod8:
    """A prime p = 8n + 5 together with the derived constants n and m = (p-1)/4."""

    p: int
    n: int
    m: int

    def __post_init__(self) -> None:
        if not 5 <= self.p <= MAX_PRIME:
            raise ValueError(f"p must lie in [5, 2**62], got {self.p}")
        if self.p % 8 != 5:
            raise ValueError(f"p = {self.p} is {self.p % 8} (mod 8), need 5 (mod 8)")
        if self.p != 8 * self.n + 5 or self.p - 1 != 4 * self.m:
            raise ValueError(f"inconsistent constants for p = {self.p}: n={self.n} m={self.m}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def from_prime(cls, p: int) -> "Prime5Mod8":
        return cls(p, (p - 5) // 8, (p - 1) // 4)


@dataclass(frozen=True)
class GeneratorInfo:
    """A primitive root g mod p and the quartic class of 2 with respect to it."""

    g: int
    two_parity: int

    def __post_init__(self) -> None:
        if self.two_parity not in (1, 3):
            raise ValueError(f"two_parity must be 1 or 3, got {self.two_parity}")


@dataclass(frozen=True)
class QuarticClassifier:
    """Lookup table sending x**m mod p to the quartic class index of x."""

    p: int
    m: int
    zeta: int
    class_table: dict[int, int] = field(compare=False)


@dataclass(frozen=True)
class Factorization:
    """Sorted (prime, multiplicity) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def product(self) -> int:
        out = 1
        for q, e in self.pairs:
            out *= q**e
        return out

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.pairs)


def _rho_brent(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n."""
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Factorization:
    """Full factorization by trial division plus Pollard rho for large cofactors."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    counts: dict[int, int] = {}
    for q in (2, 3, 5):
        while n % q == 0:
            counts[q] = counts.get(q, 0) + 1
            n //= q
    q = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while q * q <= n and q < 10**6:
        while n % q == 0:
            counts[q] = counts.get(q, 0) + 1
            n //= q
        q += wheel[w]
        w = (w + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _rho_brent(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(tuple(sorted(counts.items())))


def _small_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [i for i, v in enumerate(sieve) if v]


def primes_5mod8(lo: int, hi: int) -> Iterator[Prime5Mod8]:
    """Stream every prime p = 5 (mod 8) with lo <= p <= hi, in increasing order."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi > MAX_PRIME:
        raise ValueError(f"hi must be <= 2**62, got {hi}")
    lo = max(lo, 5)
    if lo > hi:
        return
    if math.isqrt(hi) <= 10**7:
        base = _small_primes(math.isqrt(hi))
        for seg_lo in range(lo, hi + 1, _SIEVE_SEGMENT):
            seg_hi = min(seg_lo + _SIEVE_SEGMENT - 1, hi)
            mask = bytearray([1]) * (seg_hi - seg_lo + 1)
            for q in base:
                start = max(q * q, (seg_lo + q - 1) // q * q)
                if start > seg_hi:
                    continue
                mask[start - seg_lo :: q] = bytearray(len(mask[start - seg_lo :: q]))
            first = seg_lo + (5 - seg_lo) % 8
            for x in range(first, seg_hi + 1, 8):
                if mask[x - seg_lo]:
                    yield Prime5Mod8.from_prime(x)
    else:
        first = lo + (5 - lo) % 8
        for x in range(first, hi + 1, 8):
            if is_prime(x):
                yield Prime5Mod8.from_prime(x)


def _classifier_for(p: Prime5Mod8, g: int) -> QuarticClassifier:
    zeta = pow(g, p.m, p.p)
    if zeta * zeta % p.p != p.p - 1:
        raise RuntimeError(f"g={g} is not a primitive root mod {p.p}: zeta**2 != -1")
    table = {1: 0, zeta: 1, p.p - 1: 2, p.p - zeta: 3}
    return QuarticClassifier(p.p, p.m, zeta, table)


def make_classifier(p: Prime5Mod8, g: GeneratorInfo) -> QuarticClassifier:
    """Quartic class lookup for the generator g: class of x is the i with x**m = zeta**i."""
    return _classifier_for(p, g.g)


def classify(x: int, clf: QuarticClassifier) -> int:
    """Quartic class index of x in {0, 1, 2, 3} via one modular power."""
    if not 1 <= x < clf.p:
        raise ValueError(f"x must lie in [1, p-1], got x={x}, p={clf.p}")
    t = pow(x, clf.m, clf.p)
    try:
        return clf.class_table[t]
    except KeyError:
        raise RuntimeError(f"x**m = {t} is outside the classifier table for p={clf.p}") from None


def is_primitive_root(p: Prime5Mod8, g: int) -> bool:
    if not 1 <= g < p.p:
        return False
    order = p.p - 1
    fac = factorize(order)
    return all(pow(g, order // q, p.p) != 1 for q in fac.distinct_primes())


def _two_parity_for(p: Prime5Mod8, g: int) -> int:
    clf = _classifier_for(p, g)
    parity = classify(2, clf)
    if parity not in (1, 3):
        raise RuntimeError(f"2 fell into even quartic class {parity} mod {p.p}")
    return parity


def generator_info(p: Prime5Mod8, g: int) -> GeneratorInfo:
    """Validate g as a primitive root mod p and attach the class of 2."""
    if not is_primitive_root(p, g):
        raise ValueError(f"g={g} is not a primitive root mod {p.p}")
    return GeneratorInfo(g, _two_parity_for(p, g))


def find_primitive_root(p: Prime5Mod8) -> GeneratorInfo:
    """Smallest primitive root mod p, with the quartic class of 2."""
    order = p.p - 1
    fac = factorize(order)
    exps = [order // q for q in fac.distinct_primes()]
    g = 2
    while any(pow(g, e, p.p) == 1 for e in exps):
        g += 1
    return GeneratorInfo(g, _two_parity_for(p, g))


def inverse_generator(p: Prime5Mod8, g: GeneratorInfo) -> GeneratorInfo:
    """The inverse primitive root g**-1 mod p with its own measured parity."""
    g_inv = pow(g.g, -1, p.p)
    return GeneratorInfo(g_inv, _two_parity_for(p, g_inv))


def enumerate_generators(p: Prime5Mod8) -> list[GeneratorInfo]:
    """All phi(p-1) primitive roots mod p, ascending. Guarded to p <= 10**7."""
    if p.p > GENERATOR_ENUM_LIMIT:
        raise ValueError(f"generator enumeration is limited to p <= {GENERATOR_ENUM_LIMIT}, got {p.p}")
    g0 = find_primitive_root(p)
    order = p.p - 1
    t2 = pow(2, p.m, p.p)
    out = []
    x = 1
    for t in range(1, order):
        x = x * g0.g % p.p
        if math.gcd(t, order) != 1:
            continue
        zeta = pow(x, p.m, p.p)
        if t2 == zeta:
            parity = 1
        elif t2 == p.p - zeta:
            parity = 3
        else:
            raise RuntimeError(f"2**m = {t2} matches neither zeta nor -zeta for g={x} mod {p.p}")
        out.append(GeneratorInfo(x, parity))
    out.sort(key=lambda gi: gi.g)
    return out
