"""Primes, factorization, and unitary divisor structure.

One global smallest-prime-factor table serves the whole package. It is built
lazily to the configured limit (UNITARY_SIEVE_LIMIT env var, default 10**7),
grown on demand when a batch operation needs a larger range, and immutable
between growths; factorize falls back to 6k+-1 trial division above the table.
"""

from __future__ import annotations

import math
import os
import threading
from typing import NamedTuple

import numpy as np

from . import kernels

DEFAULT_SIEVE_LIMIT = 10**7
SIEVE_LIMIT_ENV = "UNITARY_SIEVE_LIMIT"

# ((p, v), ...) with primes ascending; () is n = 1
Factorization = tuple[tuple[int, int], ...]


class CoprimeTriple(NamedTuple):
    """a = p*n, b = p*q with gcd(n, q) = 1; the unique such triple (p = gcd)."""

    p: int
    n: int
    q: int


# reentrant: split_tables builds its tables while holding the lock and calls
# spf_table, which locks again on the same thread
_lock = threading.RLock()
_spf: np.ndarray | None = None
_split: tuple[np.ndarray, np.ndarray] | None = None


def _configured_limit() -> int:
    raw = os.environ.get(SIEVE_LIMIT_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SIEVE_LIMIT
    try:
        limit = int(raw)
    except ValueError as exc:
        raise ValueError(f"{SIEVE_LIMIT_ENV} must be an integer, got {raw!r}") from exc
    return max(limit, 10)


def spf_table(minimum: int = 0) -> np.ndarray:
    """The global SPF table, covering at least 0..minimum."""
    global _spf
    table = _spf
    if table is not None and table.shape[0] > minimum:
        return table
    with _lock:
        table = _spf
        if table is None or table.shape[0] <= minimum:
            _spf = kernels.build_spf(max(_configured_limit(), minimum))
        return _spf


def split_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(component, cofactor) views for 0..n; cached at the largest size built."""
    global _split
    cached = _split
    if cached is not None and cached[0].shape[0] > n:
        return cached[0][: n + 1], cached[1][: n + 1]
    with _lock:
        cached = _split
        if cached is None or cached[0].shape[0] <= n:
            _split = kernels.split_tables(spf_table(n), n)
        comp, cof = _split
        return comp[: n + 1], cof[: n + 1]


def sieve_primes(limit: int) -> list[int]:
    """Primes <= limit, ascending (empty for limit < 2)."""
    return prime_array(limit).tolist()


def prime_array(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    spf = spf_table(limit)
    idx = np.arange(2, limit + 1, dtype=np.int64)
    return idx[spf[2 : limit + 1] == idx]


def prime_powers(limit: int):
    """Yield (p, v, p**v) for every prime power <= limit, grouped by p."""
    for p in prime_array(limit):
        p = int(p)
        q, v = p, 1
        while q <= limit:
            yield p, v, q
            q *= p
            v += 1


def factorize(n: int) -> Factorization:
    """Canonical prime decomposition of n >= 1; () for n = 1."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return ()
    spf = spf_table()
    factors: list[tuple[int, int]] = []
    if n < spf.shape[0]:
        m = n
        while m > 1:
            p = int(spf[m])
            v = 0
            while m % p == 0:
                m //= p
                v += 1
            factors.append((p, v))
        return tuple(factors)
    return _factorize_trial(n)


def _factorize_trial(n: int) -> Factorization:
    factors = []
    for p in (2, 3):
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        if v:
            factors.append((p, v))
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            v = 0
            while n % p == 0:
                n //= p
                v += 1
            if v:
                factors.append((p, v))
        d += 6
    if n > 1:
        factors.append((n, 1))
    return tuple(sorted(factors))


def omega(n: int) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    return len(factorize(n))


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    spf = spf_table()
    if n < spf.shape[0]:
        return int(spf[n]) == n
    f = _factorize_trial(n)
    return f == ((n, 1),)


def valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n (0 when p does not divide n)."""
    if n < 1:
        raise ValueError(f"valuation requires n >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime p, got {p}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("gcd is defined here for positive integers")
    return math.gcd(a, b)


def coprime_decompose(a: int, b: int) -> CoprimeTriple:
    """The unique (p, n, q) with a = p*n, b = p*q, gcd(n, q) = 1."""
    p = gcd(a, b)
    return CoprimeTriple(p, a // p, b // p)


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    out = [1]
    for p, v in factorize(n):
        powers = [p**w for w in range(1, v + 1)]
        out += [d * q for d in out for q in powers]
    return sorted(out)


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """All ordered pairs (a, b) with a*b = n, ascending in a."""
    return [(d, n // d) for d in divisors(n)]


def unitary_divisor_pairs(n: int) -> list[tuple[int, int]]:
    """The 2^omega(n) ordered pairs (a, b) with a*b = n and gcd(a, b) = 1."""
    if n < 1:
        raise ValueError(f"unitary_divisor_pairs requires n >= 1, got {n}")
    parts = [1]
    for p, v in factorize(n):
        q = p**v
        parts += [d * q for d in parts]
    return [(a, n // a) for a in sorted(parts)]
