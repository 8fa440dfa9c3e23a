"""Integer arithmetic: prime tables, factorization, multiplicative functions.

Everything downstream (orders, characters, exponential sums, interval
statistics) sits on these routines, so they are deliberately boring:
a marking sieve, trial division against a cached prime table, and the
textbook formulas for phi, mu, omega, and Lambda.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from . import kernels

__all__ = [
    "PrimeTable",
    "Factorization",
    "sieve_primes",
    "prime_table",
    "is_prime",
    "factorize",
    "totient",
    "moebius",
    "omega",
    "mangoldt",
    "divisors",
    "next_prime",
    "totient_table",
]


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to a limit, ascending."""

    limit: int
    primes: np.ndarray  # int64, ascending

    def __post_init__(self):
        self.primes.setflags(write=False)

    def __len__(self):
        return len(self.primes)

    def __contains__(self, n):
        i = np.searchsorted(self.primes, n)
        return i < len(self.primes) and int(self.primes[i]) == n


@dataclass(frozen=True)
class Factorization:
    """n = prod q^e with the (q, e) pairs in ascending prime order."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def sieve_primes(limit: int) -> PrimeTable:
    """Sieve all primes <= limit.  limit must be >= 2."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    return PrimeTable(limit=limit, primes=kernels.sieve(limit))


_cache_lock = threading.Lock()
_cached_table: PrimeTable | None = None


def prime_table(limit: int) -> PrimeTable:
    """Cached prime table covering at least `limit` (grows geometrically)."""
    global _cached_table
    limit = max(limit, 2)
    t = _cached_table
    if t is not None and t.limit >= limit:
        return t
    with _cache_lock:
        t = _cached_table
        if t is None or t.limit < limit:
            grow = max(limit, 1 << 16)
            if t is not None:
                grow = max(grow, 2 * t.limit)
            t = sieve_primes(grow)
            _cached_table = t
    return t


def is_prime(n: int) -> bool:
    """Trial-division primality against the cached prime table."""
    if n < 2:
        return False
    root = math.isqrt(n)
    for q in prime_table(max(root, 2)).primes:
        q = int(q)
        if q > root:
            break
        if n % q == 0:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division with primes up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n == 1:
        return Factorization(n=1, factors=())
    factors = []
    rem = n
    root = math.isqrt(n)
    for q in prime_table(max(root, 2)).primes:
        q = int(q)
        if q * q > rem:
            break
        if rem % q == 0:
            e = 0
            while rem % q == 0:
                rem //= q
                e += 1
            factors.append((q, e))
    if rem > 1:
        factors.append((rem, 1))
    return Factorization(n=n, factors=tuple(factors))


def totient(n: int | Factorization) -> int:
    """Euler phi(n)."""
    f = n if isinstance(n, Factorization) else factorize(n)
    r = 1
    for q, e in f:
        r *= (q - 1) * q ** (e - 1)
    return r


def moebius(n: int | Factorization) -> int:
    """Moebius mu(n): 0 on squarefull n, else (-1)^omega."""
    f = n if isinstance(n, Factorization) else factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f.factors) % 2 else 1


def omega(n: int | Factorization) -> int:
    """Number of distinct prime divisors."""
    f = n if isinstance(n, Factorization) else factorize(n)
    return len(f.factors)


def mangoldt(n: int) -> float:
    """von Mangoldt Lambda(n): log q when n = q^k, else 0 (natural log)."""
    if n < 1:
        raise ValueError(f"mangoldt needs n >= 1, got {n}")
    f = factorize(n)
    if len(f.factors) == 1:
        return math.log(f.factors[0][0])
    return 0.0


def divisors(n: int | Factorization) -> list[int]:
    """All positive divisors of n, ascending."""
    f = n if isinstance(n, Factorization) else factorize(n)
    out = [1]
    for q, e in f:
        out = [d * q**k for d in out for k in range(e + 1)]
    out.sort()
    return out


def next_prime(n: int) -> int:
    """Least prime strictly greater than n."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def totient_table(limit: int) -> np.ndarray:
    """phi(n) for all n in [0, limit] via a totient sieve (int64 array)."""
    if limit < 1:
        raise ValueError(f"totient table limit must be >= 1, got {limit}")
    phi = np.arange(limit + 1, dtype=np.int64)
    if limit >= 2:
        for p in kernels.sieve(limit):
            phi[p::p] -= phi[p::p] // p
    return phi
