"""Per-prime context: orders, primitive roots, discrete logs, range scans.

A PrimeContext fixes the reference primitive root tau = g(p) (the least
one) that every downstream representation uses: discrete logs are taken
to base tau, the root set is enumerated as {tau^n : gcd(n, p-1) = 1},
and the exponential sums walk powers of tau.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import arith, kernels
from .arith import Factorization

__all__ = [
    "Family",
    "PrimeContext",
    "ScanRecord",
    "ScanArrays",
    "build_context",
    "least_primitive_root",
    "least_prime_primitive_root",
    "multiplicative_order",
    "is_primitive_root",
    "enumerate_primitive_roots",
    "discrete_log",
    "families",
    "scan_arrays",
    "scan_range",
]


class Family(enum.Enum):
    """Structural families of p classified by the factorization of p - 1."""

    FERMAT = "F"  # p - 1 a power of two
    GERMAIN = "S"  # p - 1 = 2^a * q with q prime, a >= 1
    HIGHLY_COMPOSITE = "R"  # distinct primes of p - 1 = first omega primes

    @property
    def code(self) -> str:
        return self.value


_MASK_TO_FAMILY = (
    (kernels.FLAG_FERMAT, Family.FERMAT),
    (kernels.FLAG_GERMAIN, Family.GERMAIN),
    (kernels.FLAG_HIGHLY_COMPOSITE, Family.HIGHLY_COMPOSITE),
)


def _families_from_mask(mask: int) -> frozenset[Family]:
    return frozenset(fam for bit, fam in _MASK_TO_FAMILY if mask & bit)


def families(p: int) -> frozenset[Family]:
    """Family flags of an odd prime p, from the factorization of p - 1."""
    if p < 3 or not arith.is_prime(p):
        raise ValueError(f"families needs an odd prime, got {p}")
    f = arith.factorize(p - 1)
    qs = f.distinct_primes
    es = tuple(e for _, e in f.factors)
    mask = 0
    if qs == (2,):
        mask |= kernels.FLAG_FERMAT
        if es[0] >= 2:
            mask |= kernels.FLAG_GERMAIN
    if len(qs) == 2 and qs[0] == 2 and es[1] == 1:
        mask |= kernels.FLAG_GERMAIN
    first = tuple(int(q) for q in arith.prime_table(200).primes[: len(qs)])
    if qs == first:
        mask |= kernels.FLAG_HIGHLY_COMPOSITE
    return _families_from_mask(mask)


@dataclass
class PrimeContext:
    """Immutable facts about one prime, plus lazy lookup caches."""

    p: int
    tau: int  # reference primitive root: the least one
    pm1: Factorization  # factorization of p - 1
    phi_pm1: int  # phi(p - 1) = number of primitive roots

    _powers: np.ndarray | None = field(default=None, repr=False, compare=False)
    _indicator: np.ndarray | None = field(default=None, repr=False, compare=False)
    _baby: dict[int, int] | None = field(default=None, repr=False, compare=False)
    _baby_m: int = field(default=0, repr=False, compare=False)

    def powers(self) -> np.ndarray:
        """tau^n mod p for n = 1..p-1 (cached int64 array, index n-1)."""
        if self._powers is None:
            self._powers = kernels.power_table(self.p, self.tau)
            self._powers.setflags(write=False)
        return self._powers

    def indicator(self) -> np.ndarray:
        """uint8 field over [0, p): 1 exactly at the primitive roots (cached)."""
        if self._indicator is None:
            self._indicator = kernels.psi_indicator(self.p, self.tau)
            self._indicator.setflags(write=False)
        return self._indicator


def least_primitive_root(p: int) -> int:
    """g(p): the least u >= 1 generating the full multiplicative group."""
    if not arith.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 2:
        return 1
    exps = [(p - 1) // q for q in arith.factorize(p - 1).distinct_primes]
    u = 2
    while True:
        if all(pow(u, e, p) != 1 for e in exps):
            return u
        u += 1


def least_prime_primitive_root(p: int) -> int:
    """g*(p): the least prime primitive root of an odd prime p."""
    if p < 3 or not arith.is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    exps = [(p - 1) // q for q in arith.factorize(p - 1).distinct_primes]
    for cand in arith.prime_table(p).primes:
        cand = int(cand)
        if cand >= p:
            break
        if all(pow(cand, e, p) != 1 for e in exps):
            return cand
    raise AssertionError(f"no prime primitive root below {p}")


def build_context(p: int) -> PrimeContext:
    """Validate p prime and assemble the context with tau = g(p)."""
    if not arith.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    pm1 = arith.factorize(p - 1)
    return PrimeContext(
        p=p,
        tau=least_primitive_root(p),
        pm1=pm1,
        phi_pm1=arith.totient(pm1),
    )


def _check_unit(ctx: PrimeContext, u: int) -> int:
    u %= ctx.p
    if u == 0:
        raise ValueError(f"u must be a unit mod {ctx.p}, got u = 0")
    return u


def multiplicative_order(ctx: PrimeContext, u: int) -> int:
    """ord_p(u), by stripping primes from p - 1 while the power stays 1."""
    u = _check_unit(ctx, u)
    k = ctx.p - 1
    for q in ctx.pm1.distinct_primes:
        while k % q == 0 and pow(u, k // q, ctx.p) == 1:
            k //= q
    return k


def is_primitive_root(ctx: PrimeContext, u: int) -> bool:
    """True iff ord_p(u) = p - 1, tested via the prime divisors of p - 1."""
    u = _check_unit(ctx, u)
    return all(pow(u, (ctx.p - 1) // q, ctx.p) != 1 for q in ctx.pm1.distinct_primes)


def enumerate_primitive_roots(ctx: PrimeContext) -> np.ndarray:
    """All primitive roots of p, ascending: {tau^n : gcd(n, p-1) = 1}."""
    return np.flatnonzero(ctx.indicator()).astype(np.int64)


def discrete_log(ctx: PrimeContext, u: int) -> int:
    """The exponent m in [0, p-2] with tau^m = u mod p (baby-step giant-step)."""
    u = _check_unit(ctx, u)
    p = ctx.p
    if p == 2:
        return 0
    if ctx._baby is None:
        m = math.isqrt(p - 2) + 1  # ceil(sqrt(p - 1))
        baby = {}
        cur = 1
        for j in range(m):
            baby.setdefault(cur, j)
            cur = cur * ctx.tau % p
        ctx._baby = baby
        ctx._baby_m = m
    baby, m = ctx._baby, ctx._baby_m
    giant = pow(ctx.tau, -m, p)
    gamma = u
    for i in range((p - 2) // m + 1):
        if gamma in baby:
            return i * m + baby[gamma]
        gamma = gamma * giant % p
    raise AssertionError(f"discrete log of {u} mod {p} not found; context corrupt")


@dataclass(frozen=True)
class ScanArrays:
    """Column-oriented scan output for bulk consumers (arrays aligned)."""

    ps: np.ndarray  # odd primes scanned
    g: np.ndarray  # least primitive root
    g_star: np.ndarray  # least prime primitive root
    phi_pm1: np.ndarray
    omega_pm1: np.ndarray
    flags: np.ndarray  # uint8 family bitmask


@dataclass(frozen=True)
class ScanRecord:
    """One prime's row in a range scan."""

    p: int
    g: int
    g_star: int
    phi_pm1: int
    ratio: float  # phi(p-1)/(p-1), the density of primitive roots
    omega_pm1: int
    gap: int  # g_star - g >= 0
    families: frozenset[Family]


def scan_arrays(p_min: int, p_max: int) -> ScanArrays:
    """Sweep all odd primes in [p_min, p_max] with the kernel backend."""
    if not 3 <= p_min <= p_max:
        raise ValueError(f"need 3 <= p_min <= p_max, got [{p_min}, {p_max}]")
    table = arith.prime_table(p_max)
    primes = table.primes
    lo = np.searchsorted(primes, p_min, side="left")
    hi = np.searchsorted(primes, p_max, side="right")
    ps = primes[lo:hi]
    spf = kernels.spf_table(max(p_max, 2))
    g, g_star, phi, om, fl = kernels.prime_scan(ps, spf, primes)
    return ScanArrays(ps=ps, g=g, g_star=g_star, phi_pm1=phi, omega_pm1=om, flags=fl)


def scan_range(p_min: int, p_max: int) -> list[ScanRecord]:
    """ScanRecord rows for all odd primes in [p_min, p_max], ascending."""
    arr = scan_arrays(p_min, p_max)
    out = []
    for i in range(len(arr.ps)):
        p = int(arr.ps[i])
        g = int(arr.g[i])
        gs = int(arr.g_star[i])
        phi = int(arr.phi_pm1[i])
        out.append(
            ScanRecord(
                p=p,
                g=g,
                g_star=gs,
                phi_pm1=phi,
                ratio=phi / (p - 1),
                omega_pm1=int(arr.omega_pm1[i]),
                gap=gs - g,
                families=_families_from_mask(int(arr.flags[i])),
            )
        )
    return out
