"""Exponential sums over primitive roots and their a-priori bounds.

Covers the complete geometric sum over the field, incomplete and
coprime-filtered power sums e(b tau^n / p), the auxiliary-modulus kernel
sums in a q-th root of unity (with closed-form and Moebius-factored
evaluations), the mixed Gauss-type sum, and the gap S_b - S_1.

Each result carries the bound it is measured against as data
(apriori_bound, bound_name); asserting is the caller's business.  The
kernel-sum bounds scale like q/t and are only provable for t <= q/2;
they are still reported outside that range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arith
from .primctx import PrimeContext, enumerate_primitive_roots

__all__ = [
    "SumValue",
    "compensated_complex_sum",
    "complete_geometric_sum",
    "incomplete_power_sum",
    "coprime_filtered_sum",
    "kernel_full_sum",
    "kernel_full_sum_direct",
    "kernel_coprime_sum",
    "kernel_coprime_sum_direct",
    "gauss_mixed_sum",
    "equivalence_gap",
    "BOUND_INCOMPLETE",
    "BOUND_COPRIME",
    "BOUND_KERNEL_FULL",
    "BOUND_KERNEL_COPRIME",
    "BOUND_GAUSS",
    "BOUND_GAP",
]

# Bound labels are artifact-format identifiers; downstream tables key on them.
BOUND_INCOMPLETE = "Thm3.2"  # sqrt(p) log^2 p
BOUND_COPRIME = "Thm3.4"  # sqrt(p) log^3 p
BOUND_KERNEL_FULL = "L333.20"  # 2q / (pi t)
BOUND_KERNEL_COPRIME = "L333.24"  # 4q loglog p / (pi t)
BOUND_GAUSS = "L333.27"  # 2 sqrt(q) log q (reported, not asserted)
BOUND_GAP = "L333.22"  # 16 sqrt(p) log^3 p

_CHUNK = 1 << 16


@dataclass(frozen=True)
class SumValue:
    """A complex sum with its provenance-free audit fields."""

    real: float
    imag: float
    term_count: int
    apriori_bound: float | None = None
    bound_name: str | None = None
    degenerate: bool = False
    residual: float = 0.0  # accumulated compensation magnitude

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def margin(self) -> float | None:
        """apriori_bound - magnitude; positive means the bound holds."""
        if self.apriori_bound is None:
            return None
        return self.apriori_bound - self.magnitude

    @property
    def within_bound(self) -> bool | None:
        m = self.margin
        return None if m is None else m >= 0


def compensated_complex_sum(values: np.ndarray) -> tuple[complex, float]:
    """Chunked pairwise partial sums merged with Kahan compensation.

    Returns (total, residual) where residual is the magnitude of the
    final unapplied compensation, a cheap honesty signal about rounding.
    """
    s_re = s_im = 0.0
    c_re = c_im = 0.0
    for lo in range(0, len(values), _CHUNK):
        part = values[lo : lo + _CHUNK].sum()
        y = part.real - c_re
        t = s_re + y
        c_re = (t - s_re) - y
        s_re = t
        y = part.imag - c_im
        t = s_im + y
        c_im = (t - s_im) - y
        s_im = t
    return complex(s_re, s_im), abs(complex(c_re, c_im))


def _unit_phases(numerators: np.ndarray, denominator: int) -> np.ndarray:
    """e(2 pi i k / den) for an int64 numerator array, argument-reduced."""
    return np.exp((2j * np.pi / denominator) * (numerators % denominator))


def complete_geometric_sum(p: int, b: int) -> SumValue:
    """Direct sum of e(2 pi i b v / p) over all units v; equals -1 for b != 0.

    b = 0 mod p is the degenerate ray: every term is 1 and the sum is p - 1.
    """
    if not arith.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    b %= p
    if b == 0:
        return SumValue(real=float(p - 1), imag=0.0, term_count=p - 1, degenerate=True)
    s = 0j
    res = 0.0
    for lo in range(1, p, _CHUNK):
        v = np.arange(lo, min(lo + _CHUNK, p), dtype=np.int64)
        part, r = compensated_complex_sum(_unit_phases(b * v, p))
        s += part
        res += r
    return SumValue(real=s.real, imag=s.imag, term_count=p - 1, residual=res)


def incomplete_power_sum(ctx: PrimeContext, b: int, x: int) -> SumValue:
    """Sum of e(2 pi i b tau^n / p) for n = 1..x, against sqrt(p) log^2 p."""
    p = ctx.p
    if not 1 <= x <= p - 1:
        raise ValueError(f"need 1 <= x <= p - 1, got x = {x}")
    bound = math.sqrt(p) * math.log(p) ** 2
    b %= p
    if b == 0:
        return SumValue(
            real=float(x), imag=0.0, term_count=x,
            apriori_bound=bound, bound_name=BOUND_INCOMPLETE, degenerate=True,
        )
    total, res = compensated_complex_sum(_unit_phases(b * ctx.powers()[:x], p))
    return SumValue(
        real=total.real, imag=total.imag, term_count=x,
        apriori_bound=bound, bound_name=BOUND_INCOMPLETE, residual=res,
    )


def coprime_filtered_sum(ctx: PrimeContext, b: int) -> SumValue:
    """Sum of e(2 pi i b tau^n / p) over gcd(n, p-1) = 1, vs sqrt(p) log^3 p.

    The summands run over each primitive root exactly once (ascending
    root order, a fixed permutation of the exponent order).
    """
    p = ctx.p
    bound = math.sqrt(p) * math.log(p) ** 3
    b %= p
    if b == 0:
        return SumValue(
            real=float(ctx.phi_pm1), imag=0.0, term_count=ctx.phi_pm1,
            apriori_bound=bound, bound_name=BOUND_COPRIME, degenerate=True,
        )
    roots = enumerate_primitive_roots(ctx)
    total, res = compensated_complex_sum(_unit_phases(b * roots, p))
    return SumValue(
        real=total.real, imag=total.imag, term_count=len(roots),
        apriori_bound=bound, bound_name=BOUND_COPRIME, residual=res,
    )


def _validate_kernel_args(q: int, t: int) -> int:
    if not arith.is_prime(q):
        raise ValueError(f"auxiliary modulus q must be prime, got {q}")
    if not 0 <= t <= q - 1:
        raise ValueError(f"need 0 <= t <= q - 1, got t = {t}")
    return t


def kernel_full_sum(q: int, t: int, p: int) -> SumValue:
    """Closed form of sum_{n=1}^{p-1} w^{tn}, w = e(2 pi i / q), vs 2q/(pi t).

    Geometric series: (w^t - w^{tp}) / (1 - w^t).  t = 0 is the degenerate
    ray where every term is 1.
    """
    t = _validate_kernel_args(q, t)
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if t == 0:
        return SumValue(real=float(p - 1), imag=0.0, term_count=p - 1, degenerate=True)
    bound = 2 * q / (math.pi * t)
    w_t = np.exp(2j * np.pi * t / q)
    w_tp = np.exp(2j * np.pi * ((t * p) % q) / q)
    val = (w_t - w_tp) / (1 - w_t)
    return SumValue(
        real=val.real, imag=val.imag, term_count=p - 1,
        apriori_bound=bound, bound_name=BOUND_KERNEL_FULL,
    )


def kernel_full_sum_direct(q: int, t: int, p: int) -> SumValue:
    """Term-by-term evaluation of the same sum, for cross-validation."""
    t = _validate_kernel_args(q, t)
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if t == 0:
        return SumValue(real=float(p - 1), imag=0.0, term_count=p - 1, degenerate=True)
    s = 0j
    res = 0.0
    for lo in range(1, p, _CHUNK):
        n = np.arange(lo, min(lo + _CHUNK, p), dtype=np.int64)
        part, r = compensated_complex_sum(_unit_phases(t * n, q))
        s += part
        res += r
    return SumValue(
        real=s.real, imag=s.imag, term_count=p - 1,
        apriori_bound=2 * q / (math.pi * t), bound_name=BOUND_KERNEL_FULL, residual=res,
    )


def kernel_coprime_sum(ctx: PrimeContext, q: int, t: int) -> SumValue:
    """Moebius-factored sum_{gcd(n, p-1) = 1} w^{tn} vs 4q loglog p / (pi t).

    Expands the coprimality condition through mu and sums one geometric
    series per squarefree divisor d of p - 1.
    """
    t = _validate_kernel_args(q, t)
    p = ctx.p
    if p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if t == 0:
        return SumValue(
            real=float(ctx.phi_pm1), imag=0.0, term_count=ctx.phi_pm1, degenerate=True
        )
    m = p - 1
    parts_re, parts_im = [], []
    for d in arith.divisors(ctx.pm1):
        mu = arith.moebius(d)
        if mu == 0:
            continue
        a = (d * t) % q
        if a == 0:
            term = complex(m // d, 0.0)
        else:
            w_a = np.exp(2j * np.pi * a / q)
            w_end = np.exp(2j * np.pi * ((d * t * (m // d + 1)) % q) / q)
            term = (w_a - w_end) / (1 - w_a)
        parts_re.append(mu * term.real)
        parts_im.append(mu * term.imag)
    bound = 4 * q * math.log(math.log(p)) / (math.pi * t)
    return SumValue(
        real=math.fsum(parts_re), imag=math.fsum(parts_im), term_count=ctx.phi_pm1,
        apriori_bound=bound, bound_name=BOUND_KERNEL_COPRIME,
    )


def kernel_coprime_sum_direct(ctx: PrimeContext, q: int, t: int) -> SumValue:
    """Term-by-term evaluation over the coprime exponents, for cross-validation."""
    t = _validate_kernel_args(q, t)
    p = ctx.p
    if p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if t == 0:
        return SumValue(
            real=float(ctx.phi_pm1), imag=0.0, term_count=ctx.phi_pm1, degenerate=True
        )
    n = np.arange(1, p, dtype=np.int64)
    n = n[np.gcd(n, p - 1) == 1]
    total, res = compensated_complex_sum(_unit_phases(t * n, q))
    return SumValue(
        real=total.real, imag=total.imag, term_count=len(n),
        apriori_bound=4 * q * math.log(math.log(p)) / (math.pi * t),
        bound_name=BOUND_KERNEL_COPRIME, residual=res,
    )


def gauss_mixed_sum(ctx: PrimeContext, q: int, t: int, b: int) -> SumValue:
    """sum_{s=1}^{p-1} w^{-ts} e(2 pi i b tau^s / p) vs 2 sqrt(q) log q.

    The bound is reported, never asserted.  t = 0 mod q or b = 0 mod p
    degenerates to a pure one-modulus sum and is flagged.
    """
    t = _validate_kernel_args(q, t)
    p = ctx.p
    b %= p
    degenerate = t == 0 or b == 0
    s_idx = np.arange(1, p, dtype=np.int64)
    e_q = ((-t) % q) * s_idx % q
    e_p = b * ctx.powers() % p
    phases = np.exp(2j * np.pi * (e_q / q + e_p / p))
    total, res = compensated_complex_sum(phases)
    return SumValue(
        real=total.real, imag=total.imag, term_count=p - 1,
        apriori_bound=2 * math.sqrt(q) * math.log(q), bound_name=BOUND_GAUSS,
        degenerate=degenerate, residual=res,
    )


def equivalence_gap(ctx: PrimeContext, b: int) -> SumValue:
    """S_b - S_1 for the coprime-filtered sums, vs 16 sqrt(p) log^3 p.

    Exactly zero at b = 1; the bound quantifies how far twisting by b
    can move the sum.
    """
    s_b = coprime_filtered_sum(ctx, b)
    s_1 = coprime_filtered_sum(ctx, 1)
    bound = 16 * math.sqrt(ctx.p) * math.log(ctx.p) ** 3
    return SumValue(
        real=s_b.real - s_1.real, imag=s_b.imag - s_1.imag,
        term_count=ctx.phi_pm1, apriori_bound=bound, bound_name=BOUND_GAP,
        degenerate=s_b.degenerate, residual=s_b.residual + s_1.residual,
    )
