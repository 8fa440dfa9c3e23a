"""Distribution statistics: Euler products, empirical averages, gaps.

The two constants of interest are the density average
    A = prod over primes (1 - 1/(p(p-1))) = 0.3739558136...
(the mean of phi(p-1)/(p-1)) and the gap-scale constant
    B = prod over primes (1 + 1/(p-1)^2) = 2.8263840942...
(the mean of (p-1)/phi(p-1)).  Both products run over all primes
including 2; the empirical averages run over odd primes only, since
p = 2 has a trivial unit group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arith
from .expsum import SumValue, compensated_complex_sum
from .primctx import PrimeContext, enumerate_primitive_roots

__all__ = [
    "EULER_GAMMA",
    "ARTIN_REF",
    "GAP_REF",
    "ConstantEstimate",
    "mertens_product",
    "mertens_normalized",
    "artin_product",
    "artin_empirical",
    "gap_product",
    "gap_empirical",
    "gap_sequence",
    "GapSummary",
    "gap_summary",
    "weyl_sum",
    "WindowHistogram",
    "poisson_windows",
]

# Euler-Mascheroni constant, 20 digits.
EULER_GAMMA = 0.57721566490153286061

# Reference values for the two Euler products.
ARTIN_REF = 0.3739558136
GAP_REF = 2.82638409425598556075406


@dataclass(frozen=True)
class ConstantEstimate:
    """A computed constant next to its reference value."""

    name: str
    x_cutoff: int
    computed: float
    reference: float
    abs_error: float


def _estimate(name: str, x: int, computed: float, reference: float) -> ConstantEstimate:
    return ConstantEstimate(
        name=name, x_cutoff=x, computed=computed, reference=reference,
        abs_error=abs(computed - reference),
    )


def _primes_to(x: int) -> np.ndarray:
    if x < 2:
        raise ValueError(f"cutoff must be >= 2, got {x}")
    t = arith.prime_table(x)
    return t.primes[t.primes <= x]


def mertens_product(x: int) -> ConstantEstimate:
    """prod over p <= x of (1 - 1/p), against its 1/(e^gamma log x) asymptote."""
    terms = 1.0 - 1.0 / _primes_to(x).astype(np.float64)
    computed = float(np.multiply.reduce(terms))
    reference = 1.0 / (math.exp(EULER_GAMMA) * math.log(x))
    return _estimate("mertens-product", x, computed, reference)


def mertens_normalized(x: int) -> ConstantEstimate:
    """e^gamma * log x * prod(1 - 1/p), which tends to 1."""
    est = mertens_product(x)
    computed = math.exp(EULER_GAMMA) * math.log(x) * est.computed
    return _estimate("mertens-normalized", x, computed, 1.0)


def artin_product(x: int) -> ConstantEstimate:
    """prod over p <= x (all primes, 2 included) of (1 - 1/(p(p-1)))."""
    pf = _primes_to(x).astype(np.float64)
    computed = float(np.multiply.reduce(1.0 - 1.0 / (pf * (pf - 1.0))))
    return _estimate("artin-product", x, computed, ARTIN_REF)


def artin_empirical(x: int) -> ConstantEstimate:
    """Mean of phi(p-1)/(p-1) over odd primes p <= x."""
    if x < 3:
        raise ValueError(f"empirical average needs x >= 3, got {x}")
    ps = _primes_to(x)
    ps = ps[ps > 2]
    phi = arith.totient_table(int(ps.max()))
    ratios = phi[ps - 1] / (ps - 1).astype(np.float64)
    return _estimate("artin-empirical", x, float(ratios.mean()), ARTIN_REF)


def gap_product(x: int) -> ConstantEstimate:
    """prod over p <= x (all primes, 2 included) of (1 + 1/(p-1)^2)."""
    pf = _primes_to(x).astype(np.float64)
    computed = float(np.multiply.reduce(1.0 + 1.0 / (pf - 1.0) ** 2))
    return _estimate("gap-product", x, computed, GAP_REF)


def gap_empirical(x: int) -> ConstantEstimate:
    """Mean of (p-1)/phi(p-1) over odd primes p <= x."""
    if x < 3:
        raise ValueError(f"empirical average needs x >= 3, got {x}")
    ps = _primes_to(x)
    ps = ps[ps > 2]
    phi = arith.totient_table(int(ps.max()))
    ratios = (ps - 1).astype(np.float64) / phi[ps - 1]
    return _estimate("gap-empirical", x, float(ratios.mean()), GAP_REF)


def gap_sequence(ctx: PrimeContext) -> np.ndarray:
    """Differences between consecutive primitive roots of p, ascending."""
    return np.diff(enumerate_primitive_roots(ctx))


@dataclass(frozen=True)
class GapSummary:
    p: int
    count: int  # number of gaps = phi(p-1) - 1
    mean: float
    max: int
    normalized_mean: float  # mean / ((p-1)/phi(p-1)), about 1


def gap_summary(ctx: PrimeContext) -> GapSummary:
    gaps = gap_sequence(ctx)
    if len(gaps) == 0:
        return GapSummary(p=ctx.p, count=0, mean=0.0, max=0, normalized_mean=0.0)
    mean = float(gaps.mean())
    scale = (ctx.p - 1) / ctx.phi_pm1
    return GapSummary(
        p=ctx.p, count=len(gaps), mean=mean, max=int(gaps.max()),
        normalized_mean=mean / scale,
    )


def weyl_sum(ctx: PrimeContext, t: int) -> SumValue:
    """(1/p) * sum of e(2 pi i g_n / p) over the first t primitive roots.

    g_1 < g_2 < ... are the primitive roots in ascending order; magnitudes
    near 0 indicate equidistribution.  Soft statistic: no a-priori bound.
    """
    roots = enumerate_primitive_roots(ctx)
    if not 1 <= t <= len(roots):
        raise ValueError(f"need 1 <= t <= {len(roots)}, got t = {t}")
    total, res = compensated_complex_sum(
        np.exp((2j * np.pi / ctx.p) * roots[:t])
    )
    total /= ctx.p
    return SumValue(
        real=total.real, imag=total.imag, term_count=t, residual=res / ctx.p
    )


@dataclass(frozen=True)
class WindowHistogram:
    """Primitive-root counts in consecutive windows vs a Poisson law.

    The field [1, p-1] is cut into full windows of length
    round(lam * (p-1)/phi(p-1)); the histogram of per-window counts is
    compared against Poisson(lam) truncated at k_max = ceil(10 lam),
    excess mass on both sides lumped into a tail bucket.
    """

    p: int
    lam: float
    window_length: int
    window_count: int
    k_max: int
    counts: tuple[int, ...]  # windows with exactly k roots, k = 0..k_max
    tail_count: int  # windows with more than k_max roots
    tv_distance: float


def poisson_windows(ctx: PrimeContext, lam: float) -> WindowHistogram:
    """Histogram window counts and their total-variation gap to Poisson(lam)."""
    if not lam > 0:
        raise ValueError(f"lambda must be > 0, got {lam}")
    p = ctx.p
    mean_gap = (p - 1) / ctx.phi_pm1
    length = round(lam * mean_gap)
    if length < 1:
        raise ValueError(f"window length rounds to {length}; lambda too small")
    if length >= p - 1:
        raise ValueError(f"window length {length} must be < p - 1 = {p - 1}")
    nwin = (p - 1) // length
    ind = ctx.indicator()
    counts_per_window = np.add.reduceat(
        ind[1 : 1 + nwin * length].astype(np.int64),
        np.arange(0, nwin * length, length),
    )
    k_max = math.ceil(10 * lam)
    hist = np.bincount(counts_per_window, minlength=k_max + 1)
    counts = hist[: k_max + 1]
    tail = int(hist[k_max + 1 :].sum())
    emp = counts / nwin
    pois = np.array([math.exp(-lam) * lam**k / math.factorial(k) for k in range(k_max + 1)])
    tv = 0.5 * (
        float(np.abs(emp - pois).sum())
        + abs(tail / nwin - max(0.0, 1.0 - float(pois.sum())))
    )
    return WindowHistogram(
        p=p, lam=lam, window_length=length, window_count=int(nwin),
        k_max=k_max, counts=tuple(int(c) for c in counts), tail_count=tail,
        tv_distance=tv,
    )
