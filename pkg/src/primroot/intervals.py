"""Interval statements: Psi sums over windows, witnesses, bound sweeps.

Windows are [M, M+N], endpoints inclusive, values reduced mod p.  A
multiple of p contributes nothing to either side: Psi(0) = 0 and the
main term counts only the window elements that are units.

The unweighted decomposition
    sum Psi(u) = (phi(p-1)/p) * #units + discrepancy
is bookkeeping (discrepancy is defined as the difference), so the checks
of substance are the witness searches and the bound sweeps built on it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import arith
from .primctx import PrimeContext, build_context, scan_arrays

__all__ = [
    "IntervalSpec",
    "IntervalReport",
    "WitnessMode",
    "interval_psi_sum",
    "interval_weighted_sum",
    "mangoldt_window",
    "LeastRootBoundReport",
    "verify_least_root_bound",
    "ShortIntervalRow",
    "ShortIntervalReport",
    "verify_short_interval_theorem",
    "PrimeWindowReport",
    "verify_prime_window_theorem",
]

_MAX_WEIGHTED_WINDOW = 1 << 26  # weighted scans materialize the window


@dataclass(frozen=True)
class IntervalSpec:
    """Window [M, M+N] (N+1 integers) and the weighting switch."""

    M: int
    N: int
    weighted: bool = False

    def __post_init__(self):
        if self.M < 0:
            raise ValueError(f"window start must be >= 0, got {self.M}")
        if self.N < 1:
            raise ValueError(f"window length parameter must be >= 1, got {self.N}")


@dataclass(frozen=True)
class IntervalReport:
    """Psi mass, main term, and witnesses of one window."""

    p: int
    M: int
    N: int
    weighted: bool
    psi_count: float  # integer-valued for unweighted runs
    main_term: float
    discrepancy: float  # psi_count - main_term by definition
    first_witness: int | None
    first_prime_witness: int | None  # weighted runs only


def _residue_window_counts(p: int, M: int, N: int) -> np.ndarray:
    """How many u in [M, M+N] hit each residue class mod p (exact, O(p))."""
    r = np.arange(p, dtype=object) if M + N > 2**62 else np.arange(p, dtype=np.int64)
    return (M + N - r) // p - (M - 1 - r) // p


def interval_psi_sum(ctx: PrimeContext, spec: IntervalSpec) -> IntervalReport:
    """Unweighted window sum of Psi, by exact residue-class counting."""
    p = ctx.p
    M, N = spec.M, spec.N
    ind = ctx.indicator()
    counts = _residue_window_counts(p, M, N)
    psi_count = int((counts * ind.astype(np.int64)).sum())
    unit_count = (N + 1) - int(counts[0])
    main_term = ctx.phi_pm1 / p * unit_count
    roots = np.flatnonzero(ind).astype(np.int64)
    witness = None
    if len(roots):
        first_hits = M + (roots - M) % p
        in_window = first_hits[first_hits <= M + N]
        if len(in_window):
            witness = int(in_window.min())
    return IntervalReport(
        p=p, M=M, N=N, weighted=False,
        psi_count=float(psi_count), main_term=main_term,
        discrepancy=psi_count - main_term,
        first_witness=witness, first_prime_witness=None,
    )


def mangoldt_window(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """(Lambda(u), u is prime) for u = lo..hi, by segmented factorization.

    Every prime q <= sqrt(hi) is stripped from its multiples; an element
    is a prime power exactly when one prime marked it and stripping that
    prime exhausts it, and a prime when nothing <= sqrt(hi) marked it.
    """
    if lo < 0 or hi < lo:
        raise ValueError(f"need 0 <= lo <= hi, got [{lo}, {hi}]")
    size = hi - lo + 1
    vals = np.arange(lo, hi + 1, dtype=np.int64)
    rem = vals.copy()
    lpf = np.zeros(size, dtype=np.int64)
    marks = np.zeros(size, dtype=np.int64)
    root = math.isqrt(max(hi, 0))
    if root >= 2:
        for q in arith.prime_table(root).primes:
            q = int(q)
            if q > root:
                break
            start = max(q, ((lo + q - 1) // q) * q)
            if start > hi:
                continue
            pos = np.arange(start - lo, size, q)
            lpf[pos[lpf[pos] == 0]] = q
            marks[pos] += 1
            sub = pos
            while len(sub):
                rem[sub] //= q
                sub = sub[rem[sub] % q == 0]
    lam = np.zeros(size, dtype=np.float64)
    one_prime_power = (marks == 1) & (rem == 1)
    lam[one_prime_power] = np.log(lpf[one_prime_power])
    unmarked_prime = (marks == 0) & (vals >= 2)
    lam[unmarked_prime] = np.log(vals[unmarked_prime])
    is_prime = unmarked_prime | (one_prime_power & (vals == lpf))
    return lam, is_prime


def interval_weighted_sum(ctx: PrimeContext, spec: IntervalSpec) -> IntervalReport:
    """Lambda-weighted window sum of Psi, with prime-power/prime witnesses."""
    p = ctx.p
    M, N = spec.M, spec.N
    if N + 1 > _MAX_WEIGHTED_WINDOW:
        raise ValueError(f"weighted window too large: {N + 1} > {_MAX_WEIGHTED_WINDOW}")
    ind = ctx.indicator()
    u = np.arange(M, M + N + 1, dtype=np.int64)
    lam, u_prime = mangoldt_window(M, M + N)
    res = u % p
    is_unit = res != 0
    hits = ind[res].astype(bool) & is_unit
    psi_count = float(np.dot(lam, hits))
    lam_units = float(np.dot(lam, is_unit))
    main_term = ctx.phi_pm1 / p * lam_units
    witness_idx = np.flatnonzero(hits & (lam > 0))
    prime_idx = np.flatnonzero(hits & u_prime)
    return IntervalReport(
        p=p, M=M, N=N, weighted=True,
        psi_count=psi_count, main_term=main_term,
        discrepancy=psi_count - main_term,
        first_witness=int(u[witness_idx[0]]) if len(witness_idx) else None,
        first_prime_witness=int(u[prime_idx[0]]) if len(prime_idx) else None,
    )


@dataclass(frozen=True)
class LeastRootBoundReport:
    """Sweep of g(p) < sqrt(p) - 2 over a prime range."""

    p_min: int
    p_max: int
    checked: int
    violations: tuple[tuple[int, int], ...]  # (p, g) with g >= sqrt(p) - 2
    max_quotient: float  # max g / (sqrt(p) - 2)
    argmax_p: int


def verify_least_root_bound(p_min: int, p_max: int) -> LeastRootBoundReport:
    """Check g(p) < sqrt(p) - 2 for every prime in [p_min, p_max].

    The comparison is exact in integers: a violation is (g + 2)^2 >= p.
    The stated range of validity starts above 409 (g(409) = 21 fails it).
    """
    if p_min <= 409:
        raise ValueError(f"bound sweep starts above 409, got p_min = {p_min}")
    arr = scan_arrays(p_min, p_max)
    bad = (arr.g + 2) ** 2 >= arr.ps
    violations = tuple(
        (int(p), int(g)) for p, g in zip(arr.ps[bad], arr.g[bad])
    )
    quotient = arr.g / (np.sqrt(arr.ps) - 2.0)
    i = int(np.argmax(quotient)) if len(quotient) else 0
    return LeastRootBoundReport(
        p_min=p_min, p_max=p_max, checked=len(arr.ps),
        violations=violations,
        max_quotient=float(quotient[i]) if len(quotient) else 0.0,
        argmax_p=int(arr.ps[i]) if len(quotient) else 0,
    )


class WitnessMode(enum.Enum):
    PRIMITIVE_ROOT = "primitive-root"
    PRIME_PRIMITIVE_ROOT = "prime-primitive-root"


@dataclass(frozen=True)
class ShortIntervalRow:
    p: int
    window_length: int  # N = ceil((log p)^(1+epsilon))
    witness: int | None
    ratio: float | None  # (witness - M) / (log p)^(1+epsilon)


@dataclass(frozen=True)
class ShortIntervalReport:
    p_min: int
    p_max: int
    epsilon: float
    M: int
    mode: WitnessMode
    checked: int
    violation_count: int
    violations: tuple[int, ...]
    max_ratio: float
    argmax_p: int
    max_witness: int
    rows: tuple[ShortIntervalRow, ...]


def _search_window_witness(
    ctx: PrimeContext, M: int, N: int, mode: WitnessMode
) -> int | None:
    ind = ctx.indicator()
    for u in range(M, M + N + 1):
        r = u % ctx.p
        if r == 0 or not ind[r]:
            continue
        if mode is WitnessMode.PRIME_PRIMITIVE_ROOT and not arith.is_prime(u):
            continue
        return u
    return None


def verify_short_interval_theorem(
    p_min: int,
    p_max: int,
    epsilon: float,
    M: int = 2,
    mode: WitnessMode = WitnessMode.PRIMITIVE_ROOT,
) -> ShortIntervalReport:
    """Witness search in [M, M + ceil((log p)^(1+epsilon))] for each prime.

    A violation is a prime whose window holds no witness of the requested
    kind.  With M = 2 the least witness is g(p) (resp. g*(p)), so the whole
    range is swept with the scan kernels; other M fall back to a per-prime
    search.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    if not 3 <= p_min <= p_max:
        raise ValueError(f"need 3 <= p_min <= p_max, got [{p_min}, {p_max}]")
    if M < 1:
        raise ValueError(f"window start must be >= 1, got {M}")

    rows: list[ShortIntervalRow] = []
    exponent = 1.0 + epsilon
    if M == 2:
        arr = scan_arrays(p_min, p_max)
        logs = np.log(arr.ps.astype(np.float64)) ** exponent
        lengths = np.ceil(logs).astype(np.int64)
        cand = arr.g if mode is WitnessMode.PRIMITIVE_ROOT else arr.g_star
        for i in range(len(arr.ps)):
            p = int(arr.ps[i])
            n_p = int(lengths[i])
            w = int(cand[i])
            if M + n_p < p and w > M + n_p:
                rows.append(ShortIntervalRow(p=p, window_length=n_p, witness=None, ratio=None))
            else:
                # the least witness overall is >= 2 = M, so it is the window witness
                rows.append(
                    ShortIntervalRow(
                        p=p, window_length=n_p, witness=w, ratio=(w - M) / float(logs[i])
                    )
                )
    else:
        for q in arith.prime_table(p_max).primes:
            p = int(q)
            if p < max(p_min, 3):
                continue
            if p > p_max:
                break
            ctx = build_context(p)
            scale = math.log(p) ** exponent
            n_p = math.ceil(scale)
            w = _search_window_witness(ctx, M, n_p, mode)
            rows.append(
                ShortIntervalRow(
                    p=p, window_length=n_p, witness=w,
                    ratio=None if w is None else (w - M) / scale,
                )
            )

    violations = tuple(r.p for r in rows if r.witness is None)
    best_ratio, argmax_p, max_witness = 0.0, 0, 0
    for r in rows:
        if r.ratio is not None and r.ratio >= best_ratio:
            best_ratio, argmax_p = r.ratio, r.p
        if r.witness is not None and r.witness > max_witness:
            max_witness = r.witness
    return ShortIntervalReport(
        p_min=p_min, p_max=p_max, epsilon=epsilon, M=M, mode=mode,
        checked=len(rows), violation_count=len(violations), violations=violations,
        max_ratio=best_ratio, argmax_p=argmax_p, max_witness=max_witness,
        rows=tuple(rows),
    )


@dataclass(frozen=True)
class PrimeWindowReport:
    """Weighted window [M, M + ceil(p^exponent)] and whether it carries mass."""

    p: int
    M: int
    N: int
    exponent: float
    report: IntervalReport
    witness_found: bool


def verify_prime_window_theorem(
    ctx: PrimeContext, M: int, exponent: float = 0.525
) -> PrimeWindowReport:
    """Lambda-weighted scan of [M, M + ceil(p^exponent)] with witnesses."""
    if not 0 < exponent < 1:
        raise ValueError(f"exponent must be in (0, 1), got {exponent}")
    if M < 1:
        raise ValueError(f"window start must be >= 1, got {M}")
    n = math.ceil(ctx.p**exponent)
    rep = interval_weighted_sum(ctx, IntervalSpec(M=M, N=n, weighted=True))
    return PrimeWindowReport(
        p=ctx.p, M=M, N=n, exponent=exponent, report=rep,
        witness_found=rep.psi_count > 0,
    )
