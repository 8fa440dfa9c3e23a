"""Three routes to the primitive-root characteristic function Psi.

Psi(u) = 1 if u is a primitive root mod p, else 0, computed as:

(1) divisor-character: exact rational evaluation of
    (phi(p-1)/(p-1)) * sum over d | p-1 of mu(d)/phi(d) * C_d(m),
    where m is the discrete log of u and C_d(m) is the Ramanujan sum,
    the closed form of the sum of the order-d characters at u;
(2) divisor-free collapsed: count n in [1, p-1] with gcd(n, p-1) = 1
    and tau^n = u, evaluated in exact integers via the discrete log;
(3) divisor-free literal: the double sum
    (1/p) * sum_n sum_m e(2 pi i (tau^n - u) m / p)
    over coprime n and m in [0, p-1], in floating point, snapped.

All three must agree everywhere; (3) is capped at small p since it
does p * phi(p-1) complex work per evaluation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith
from .primctx import PrimeContext, discrete_log

__all__ = [
    "LITERAL_CAP",
    "Representation",
    "PsiEvaluation",
    "ramanujan_sum",
    "order_character_sum",
    "psi_divisor_character",
    "psi_divisor_free_collapsed",
    "psi_divisor_free_literal",
    "psi_field_table",
    "psi_field_sum",
]

# The literal double sum costs p * phi(p-1) complex exponentials per u.
LITERAL_CAP = 1000

# A literal evaluation must land within this distance of 0 or 1.
SNAP_TOLERANCE = 1e-6


class Representation(enum.Enum):
    DIVISOR_CHARACTER = "divisor-character"
    DIVISOR_FREE_COLLAPSED = "divisor-free-collapsed"
    DIVISOR_FREE_LITERAL = "divisor-free-literal"


@dataclass(frozen=True)
class PsiEvaluation:
    """One evaluation of the characteristic function."""

    p: int
    u: int
    value: int  # 0 or 1
    representation: Representation
    residual_error: float  # |raw - value| before snapping (0 for exact routes)


def ramanujan_sum(d: int, m: int) -> int:
    """C_d(m) = mu(d/g) * phi(d) / phi(d/g) with g = gcd(m, d).

    This is the closed form of sum over k in [1, d], gcd(k, d) = 1,
    of e(2 pi i k m / d); always an integer.
    """
    if d < 1:
        raise ValueError(f"modulus must be >= 1, got {d}")
    r = m % d
    g = d if r == 0 else math.gcd(r, d)
    red = d // g
    mu = arith.moebius(red)
    if mu == 0:
        return 0
    return mu * arith.totient(d) // arith.totient(red)


def order_character_sum(ctx: PrimeContext, d: int, u: int) -> int:
    """Sum of the order-d characters at u: equals C_d(discrete_log(u)).

    The characters mod p with order dividing p-1 are chi_j(tau^m) =
    e(2 pi i j m / (p-1)); those of exact order d are j = (p-1) t / d with
    gcd(t, d) = 1, so the sum collapses to the Ramanujan sum C_d(m).
    """
    if (ctx.p - 1) % d:
        raise ValueError(f"d = {d} does not divide p - 1 = {ctx.p - 1}")
    return ramanujan_sum(d, discrete_log(ctx, u))


def psi_divisor_character(ctx: PrimeContext, u: int) -> PsiEvaluation:
    """Exact rational evaluation through the divisor-character expansion."""
    m = discrete_log(ctx, u)
    pm1 = ctx.p - 1
    total = Fraction(0)
    for d in arith.divisors(ctx.pm1):
        mu = arith.moebius(d)
        if mu == 0:
            continue
        total += Fraction(mu, arith.totient(d)) * ramanujan_sum(d, m)
    value = Fraction(ctx.phi_pm1, pm1) * total
    if value not in (0, 1):
        raise AssertionError(
            f"divisor-character sum must be 0 or 1, got {value} at p={ctx.p}, u={u}"
        )
    return PsiEvaluation(
        p=ctx.p,
        u=u % ctx.p,
        value=int(value),
        representation=Representation.DIVISOR_CHARACTER,
        residual_error=0.0,
    )


def psi_divisor_free_collapsed(ctx: PrimeContext, u: int) -> PsiEvaluation:
    """Exact integer count of n in [1, p-1], gcd(n, p-1) = 1, tau^n = u.

    tau^n = u forces n = m mod (p-1) with m the discrete log, so the count
    is 1 or 0 according to gcd; u = 1 (m = 0) maps to n = p - 1.
    """
    m = discrete_log(ctx, u)
    n = m if m >= 1 else ctx.p - 1
    value = 1 if math.gcd(n, ctx.p - 1) == 1 else 0
    if ctx.p == 2:
        value = 1  # the unit group is trivial; u = 1 generates it
    return PsiEvaluation(
        p=ctx.p,
        u=u % ctx.p,
        value=value,
        representation=Representation.DIVISOR_FREE_COLLAPSED,
        residual_error=0.0,
    )


def psi_divisor_free_literal(ctx: PrimeContext, u: int, cap: int = LITERAL_CAP) -> PsiEvaluation:
    """Floating-point evaluation of the literal double exponential sum.

    Every inner term is computed; the only reduction applied is of the
    phase argument mod p.  Row sums are accumulated with math.fsum.
    """
    p = ctx.p
    if p > cap:
        raise ValueError(f"literal double sum capped at p <= {cap}, got {p}")
    u = u % p
    if u == 0:
        raise ValueError(f"u must be a unit mod {p}, got u = 0")
    powers = ctx.powers()
    coprime = np.gcd(np.arange(1, p, dtype=np.int64), p - 1) == 1
    w = (powers[coprime] - u) % p  # one row per coprime exponent n
    ms = np.arange(p, dtype=np.int64)
    phase = np.exp((2j * np.pi / p) * ((w[:, None] * ms[None, :]) % p))
    rows = phase.sum(axis=1)
    raw = complex(math.fsum(rows.real), math.fsum(rows.imag)) / p
    value = round(raw.real)
    residual = abs(raw - value)
    if value not in (0, 1) or residual > SNAP_TOLERANCE:
        raise AssertionError(
            f"literal sum failed to snap at p={p}, u={u}: raw={raw!r}"
        )
    return PsiEvaluation(
        p=p,
        u=u,
        value=value,
        representation=Representation.DIVISOR_FREE_LITERAL,
        residual_error=residual,
    )


def psi_field_table(ctx: PrimeContext) -> np.ndarray:
    """Collapsed-representation values of Psi over the whole field.

    The indicator walk marks tau^n exactly for the coprime exponents n,
    which is the collapsed count evaluated at every u simultaneously.
    Returns a read-only uint8 array indexed by residue.
    """
    return ctx.indicator()


def psi_field_sum(ctx: PrimeContext) -> int:
    """Sum of Psi(u) over all u in [1, p-1]; must equal phi(p-1)."""
    return int(psi_field_table(ctx).sum())
