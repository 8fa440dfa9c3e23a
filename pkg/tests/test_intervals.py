"""Window counts, weighted windows, and the bound-verification sweeps."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primroot import arith, intervals, primctx
from primroot.intervals import (
    IntervalSpec,
    WitnessMode,
    interval_psi_sum,
    interval_weighted_sum,
    mangoldt_window,
    verify_least_root_bound,
    verify_prime_window_theorem,
    verify_short_interval_theorem,
)


def brute_psi_window(p: int, M: int, N: int) -> tuple[int, int | None]:
    ctx = primctx.build_context(p)
    roots = set(int(r) for r in primctx.enumerate_primitive_roots(ctx))
    count, first = 0, None
    for u in range(M, M + N + 1):
        if u % p in roots:
            count += 1
            if first is None:
                first = u
    return count, first


def test_interval_spec_validation():
    with pytest.raises(ValueError):
        IntervalSpec(M=-1, N=5)
    with pytest.raises(ValueError):
        IntervalSpec(M=2, N=0)


def test_interval_psi_oracles(ctx7, ctx41):
    rep = interval_psi_sum(ctx7, IntervalSpec(M=2, N=2))
    assert rep.psi_count == 1
    assert rep.main_term == pytest.approx(6 / 7)
    assert rep.first_witness == 3
    assert rep.discrepancy == pytest.approx(1 - 6 / 7)

    rep = interval_psi_sum(ctx7, IntervalSpec(M=4, N=1))
    assert rep.psi_count == 1
    assert rep.first_witness == 5

    ctx5 = primctx.build_context(5)
    rep = interval_psi_sum(ctx5, IntervalSpec(M=2, N=4))
    assert rep.psi_count == 2
    assert rep.first_witness == 2

    ctx11 = primctx.build_context(11)
    rep = interval_psi_sum(ctx11, IntervalSpec(M=1, N=9))
    assert rep.psi_count == 4
    assert rep.main_term == pytest.approx(40 / 11)


def test_interval_skips_multiples_of_p(ctx7):
    # [5, 9] holds 7 = 0 mod 7, which contributes nothing and is not a unit
    rep = interval_psi_sum(ctx7, IntervalSpec(M=5, N=4))
    assert rep.psi_count == 1
    assert rep.first_witness == 5
    assert rep.main_term == pytest.approx((2 / 7) * 4)


@given(
    st.sampled_from([3, 5, 7, 11, 13, 41, 101]),
    st.integers(min_value=0, max_value=500),
    st.integers(min_value=1, max_value=500),
)
@settings(max_examples=120, deadline=None)
def test_interval_matches_brute_force(p, M, N):
    ctx = primctx.build_context(p)
    rep = interval_psi_sum(ctx, IntervalSpec(M=M, N=N))
    count, first = brute_psi_window(p, M, N)
    assert rep.psi_count == count
    assert rep.first_witness == first
    # main term: phi(p-1)/p times the number of units in the window
    units = sum(1 for u in range(M, M + N + 1) if u % p != 0)
    assert rep.main_term == pytest.approx(ctx.phi_pm1 / p * units)
    assert rep.main_term + rep.discrepancy == rep.psi_count


def test_mangoldt_window_matches_pointwise():
    lam, isp = mangoldt_window(2, 600)
    ns = np.arange(2, 601)
    for n, v, flag in zip(ns, lam, isp):
        assert v == pytest.approx(arith.mangoldt(int(n)), abs=1e-12)
        assert bool(flag) == arith.is_prime(int(n))


def test_mangoldt_window_offset_start():
    lam, isp = mangoldt_window(100, 130)
    expect = {101: math.log(101), 103: math.log(103), 107: math.log(107),
              109: math.log(109), 113: math.log(113), 121: math.log(11),
              125: math.log(5), 127: math.log(127), 128: math.log(2)}
    for i, n in enumerate(range(100, 131)):
        assert lam[i] == pytest.approx(expect.get(n, 0.0), abs=1e-12)


def test_weighted_window_oracles(ctx7):
    rep = interval_weighted_sum(ctx7, IntervalSpec(M=2, N=3, weighted=True))
    # window [2,5]: primitive roots are 3 and 5, both prime
    assert rep.psi_count == pytest.approx(math.log(3) + math.log(5))
    assert rep.first_witness == 3
    assert rep.first_prime_witness == 3

    rep = interval_weighted_sum(ctx7, IntervalSpec(M=8, N=2, weighted=True))
    # window [8,10]: 8 = 1, 9 = 2, 10 = 3 mod 7; only 10 hits a root but
    # Lambda(10) = 0
    assert rep.psi_count == 0.0
    assert rep.first_witness is None
    assert rep.first_prime_witness is None

    ctx3 = primctx.build_context(3)
    rep = interval_weighted_sum(ctx3, IntervalSpec(M=2, N=1, weighted=True))
    assert rep.psi_count == pytest.approx(math.log(2))
    assert rep.first_witness == 2
    assert rep.first_prime_witness == 2


def test_weighted_window_prime_power_vs_prime_witness():
    # p = 11, window [8,10]: 8 = 2^3 is a primitive root and a prime power
    # but not a prime; 9 and 10 are neither.  So the window has a
    # prime-power witness and no prime witness.
    ctx11 = primctx.build_context(11)
    rep = interval_weighted_sum(ctx11, IntervalSpec(M=8, N=2, weighted=True))
    assert rep.psi_count == pytest.approx(math.log(2))
    assert rep.first_witness == 8
    assert rep.first_prime_witness is None


def test_weighted_main_term_uses_mangoldt_mass(ctx41):
    spec = IntervalSpec(M=2, N=100, weighted=True)
    rep = interval_weighted_sum(ctx41, spec)
    lam, _ = mangoldt_window(2, 102)
    units = [i for i, u in enumerate(range(2, 103)) if u % 41 != 0]
    expected = ctx41.phi_pm1 / 41 * float(np.sum(lam[units]))
    assert rep.main_term == pytest.approx(expected, rel=1e-9)
    assert rep.main_term + rep.discrepancy == pytest.approx(rep.psi_count)


# ------------------------------------------------------------- bound sweeps


def test_least_root_bound_small_range():
    rep = verify_least_root_bound(410, 10_000)
    assert rep.violations == ()
    table = arith.prime_table(10_000)
    expected_checked = int(((table.primes > 409) & (table.primes <= 10_000)).sum())
    assert rep.checked == expected_checked
    # cross-check the max quotient pointwise
    best_q, best_p = 0.0, 0
    for q in table.primes:
        p = int(q)
        if p <= 409:
            continue
        g = primctx.least_primitive_root(p)
        quot = g / (math.sqrt(p) - 2)
        if quot > best_q:
            best_q, best_p = quot, p
    assert rep.max_quotient == pytest.approx(best_q)
    assert rep.argmax_p == best_p


def test_least_root_bound_requires_high_start():
    with pytest.raises(ValueError):
        verify_least_root_bound(100, 1000)


def test_least_root_bound_exactness_contract():
    # the check is exact-integer: g >= sqrt(p) - 2  iff  (g+2)^2 >= p
    rep = verify_least_root_bound(410, 2000)
    for q in arith.prime_table(2000).primes:
        p = int(q)
        if p <= 409:
            continue
        g = primctx.least_primitive_root(p)
        assert ((g + 2) ** 2 >= p) == ((p, g) in rep.violations)


def test_short_interval_fast_path_matches_general():
    fast = verify_short_interval_theorem(10, 2000, epsilon=1.0, M=2)
    assert fast.violation_count == 0
    for row in fast.rows:
        p = row.p
        n = math.ceil(math.log(p) ** 2)
        assert row.window_length == n
        # with M = 2 the first witness is the least primitive root when
        # it fits in the window
        g = primctx.least_primitive_root(p)
        if 2 + n < p:
            assert row.witness == g
        count, first = brute_psi_window(p, 2, n)
        assert row.witness == first


def test_short_interval_prime_mode():
    rep = verify_short_interval_theorem(
        10, 2000, epsilon=1.0, M=2, mode=WitnessMode.PRIME_PRIMITIVE_ROOT
    )
    # one genuine small-prime miss: 271 has least prime primitive root 43,
    # outside [2, 2 + ceil(log^2 271)] = [2, 34]
    assert rep.violations == (271,)
    assert primctx.least_prime_primitive_root(271) == 43
    for row in rep.rows[:40]:
        gstar = primctx.least_prime_primitive_root(row.p)
        if 2 + row.window_length < row.p and row.witness is not None:
            assert row.witness == gstar


def test_short_interval_general_start():
    rep = verify_short_interval_theorem(100, 400, epsilon=1.0, M=50)
    for row in rep.rows:
        count, first = brute_psi_window(row.p, 50, row.window_length)
        assert row.witness == first


def test_short_interval_ratio_definition():
    rep = verify_short_interval_theorem(1000, 1200, epsilon=0.5, M=2)
    for row in rep.rows:
        if row.witness is None:
            continue
        denom = math.log(row.p) ** 1.5
        assert row.ratio == pytest.approx((row.witness - 2) / denom)


def test_prime_window_theorem_oracle(ctx10007):
    rep = verify_prime_window_theorem(ctx10007, M=2)
    assert rep.N == 126  # ceil(10007 ** 0.525)
    assert rep.witness_found
    assert rep.report.first_prime_witness == 5
    assert rep.report.weighted


def test_prime_window_theorem_high_start(ctx10007):
    rep = verify_prime_window_theorem(ctx10007, M=1000)
    assert rep.witness_found
    assert rep.report.first_prime_witness is not None
    assert rep.report.first_prime_witness >= 1000
