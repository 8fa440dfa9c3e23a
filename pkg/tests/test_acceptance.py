"""Acceptance gate: thirteen checks covering the library's headline claims.

Each test prints one summary line with the measured quantities; run with
-v (or -s for the detail lines).  Sampled checks use a fixed seed so the
gate is reproducible run to run.
"""

import math
import random
import time
from contextlib import contextmanager

import pytest

from primroot import arith, charfun, cli, expsum, intervals, primctx, stats
from primroot.intervals import IntervalSpec

SEED = 2026


@contextmanager
def budget(seconds):
    holder = {}
    start = time.monotonic()
    yield holder
    holder["elapsed"] = time.monotonic() - start
    assert holder["elapsed"] < seconds, f"runtime budget {seconds}s exceeded"


def report(name, detail, holder):
    print(f"{name}: PASS ({detail}) [{holder['elapsed']:.2f}s]")


@pytest.fixture(scope="module")
def bound_sample():
    """200 primes from [10^3, 10^5] with 10 twist values b each."""
    rng = random.Random(SEED)
    table = arith.prime_table(10**5)
    pool = [int(q) for q in table.primes if 10**3 <= q <= 10**5]
    primes = sorted(rng.sample(pool, 200))
    out = []
    for p in primes:
        ctx = primctx.build_context(p)
        bs = [rng.randint(1, p - 1) for _ in range(10)]
        out.append((ctx, bs))
    return out


def test_01_characteristic_function_agreement():
    """Three representations agree exactly for every unit, every p <= 257."""
    with budget(60) as t:
        max_residual = 0.0
        checked = 0
        for q in arith.prime_table(257).primes:
            p = int(q)
            if p < 3 or p > 257:
                continue
            ctx = primctx.build_context(p)
            for u in range(1, p):
                a = charfun.psi_divisor_character(ctx, u)
                b = charfun.psi_divisor_free_collapsed(ctx, u)
                c = charfun.psi_divisor_free_literal(ctx, u)
                assert a.value == b.value == c.value, (p, u)
                assert c.residual_error < 1e-6, (p, u, c.residual_error)
                max_residual = max(max_residual, c.residual_error)
                checked += 1
    report(
        "criterion-01 charfun-agreement",
        f"{checked} evaluations, max literal residual {max_residual:.2e}",
        t,
    )


def test_02_field_sum_identity_at_scale():
    """Sum of the indicator over F_p equals phi(p-1) for every p <= 10^4."""
    with budget(120) as t:
        checked = 0
        for q in arith.prime_table(10**4).primes:
            p = int(q)
            if p < 3 or p > 10**4:
                continue
            ctx = primctx.build_context(p)
            assert charfun.psi_field_sum(ctx) == ctx.phi_pm1, p
            checked += 1
        assert checked == 1229 - 1  # odd primes <= 10^4
    report("criterion-02 field-sum", f"{checked} primes", t)


def test_03_least_root_sqrt_bound_sweep():
    """g(p) < sqrt(p) - 2 with zero violations for 409 < p <= 10^6."""
    with budget(300) as t:
        rep = intervals.verify_least_root_bound(410, 10**6)
        assert rep.violations == ()
        assert rep.checked == 78498 - 80  # primes <= 10^6 minus primes <= 409
    report(
        "criterion-03 sqrt-bound",
        f"{rep.checked} primes, max quotient {rep.max_quotient:.4f} at p={rep.argmax_p}",
        t,
    )


def test_04_artin_constant():
    """Product within 1e-6 and empirical average within 5e-3 of 0.3739558136."""
    with budget(300) as t:
        prod = stats.artin_product(10**6)
        emp = stats.artin_empirical(10**6)
        assert prod.abs_error <= 1e-6, prod
        assert emp.abs_error <= 5e-3, emp
    report(
        "criterion-04 artin-constant",
        f"product err {prod.abs_error:.2e}, empirical err {emp.abs_error:.2e}",
        t,
    )


def test_05_gap_constant():
    """Plus-sign product within 1e-2 and empirical within 2e-2 of 2.8263840942."""
    with budget(300) as t:
        prod = stats.gap_product(10**6)
        emp = stats.gap_empirical(10**6)
        assert prod.abs_error <= 1e-2, prod
        assert emp.abs_error <= 2e-2, emp
    report(
        "criterion-05 gap-constant",
        f"product err {prod.abs_error:.2e}, empirical err {emp.abs_error:.2e}",
        t,
    )


def test_06_coprime_filtered_bound(bound_sample):
    """|sum over primitive roots of e(b r / p)| <= sqrt(p) log^3 p, 2000 draws."""
    with budget(300) as t:
        min_margin = math.inf
        checked = 0
        for ctx, bs in bound_sample:
            for b in bs:
                s = expsum.coprime_filtered_sum(ctx, b)
                assert s.within_bound, (ctx.p, b, s.magnitude, s.apriori_bound)
                min_margin = min(min_margin, s.margin)
                checked += 1
    report(
        "criterion-06 coprime-bound",
        f"{checked} sums, zero violations, min margin {min_margin:.2f}",
        t,
    )


def test_07_equivalence_gap_bound(bound_sample):
    """|S_b - S_1| <= 16 sqrt(p) log^3 p over the same sample."""
    with budget(300) as t:
        min_margin = math.inf
        checked = 0
        for ctx, bs in bound_sample:
            for b in bs:
                s = expsum.equivalence_gap(ctx, b)
                assert s.within_bound, (ctx.p, b, s.magnitude, s.apriori_bound)
                min_margin = min(min_margin, s.margin)
                checked += 1
    report(
        "criterion-07 equivalence-gap-bound",
        f"{checked} gaps, zero violations, min margin {min_margin:.2f}",
        t,
    )


def test_08_kernel_closed_forms():
    """Closed/Moebius kernels match direct summation within 1e-8, 100 draws."""
    with budget(60) as t:
        rng = random.Random(SEED)
        pool = [int(q) for q in arith.prime_table(1000).primes if 3 <= q <= 1000]
        max_full = 0.0
        max_coprime = 0.0
        for _ in range(100):
            p = rng.choice(pool)
            q = arith.next_prime(p)
            tt = rng.randint(1, q - 1)
            closed = expsum.kernel_full_sum(q, tt, p)
            direct = expsum.kernel_full_sum_direct(q, tt, p)
            d1 = abs(closed.value - direct.value)
            ctx = primctx.build_context(p)
            moeb = expsum.kernel_coprime_sum(ctx, q, tt)
            kdir = expsum.kernel_coprime_sum_direct(ctx, q, tt)
            d2 = abs(moeb.value - kdir.value)
            assert d1 <= 1e-8, (p, q, tt, d1)
            assert d2 <= 1e-8, (p, q, tt, d2)
            max_full = max(max_full, d1)
            max_coprime = max(max_coprime, d2)
    report(
        "criterion-08 kernel-closed-forms",
        f"100 draws, max |closed-direct| {max_full:.2e} (full) {max_coprime:.2e} (coprime)",
        t,
    )


def test_09_interval_decomposition():
    """psiCount = mainTerm + discrepancy exactly on 1000 random windows;
    the literal representation reproduces the discrepancy within 1e-6 for
    p <= 257."""
    with budget(120) as t:
        rng = random.Random(SEED)
        pool = [int(q) for q in arith.prime_table(10**4).primes if 3 <= q <= 10**4]
        ctx_cache = {}
        literal_checked = 0
        max_dev = 0.0
        for _ in range(1000):
            p = rng.choice(pool)
            M = rng.randint(0, 2 * p)
            N = rng.randint(1, 2 * p)
            ctx = ctx_cache.get(p)
            if ctx is None:
                ctx = ctx_cache.setdefault(p, primctx.build_context(p))
            rep = intervals.interval_psi_sum(ctx, IntervalSpec(M=M, N=N))
            assert rep.main_term + rep.discrepancy == rep.psi_count, (p, M, N)
            if p <= 257:
                lit_count = 0.0
                for u in range(M, M + N + 1):
                    if u % p == 0:
                        continue
                    lit_count += charfun.psi_divisor_free_literal(ctx, u % p).value
                lit_disc = lit_count - rep.main_term
                dev = abs(lit_disc - rep.discrepancy)
                assert dev < 1e-6, (p, M, N, dev)
                max_dev = max(max_dev, dev)
                literal_checked += 1
    report(
        "criterion-09 interval-decomposition",
        f"1000 windows exact, {literal_checked} literal cross-checks, max dev {max_dev:.2e}",
        t,
    )


def test_10_short_interval_theorem_desk_check():
    """Every prime in [10^4, 10^6] has a primitive root in [2, 2+ceil(log^2 p)]."""
    with budget(600) as t:
        rep = intervals.verify_short_interval_theorem(10**4, 10**6, epsilon=1.0, M=2)
        assert rep.violation_count == 0
        assert rep.checked == 78498 - 1229  # primes <= 10^6 minus primes < 10^4
        max_ratio, argmax = 0.0, 0
        for row in rep.rows:
            ratio = row.witness / math.log(row.p) ** 2
            if ratio > max_ratio:
                max_ratio, argmax = ratio, row.p
    report(
        "criterion-10 short-interval",
        f"{rep.checked} primes, zero violations, max g/(log p)^2 = {max_ratio:.4f} at p={argmax}",
        t,
    )


def test_11_prime_witness_windows():
    """50 sampled primes from [10^4, 10^6], M in {2, 1000}: the weighted
    window [M, M+ceil(p^0.525)] holds a prime primitive root."""
    with budget(300) as t:
        rng = random.Random(SEED)
        table = arith.prime_table(10**6)
        pool = [int(q) for q in table.primes if 10**4 <= q <= 10**6]
        primes = sorted(rng.sample(pool, 50))
        max_n = 0
        for p in primes:
            ctx = primctx.build_context(p)
            for m_start in (2, 1000):
                rep = intervals.verify_prime_window_theorem(ctx, M=m_start)
                assert rep.report.first_prime_witness is not None, (p, m_start)
                max_n = max(max_n, rep.N)
    report(
        "criterion-11 prime-witness-windows",
        f"50 primes x 2 window starts, zero misses, max window {max_n}",
        t,
    )


def test_12_mertens_product_sanity():
    """|e^gamma log x * product(1 - 1/p) - 1| < 0.01 at x = 10^6."""
    with budget(60) as t:
        est = stats.mertens_normalized(10**6)
        assert est.abs_error < 0.01
    report("criterion-12 mertens-sanity", f"normalized err {est.abs_error:.2e}", t)


def test_13_artifact_determinism(tmp_path, capsys):
    """Same seed, different worker counts: byte-identical artifacts."""
    with budget(120) as t:
        # sampled suite
        blobs = []
        for workers in (1, 2):
            path = tmp_path / f"thm13-w{workers}.csv"
            code = cli.main([
                "verify", "--suite", "thm13", "--range", "10000:100000",
                "--samples", "6", "--seed", str(SEED),
                "--workers", str(workers), "--out", str(path),
            ])
            capsys.readouterr()
            assert code == 0
            blobs.append(path.read_bytes())
        assert blobs[0] == blobs[1]
        # chunk-parallel sweep, both formats
        for fmt in ("csv", "json"):
            blobs = []
            for workers in (1, 3):
                path = tmp_path / f"sqrt-w{workers}.{fmt}"
                code = cli.main([
                    "verify", "--suite", "sqrt-bound", "--range", "410:100000",
                    "--workers", str(workers), "--format", fmt,
                    "--out", str(path),
                ])
                capsys.readouterr()
                assert code == 0
                blobs.append(path.read_bytes())
            assert blobs[0] == blobs[1]
    report("criterion-13 determinism", "thm13 w1=w2; sqrt-bound w1=w3 (csv+json)", t)
