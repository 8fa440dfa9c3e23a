"""Command-line harness: searches, sweeps, bound checks, constants.

Every command writes exactly one artifact (CSV default, JSON on request)
and reports wall-clock and worker diagnostics on stderr.  Exit codes:
0 = completed, zero violations; 1 = completed, violations recorded;
2 = input error.

Artifacts are byte-deterministic: identical command + seed produce
identical bytes regardless of worker count, so worker count and timing
never enter the artifact, only the diagnostic stream.  Parallel sweeps
split the prime range into contiguous chunks merged in range order.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import random
import sys
import time

from . import __version__, arith, charfun, expsum, intervals, primctx, stats
from .intervals import IntervalSpec, WitnessMode

SCHEMA_VERSION = 1
TOOL_NAME = "primroot"

_FAMILY_ORDER = (
    primctx.Family.FERMAT,
    primctx.Family.GERMAIN,
    primctx.Family.HIGHLY_COMPOSITE,
)


# ---------------------------------------------------------------- formatting


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _families_str(fams) -> str:
    return ";".join(f.code for f in _FAMILY_ORDER if f in fams)


def render_csv(columns, rows, meta) -> str:
    lines = [f"# {k}={_fmt_cell(v)}" for k, v in sorted(meta.items())]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt_cell(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def render_json(columns, rows, meta) -> str:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "toolVersion": __version__,
        "command": meta.get("command"),
        "config": {
            k.removeprefix("config."): v
            for k, v in sorted(meta.items())
            if k.startswith("config.")
        },
        "violationCount": meta.get("violationCount", 0),
        "columns": list(columns),
        "rows": [{c: row.get(c) for c in columns if row.get(c) is not None} for row in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_artifact(columns, rows, command, config, violations, fmt, out_path):
    meta = {
        "schemaVersion": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "toolVersion": __version__,
        "command": command,
        "violationCount": violations,
    }
    for k, v in config.items():
        meta[f"config.{k}"] = v
    text = render_csv(columns, rows, meta) if fmt == "csv" else render_json(columns, rows, meta)
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- utilities


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise ValueError(f"malformed range {text!r}; expected LO:HI") from exc
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ValueError(f"malformed integer list {text!r}") from exc


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ValueError(f"malformed number list {text!r}") from exc


def _resolve_workers(args) -> int:
    if getattr(args, "workers", None):
        return max(1, args.workers)
    env = os.environ.get("PRIMROOT_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ValueError(f"PRIMROOT_WORKERS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous integer subranges covering [lo, hi], at most `parts` of them."""
    span = hi - lo + 1
    parts = max(1, min(parts, span))
    step = span // parts
    extra = span % parts
    out = []
    start = lo
    for i in range(parts):
        width = step + (1 if i < extra else 0)
        out.append((start, start + width - 1))
        start += width
    return out


def _map_chunks(fn, lo, hi, workers, *extra):
    """fn(sub_lo, sub_hi, *extra) over contiguous chunks, merged in order.

    Row-level results must be independent per prime, so the merge is a
    plain concatenation and worker count cannot change the output.
    """
    bounds = _split_range(lo, hi, workers)
    if len(bounds) == 1:
        return [fn(lo, hi, *extra)]
    args = list(zip(*bounds))
    with concurrent.futures.ProcessPoolExecutor(max_workers=len(bounds)) as ex:
        return list(ex.map(fn, args[0], args[1], *[[e] * len(bounds) for e in extra]))


# Chunk workers (module level so they pickle under multiprocessing).


def _scan_chunk(lo: int, hi: int):
    lo = max(lo, 3)
    if lo > hi:
        return []
    return primctx.scan_range(lo, hi)


def _sqrt_bound_chunk(lo: int, hi: int):
    rep = intervals.verify_least_root_bound(lo, hi)
    return rep


def _short_interval_chunk(lo: int, hi: int, epsilon: float, m_start: int, mode_value: str):
    lo = max(lo, 3)
    if lo > hi:
        return ()
    rep = intervals.verify_short_interval_theorem(
        lo, hi, epsilon=epsilon, M=m_start, mode=WitnessMode(mode_value)
    )
    return rep.rows


# ---------------------------------------------------------------- commands

SCAN_COLUMNS = ["p", "g", "g_star", "phi_pm1", "ratio", "omega_pm1", "gap", "families"]


def _scan_record_row(rec: primctx.ScanRecord) -> dict:
    return {
        "p": rec.p,
        "g": rec.g,
        "g_star": rec.g_star,
        "phi_pm1": rec.phi_pm1,
        "ratio": rec.ratio,
        "omega_pm1": rec.omega_pm1,
        "gap": rec.gap,
        "families": _families_str(rec.families),
    }


def cmd_search(args):
    if args.p < 3:
        raise ValueError(f"p must be an odd prime >= 3, got {args.p}")
    records = primctx.scan_range(args.p, args.p)
    if not records:
        raise ValueError(f"{args.p} is not an odd prime")
    rows = [_scan_record_row(rec) for rec in records]
    return SCAN_COLUMNS, rows, {"p": args.p}, 0


def cmd_scan(args):
    lo, hi = _parse_range(args.range)
    if lo < 3:
        raise ValueError(f"scan range starts at 3, got {lo}")
    workers = _resolve_workers(args)
    rows = []
    for chunk in _map_chunks(_scan_chunk, lo, hi, workers):
        rows.extend(_scan_record_row(rec) for rec in chunk)
    return SCAN_COLUMNS, rows, {"range": f"{lo}:{hi}"}, 0


INTERVAL_COLUMNS = [
    "p", "M", "N", "weighted", "psi_count", "main_term", "discrepancy",
    "first_witness", "first_prime_witness",
]


def _interval_row(rep: intervals.IntervalReport) -> dict:
    return {
        "p": rep.p, "M": rep.M, "N": rep.N, "weighted": rep.weighted,
        "psi_count": rep.psi_count, "main_term": rep.main_term,
        "discrepancy": rep.discrepancy, "first_witness": rep.first_witness,
        "first_prime_witness": rep.first_prime_witness,
    }


def cmd_interval(args):
    ctx = primctx.build_context(args.p)
    spec = IntervalSpec(M=args.M, N=args.N, weighted=args.weighted)
    rep = (
        intervals.interval_weighted_sum(ctx, spec)
        if args.weighted
        else intervals.interval_psi_sum(ctx, spec)
    )
    config = {"p": args.p, "M": args.M, "N": args.N, "weighted": args.weighted}
    return INTERVAL_COLUMNS, [_interval_row(rep)], config, 0


CHARFUN_COLUMNS = [
    "p", "u", "char_value", "collapsed_value", "literal_value",
    "literal_residual", "agree",
]


def _charfun_row(ctx, u: int, with_literal: bool) -> dict:
    a = charfun.psi_divisor_character(ctx, u)
    b = charfun.psi_divisor_free_collapsed(ctx, u)
    row = {
        "p": ctx.p, "u": u, "char_value": a.value, "collapsed_value": b.value,
        "literal_value": None, "literal_residual": None,
        "agree": a.value == b.value,
    }
    if with_literal:
        c = charfun.psi_divisor_free_literal(ctx, u)
        row["literal_value"] = c.value
        row["literal_residual"] = c.residual_error
        row["agree"] = row["agree"] and a.value == c.value
    return row


def cmd_charfun(args):
    ctx = primctx.build_context(args.p)
    with_literal = ctx.p <= charfun.LITERAL_CAP
    us = [args.u] if args.u is not None else list(range(1, ctx.p))
    rows = [_charfun_row(ctx, u, with_literal) for u in us]
    violations = sum(1 for r in rows if not r["agree"])
    config = {"p": args.p, "u": args.u, "literal_included": with_literal}
    return CHARFUN_COLUMNS, rows, config, violations


EXPSUM_COLUMNS = [
    "kind", "p", "q", "t", "b", "x", "real", "imag", "magnitude", "term_count",
    "apriori_bound", "bound_name", "margin", "within_bound", "degenerate",
    "residual",
]


def _sum_row(kind: str, s: expsum.SumValue, *, p=None, q=None, t=None, b=None, x=None) -> dict:
    return {
        "kind": kind, "p": p, "q": q, "t": t, "b": b, "x": x,
        "real": s.real, "imag": s.imag, "magnitude": s.magnitude,
        "term_count": s.term_count, "apriori_bound": s.apriori_bound,
        "bound_name": s.bound_name, "margin": s.margin,
        "within_bound": s.within_bound, "degenerate": s.degenerate,
        "residual": s.residual,
    }


def cmd_expsum(args):
    ctx = primctx.build_context(args.p)
    p = ctx.p
    b = args.b
    x = args.x if args.x is not None else p - 1
    q = args.q if args.q is not None else arith.next_prime(p)
    t = args.t if args.t is not None else 1
    rows = [
        _sum_row("complete", expsum.complete_geometric_sum(p, b), p=p, b=b),
        _sum_row("incomplete", expsum.incomplete_power_sum(ctx, b, x), p=p, b=b, x=x),
        _sum_row("coprime", expsum.coprime_filtered_sum(ctx, b), p=p, b=b),
        _sum_row("kernel-full", expsum.kernel_full_sum(q, t, p), p=p, q=q, t=t),
        _sum_row("kernel-coprime", expsum.kernel_coprime_sum(ctx, q, t), p=p, q=q, t=t),
        _sum_row("gauss", expsum.gauss_mixed_sum(ctx, q, t, b), p=p, q=q, t=t, b=b),
        _sum_row("equivalence-gap", expsum.equivalence_gap(ctx, b), p=p, b=b),
    ]
    # hard bounds: the coprime-filtered sum and the gap; the rest are
    # sanity anchors or reported-only bounds
    violations = sum(
        1
        for r in rows
        if r["kind"] in ("coprime", "equivalence-gap")
        and not r["degenerate"]
        and r["within_bound"] is False
    )
    config = {"p": p, "b": b, "x": x, "q": q, "t": t}
    return EXPSUM_COLUMNS, rows, config, violations


STATS_COLUMNS = [
    "p", "kind", "t", "lam", "window_length", "window_count", "k", "count",
    "empirical", "poisson_pmf", "tail_count", "tv_distance", "gap_count",
    "gap_mean", "gap_max", "normalized_mean", "real", "imag", "magnitude",
]


def _poisson_rows(hist: stats.WindowHistogram) -> list[dict]:
    rows = []
    for k, count in enumerate(hist.counts):
        rows.append(
            {
                "p": hist.p, "kind": "poisson-bucket", "lam": hist.lam,
                "window_length": hist.window_length,
                "window_count": hist.window_count, "k": k, "count": count,
                "empirical": count / hist.window_count,
                "poisson_pmf": math.exp(-hist.lam) * hist.lam**k / math.factorial(k),
            }
        )
    rows.append(
        {
            "p": hist.p, "kind": "poisson-summary", "lam": hist.lam,
            "window_length": hist.window_length, "window_count": hist.window_count,
            "tail_count": hist.tail_count, "tv_distance": hist.tv_distance,
        }
    )
    return rows


def cmd_stats(args):
    ctx = primctx.build_context(args.p)
    rows = []
    gs = stats.gap_summary(ctx)
    rows.append(
        {
            "p": ctx.p, "kind": "gap-summary", "gap_count": gs.count,
            "gap_mean": gs.mean, "gap_max": gs.max,
            "normalized_mean": gs.normalized_mean,
        }
    )
    t = args.t if args.t is not None else ctx.phi_pm1
    w = stats.weyl_sum(ctx, t)
    rows.append(
        {
            "p": ctx.p, "kind": "weyl", "t": t, "real": w.real, "imag": w.imag,
            "magnitude": w.magnitude,
        }
    )
    for lam in _parse_float_list(args.lam):
        rows.extend(_poisson_rows(stats.poisson_windows(ctx, lam)))
    config = {"p": args.p, "t": t, "lam": args.lam}
    return STATS_COLUMNS, rows, config, 0


CONSTANTS_COLUMNS = ["name", "x_cutoff", "computed", "reference", "abs_error", "tolerance", "ok"]

# (estimator, acceptance tolerance or None)
_CONSTANT_SPECS = (
    (stats.mertens_product, None),
    (stats.mertens_normalized, 1e-2),
    (stats.artin_product, 1e-6),
    (stats.artin_empirical, 5e-3),
    (stats.gap_product, 1e-2),
    (stats.gap_empirical, 2e-2),
)


def _constants_rows(x: int) -> tuple[list[dict], int]:
    rows = []
    violations = 0
    for estimator, tol in _CONSTANT_SPECS:
        est = estimator(x)
        ok = None if tol is None else est.abs_error <= tol
        if ok is False:
            violations += 1
        rows.append(
            {
                "name": est.name, "x_cutoff": est.x_cutoff, "computed": est.computed,
                "reference": est.reference, "abs_error": est.abs_error,
                "tolerance": tol, "ok": ok,
            }
        )
    return rows, violations


def cmd_constants(args):
    rows, violations = _constants_rows(args.x)
    return CONSTANTS_COLUMNS, rows, {"x": args.x}, violations


# ---------------------------------------------------------------- suites


def _suite_sqrt_bound(args):
    lo, hi = _parse_range(args.range)
    workers = _resolve_workers(args)
    reps = _map_chunks(_sqrt_bound_chunk, lo, hi, workers)
    checked = sum(r.checked for r in reps)
    violations = [v for r in reps for v in r.violations]
    max_q, argmax_p = 0.0, 0
    for r in reps:
        if r.checked and r.max_quotient > max_q:
            max_q, argmax_p = r.max_quotient, r.argmax_p
    columns = ["kind", "p_min", "p_max", "checked", "p", "g", "max_quotient", "argmax_p"]
    rows = [
        {
            "kind": "summary", "p_min": lo, "p_max": hi, "checked": checked,
            "max_quotient": max_q, "argmax_p": argmax_p,
        }
    ]
    rows.extend({"kind": "violation", "p": p, "g": g} for p, g in violations)
    config = {"suite": "sqrt-bound", "range": f"{lo}:{hi}"}
    return columns, rows, config, len(violations)


_SHORT_INTERVAL_COLUMNS = ["p", "window_length", "witness", "ratio", "violation"]


def _suite_short_interval(args, mode: WitnessMode, suite: str):
    lo, hi = _parse_range(args.range)
    m_list = _parse_int_list(args.M)
    if len(m_list) != 1:
        raise ValueError(f"suite {suite} takes a single M, got {args.M!r}")
    m_start = m_list[0]
    workers = _resolve_workers(args)
    chunks = _map_chunks(
        _short_interval_chunk, lo, hi, workers, args.epsilon, m_start, mode.value
    )
    rows = []
    violations = 0
    for chunk in chunks:
        for r in chunk:
            rows.append(
                {
                    "p": r.p, "window_length": r.window_length, "witness": r.witness,
                    "ratio": r.ratio, "violation": r.witness is None,
                }
            )
            violations += r.witness is None
    config = {
        "suite": suite, "range": f"{lo}:{hi}", "epsilon": args.epsilon,
        "M": m_start, "mode": mode.value,
    }
    return _SHORT_INTERVAL_COLUMNS, rows, config, violations


def _suite_thm13(args):
    lo, hi = _parse_range(args.range)
    m_list = _parse_int_list(args.M)
    table = arith.prime_table(hi)
    pool = [int(p) for p in table.primes if lo <= p <= hi and p >= 3]
    if len(pool) < args.samples:
        raise ValueError(f"range holds {len(pool)} primes, needs >= {args.samples}")
    rng = random.Random(args.seed)
    sample = sorted(rng.sample(pool, args.samples))
    columns = [
        "p", "M", "N", "psi_count", "main_term", "discrepancy",
        "first_witness", "first_prime_witness", "prime_witness_found",
    ]
    rows = []
    violations = 0
    for p in sample:
        ctx = primctx.build_context(p)
        for m_start in m_list:
            rep = intervals.verify_prime_window_theorem(ctx, M=m_start, exponent=args.exponent)
            found = rep.report.first_prime_witness is not None
            violations += not found
            rows.append(
                {
                    "p": p, "M": m_start, "N": rep.N,
                    "psi_count": rep.report.psi_count,
                    "main_term": rep.report.main_term,
                    "discrepancy": rep.report.discrepancy,
                    "first_witness": rep.report.first_witness,
                    "first_prime_witness": rep.report.first_prime_witness,
                    "prime_witness_found": found,
                }
            )
    config = {
        "suite": "thm13", "range": f"{lo}:{hi}", "samples": args.samples,
        "M": args.M, "exponent": args.exponent, "seed": args.seed,
    }
    return columns, rows, config, violations


def _suite_charfun_agree(args):
    columns = [
        "kind", "p", "u_count", "mismatches", "max_literal_residual",
        "field_sum", "phi_pm1", "ok",
    ]
    rows = []
    violations = 0
    table = arith.prime_table(max(args.pmax, args.sum_pmax))
    for q in table.primes:
        p = int(q)
        if p < 3:
            continue
        if p > args.pmax:
            break
        ctx = primctx.build_context(p)
        mismatches = 0
        max_res = 0.0
        for u in range(1, p):
            row = _charfun_row(ctx, u, with_literal=True)
            mismatches += not row["agree"]
            max_res = max(max_res, row["literal_residual"])
        ok = mismatches == 0 and max_res < 1e-6
        violations += not ok
        rows.append(
            {
                "kind": "agreement", "p": p, "u_count": p - 1,
                "mismatches": mismatches, "max_literal_residual": max_res, "ok": ok,
            }
        )
    for q in table.primes:
        p = int(q)
        if p > args.sum_pmax:
            break
        ctx = primctx.build_context(p)
        field_sum = charfun.psi_field_sum(ctx)
        ok = field_sum == ctx.phi_pm1
        violations += not ok
        rows.append(
            {
                "kind": "field-sum", "p": p, "field_sum": field_sum,
                "phi_pm1": ctx.phi_pm1, "ok": ok,
            }
        )
    config = {"suite": "charfun-agree", "pmax": args.pmax, "sum_pmax": args.sum_pmax}
    return columns, rows, config, violations


_EXPSUM_BOUND_COLUMNS = [
    "kind", "p", "q", "t", "b", "magnitude", "apriori_bound", "bound_name",
    "margin", "within_bound", "abs_diff", "asserted", "ok",
]


def _suite_expsum_bounds(args):
    lo, hi = _parse_range(args.range)
    table = arith.prime_table(max(hi, args.kernel_pmax))
    pool = [int(p) for p in table.primes if lo <= p <= hi and p >= 3]
    if len(pool) < args.samples:
        raise ValueError(f"range holds {len(pool)} primes, needs >= {args.samples}")
    rng = random.Random(args.seed)
    sample = sorted(rng.sample(pool, args.samples))
    rows = []
    violations = 0
    for p in sample:
        ctx = primctx.build_context(p)
        bs = sorted(rng.randint(1, p - 1) for _ in range(args.b_count))
        for b in bs:
            s = expsum.coprime_filtered_sum(ctx, b)
            ok = s.within_bound is not False
            violations += not ok
            rows.append(
                {
                    "kind": "coprime", "p": p, "b": b, "magnitude": s.magnitude,
                    "apriori_bound": s.apriori_bound, "bound_name": s.bound_name,
                    "margin": s.margin, "within_bound": s.within_bound,
                    "asserted": True, "ok": ok,
                }
            )
            g = expsum.equivalence_gap(ctx, b)
            ok = g.within_bound is not False
            violations += not ok
            rows.append(
                {
                    "kind": "equivalence-gap", "p": p, "b": b, "magnitude": g.magnitude,
                    "apriori_bound": g.apriori_bound, "bound_name": g.bound_name,
                    "margin": g.margin, "within_bound": g.within_bound,
                    "asserted": True, "ok": ok,
                }
            )

    kernel_pool = [int(p) for p in table.primes if 3 <= p <= args.kernel_pmax]
    for _ in range(args.kernel_samples):
        p = rng.choice(kernel_pool)
        q = arith.next_prime(p)
        t = rng.randint(1, q - 1)
        ctx = primctx.build_context(p)
        closed = expsum.kernel_full_sum(q, t, p)
        direct = expsum.kernel_full_sum_direct(q, t, p)
        diff = abs(closed.value - direct.value)
        # the t/q bound only holds for low harmonics; past q/2 only the
        # closed-form/direct agreement is asserted
        ok = diff <= 1e-8 and (t > q // 2 or closed.within_bound is not False)
        violations += not ok
        rows.append(
            {
                "kind": "kernel-full-pair", "p": p, "q": q, "t": t,
                "magnitude": closed.magnitude, "apriori_bound": closed.apriori_bound,
                "bound_name": closed.bound_name, "margin": closed.margin,
                "within_bound": closed.within_bound, "abs_diff": diff,
                "asserted": True, "ok": ok,
            }
        )
        moeb = expsum.kernel_coprime_sum(ctx, q, t)
        kdirect = expsum.kernel_coprime_sum_direct(ctx, q, t)
        diff = abs(moeb.value - kdirect.value)
        # no harmonic range makes the Moebius-factored envelope safe to
        # assert (a divisor can land t*d near 0 mod q); bound reported only
        ok = diff <= 1e-8
        violations += not ok
        rows.append(
            {
                "kind": "kernel-coprime-pair", "p": p, "q": q, "t": t,
                "magnitude": moeb.magnitude, "apriori_bound": moeb.apriori_bound,
                "bound_name": moeb.bound_name, "margin": moeb.margin,
                "within_bound": moeb.within_bound, "abs_diff": diff,
                "asserted": True, "ok": ok,
            }
        )
        b = rng.randint(1, p - 1)
        gm = expsum.gauss_mixed_sum(ctx, q, t, b)
        rows.append(
            {
                "kind": "gauss", "p": p, "q": q, "t": t, "b": b,
                "magnitude": gm.magnitude, "apriori_bound": gm.apriori_bound,
                "bound_name": gm.bound_name, "margin": gm.margin,
                "within_bound": gm.within_bound, "asserted": False,
                "ok": None,
            }
        )
    config = {
        "suite": "expsum-bounds", "range": f"{lo}:{hi}", "samples": args.samples,
        "b_count": args.b_count, "kernel_samples": args.kernel_samples,
        "kernel_pmax": args.kernel_pmax, "seed": args.seed,
    }
    return _EXPSUM_BOUND_COLUMNS, rows, config, violations


def _suite_constants(args):
    rows, violations = _constants_rows(args.x)
    config = {"suite": "constants", "x": args.x}
    return CONSTANTS_COLUMNS, rows, config, violations


def _suite_poisson(args):
    if args.p is None:
        raise ValueError("suite poisson needs --p")
    ctx = primctx.build_context(args.p)
    rows = []
    for lam in _parse_float_list(args.lam):
        rows.extend(_poisson_rows(stats.poisson_windows(ctx, lam)))
    columns = [
        "p", "kind", "lam", "window_length", "window_count", "k", "count",
        "empirical", "poisson_pmf", "tail_count", "tv_distance",
    ]
    config = {"suite": "poisson", "p": args.p, "lam": args.lam}
    return columns, rows, config, 0


def _suite_weyl(args):
    if args.p is None:
        raise ValueError("suite weyl needs --p")
    ctx = primctx.build_context(args.p)
    ts = _parse_int_list(args.t) if args.t else [ctx.phi_pm1]
    rows = []
    for t in ts:
        w = stats.weyl_sum(ctx, t)
        rows.append(
            {
                "p": ctx.p, "t": t, "real": w.real, "imag": w.imag,
                "magnitude": w.magnitude, "residual": w.residual,
            }
        )
    columns = ["p", "t", "real", "imag", "magnitude", "residual"]
    config = {"suite": "weyl", "p": args.p, "t": args.t or str(ts[0])}
    return columns, rows, config, 0


def cmd_verify(args):
    suite = args.suite
    if suite == "sqrt-bound":
        return _suite_sqrt_bound(args)
    if suite == "thm11":
        return _suite_short_interval(args, WitnessMode.PRIMITIVE_ROOT, "thm11")
    if suite == "thm12":
        return _suite_short_interval(args, WitnessMode.PRIME_PRIMITIVE_ROOT, "thm12")
    if suite == "thm13":
        return _suite_thm13(args)
    if suite == "charfun-agree":
        return _suite_charfun_agree(args)
    if suite == "expsum-bounds":
        return _suite_expsum_bounds(args)
    if suite == "constants":
        return _suite_constants(args)
    if suite == "poisson":
        return _suite_poisson(args)
    if suite == "weyl":
        return _suite_weyl(args)
    raise ValueError(f"unknown suite {suite!r}")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Primitive-root analytics: searches, sweeps, bounds, constants.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="artifact path (default stdout)")
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--seed", type=int, default=1)

    p_search = sub.add_parser("search", help="least (prime) primitive root of one prime")
    p_search.add_argument("--p", type=int, required=True)
    add_common(p_search)

    p_scan = sub.add_parser("scan", help="sweep a prime range for roots and families")
    p_scan.add_argument("--range", required=True, help="LO:HI")
    add_common(p_scan)

    p_int = sub.add_parser("interval", help="Psi mass of a window [M, M+N]")
    p_int.add_argument("--p", type=int, required=True)
    p_int.add_argument("--M", type=int, default=2)
    p_int.add_argument("--N", type=int, required=True)
    p_int.add_argument("--weighted", action="store_true")
    add_common(p_int)

    p_cf = sub.add_parser("charfun", help="characteristic-function evaluations")
    p_cf.add_argument("--p", type=int, required=True)
    p_cf.add_argument("--u", type=int, default=None, help="one residue (default: all)")
    add_common(p_cf)

    p_es = sub.add_parser("expsum", help="exponential-sum battery at one prime")
    p_es.add_argument("--p", type=int, required=True)
    p_es.add_argument("--b", type=int, required=True)
    p_es.add_argument("--x", type=int, default=None)
    p_es.add_argument("--q", type=int, default=None)
    p_es.add_argument("--t", type=int, default=None)
    add_common(p_es)

    p_st = sub.add_parser("stats", help="gap/Weyl/Poisson statistics at one prime")
    p_st.add_argument("--p", type=int, required=True)
    p_st.add_argument("--t", type=int, default=None)
    p_st.add_argument("--lam", default="1.0", help="comma-separated lambda values")
    add_common(p_st)

    p_con = sub.add_parser("constants", help="Euler products and empirical averages")
    p_con.add_argument("--x", type=int, default=1_000_000)
    add_common(p_con)

    p_ver = sub.add_parser("verify", help="named verification suites")
    p_ver.add_argument(
        "--suite",
        required=True,
        choices=(
            "sqrt-bound", "thm11", "thm12", "thm13", "charfun-agree",
            "expsum-bounds", "constants", "poisson", "weyl",
        ),
    )
    p_ver.add_argument("--range", default=None, help="LO:HI")
    p_ver.add_argument("--epsilon", type=float, default=0.5)
    p_ver.add_argument("--M", default=None, help="window start(s), comma-separated")
    p_ver.add_argument("--p", type=int, default=None)
    p_ver.add_argument("--x", type=int, default=1_000_000)
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--b-count", type=int, default=10, dest="b_count")
    p_ver.add_argument("--kernel-samples", type=int, default=100, dest="kernel_samples")
    p_ver.add_argument("--kernel-pmax", type=int, default=1000, dest="kernel_pmax")
    p_ver.add_argument("--exponent", type=float, default=0.525)
    p_ver.add_argument("--pmax", type=int, default=257)
    p_ver.add_argument("--sum-pmax", type=int, default=10_000, dest="sum_pmax")
    p_ver.add_argument("--lam", default="1.0,2.0")
    p_ver.add_argument("--t", default=None)
    add_common(p_ver)
    return parser


_SUITE_DEFAULTS = {
    "sqrt-bound": {"range": "410:1000000"},
    "thm11": {"range": "10000:1000000", "M": "2"},
    "thm12": {"range": "10000:100000", "M": "2"},
    "thm13": {"range": "10000:1000000", "samples": 50, "M": "2,1000"},
    "expsum-bounds": {"range": "1000:100000", "samples": 200},
}


def _apply_suite_defaults(args):
    for key, value in _SUITE_DEFAULTS.get(getattr(args, "suite", ""), {}).items():
        if getattr(args, key) is None:
            setattr(args, key, value)


_HANDLERS = {
    "search": cmd_search,
    "scan": cmd_scan,
    "interval": cmd_interval,
    "charfun": cmd_charfun,
    "expsum": cmd_expsum,
    "stats": cmd_stats,
    "constants": cmd_constants,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    start = time.monotonic()
    try:
        if args.command == "verify":
            _apply_suite_defaults(args)
        columns, rows, config, violations = _HANDLERS[args.command](args)
        config["format"] = args.format
        write_artifact(
            columns, rows, args.command, config, violations, args.format, args.out
        )
    except ValueError as exc:
        print(f"{TOOL_NAME}: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - start
    workers = _resolve_workers(args)
    print(
        f"[{TOOL_NAME}] command={args.command} rows={len(rows)} "
        f"violations={violations} workers={workers} wall_clock_s={elapsed:.3f}",
        file=sys.stderr,
    )
    return 0 if violations == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
