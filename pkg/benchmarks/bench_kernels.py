"""Benchmark the compiled sweep kernels against the pure-Python mirror.

Runs each kernel on identical inputs for every importable backend,
checks that the outputs agree, and reports best-of-N wall times with
the compiled/python speedup when both backends are present.

Usage:
    python3 benchmarks/bench_kernels.py [--limit N] [--psi-p P] [--repeats K]
"""

import argparse
import sys
import time

import numpy as np

from primroot import kernels, primctx


def best_of(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def run(limit, psi_p, repeats):
    names = kernels.available_backends()
    if "compiled" not in names:
        print("note: compiled extension not built; timing python backend only",
              file=sys.stderr)
    backends = [(name, kernels.get_backend(name)) for name in names]

    tau = primctx.build_context(psi_p).tau
    timings = {}
    outputs = {}

    for name, mod in backends:
        primes = None
        spf = None

        def bench_sieve(mod=mod):
            return mod.sieve(limit)

        def bench_spf(mod=mod):
            return mod.spf_table(limit)

        t, primes = best_of(bench_sieve, repeats)
        timings[("sieve", name)] = t
        outputs.setdefault("sieve", []).append(primes)

        t, spf = best_of(bench_spf, repeats)
        timings[("spf_table", name)] = t
        outputs.setdefault("spf_table", []).append(spf)

        window = primes[(primes >= 3) & (primes <= limit)]

        def bench_scan(mod=mod, window=window, spf=spf, primes=primes):
            return mod.prime_scan(window, spf, primes)

        t, scan = best_of(bench_scan, repeats)
        timings[("prime_scan", name)] = t
        outputs.setdefault("prime_scan", []).append(scan)

        def bench_powers(mod=mod):
            return mod.power_table(psi_p, tau)

        t, powers = best_of(bench_powers, repeats)
        timings[("power_table", name)] = t
        outputs.setdefault("power_table", []).append(powers)

        def bench_psi(mod=mod):
            return mod.psi_indicator(psi_p, tau)

        t, psi = best_of(bench_psi, repeats)
        timings[("psi_indicator", name)] = t
        outputs.setdefault("psi_indicator", []).append(psi)

    # cross-backend agreement keeps the comparison honest
    for task, results in outputs.items():
        first = results[0]
        for other in results[1:]:
            if isinstance(first, tuple):
                ok = all(np.array_equal(a, b) for a, b in zip(first, other))
            else:
                ok = np.array_equal(first, other)
            if not ok:
                raise SystemExit(f"backend outputs disagree on {task}")

    tasks = ["sieve", "spf_table", "prime_scan", "power_table", "psi_indicator"]
    print(f"kernel benchmark  (limit={limit}, psi_p={psi_p}, best of {repeats})")
    header = f"{'task':<14}" + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for task in tasks:
        row = f"{task:<14}"
        for name in names:
            row += f"{timings[(task, name)] * 1e3:>10.2f}ms"
        if len(names) == 2:
            ratio = timings[(task, names[1])] / timings[(task, names[0])]
            row += f"{ratio:>9.1f}x"
        print(row)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=200000,
                    help="sieve/scan upper bound (default 200000)")
    ap.add_argument("--psi-p", type=int, default=999983,
                    help="prime for the power/indicator kernels (default 999983)")
    ap.add_argument("--repeats", type=int, default=3,
                    help="take the best of this many runs (default 3)")
    args = ap.parse_args(argv)
    run(args.limit, args.psi_p, args.repeats)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
