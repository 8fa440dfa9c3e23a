"""Pure-Python sweep kernels.

Fallback backend mirroring primroot._kernels.  The two are kept
output-identical; parity is pinned by tests.  numpy carries the bulk
array work, builtin pow() the modular exponentiation.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "sieve",
    "spf_table",
    "prime_scan",
    "psi_indicator",
    "power_table",
]

FLAG_FERMAT = 1
FLAG_GERMAIN = 2
FLAG_HIGHLY_COMPOSITE = 4

_FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def sieve(limit):
    """Return all primes <= limit as an int64 array (ascending)."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    comp = np.zeros(limit + 1, dtype=bool)
    comp[:2] = True
    for p in range(2, math.isqrt(limit) + 1):
        if not comp[p]:
            comp[p * p :: p] = True
    return np.flatnonzero(~comp).astype(np.int64)


def spf_table(limit):
    """Return the smallest-prime-factor table for 0..limit.

    spf[0] = 0, spf[1] = 1, and spf[n] is the least prime dividing n.
    """
    if limit < 1:
        raise ValueError("spf table limit must be >= 1")
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            sl = spf[p * p :: p]
            sl[sl == np.arange(p * p, limit + 1, p)] = p
    return spf


def _factor_via_spf(m, spf):
    qs, es = [], []
    rem = m
    while rem > 1:
        q = int(spf[rem])
        e = 0
        while rem % q == 0:
            rem //= q
            e += 1
        qs.append(q)
        es.append(e)
    return qs, es


def prime_scan(ps, spf, primes):
    """Scan odd primes, returning per-prime root and factorization data.

    Same contract as the compiled backend: returns (g, g_star, phi, omega,
    flags) arrays aligned with ps, flags a bitmask (1 Fermat, 2 Germain-type,
    4 highly composite).
    """
    ps = np.ascontiguousarray(ps, dtype=np.int64)
    n = len(ps)
    g_arr = np.zeros(n, dtype=np.int64)
    gs_arr = np.zeros(n, dtype=np.int64)
    phi_arr = np.zeros(n, dtype=np.int64)
    om_arr = np.zeros(n, dtype=np.int64)
    fl_arr = np.zeros(n, dtype=np.uint8)
    prime_list = [int(c) for c in primes]

    for i in range(n):
        p = int(ps[i])
        m = p - 1
        qs, es = _factor_via_spf(m, spf)
        nq = len(qs)
        phi = 1
        for q, e in zip(qs, es):
            phi *= (q - 1) * q ** (e - 1)
        phi_arr[i] = phi
        om_arr[i] = nq
        exps = [m // q for q in qs]

        flags = 0
        if nq == 1 and qs[0] == 2:
            flags |= FLAG_FERMAT
            if es[0] >= 2:
                flags |= FLAG_GERMAIN
        if nq == 2 and qs[0] == 2 and es[1] == 1:
            flags |= FLAG_GERMAIN
        if tuple(qs) == _FIRST_PRIMES[:nq]:
            flags |= FLAG_HIGHLY_COMPOSITE
        fl_arr[i] = flags

        u = 2
        while True:
            if all(pow(u, e, p) != 1 for e in exps):
                g_arr[i] = u
                break
            u += 1

        for cand in prime_list:
            if cand >= p:
                break
            if all(pow(cand, e, p) != 1 for e in exps):
                gs_arr[i] = cand
                break

    if n and gs_arr.min() == 0:
        raise AssertionError("no prime primitive root below p; contexts corrupt")
    return g_arr, gs_arr, phi_arr, om_arr, fl_arr


def power_table(p, tau):
    """Return tau^n mod p for n = 1..p-1 as an int64 array (index n-1).

    Blocked: a sqrt(p)-sized base table is stepped by tau^block with one
    vectorized modular multiply per block.  Products stay below 2^63 for
    p < 3e9.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    tau = int(tau) % p
    m = p - 1
    block = max(1, math.isqrt(m))
    base = np.empty(min(block, m), dtype=np.int64)
    cur = 1
    for i in range(len(base)):
        cur = cur * tau % p
        base[i] = cur
    out = np.empty(m, dtype=np.int64)
    step = pow(tau, len(base), p)
    mult = 1
    pos = 0
    while pos < m:
        take = min(len(base), m - pos)
        if mult == 1:
            out[pos : pos + take] = base[:take]
        else:
            np.mod(base[:take] * mult, p, out=out[pos : pos + take])
        mult = mult * step % p
        pos += take
    return out


def psi_indicator(p, tau):
    """Indicator field of the primitive roots mod p.

    Marks tau^n for every exponent n in [1, p-1] coprime to p - 1.
    Returns a uint8 array of length p indexed by residue.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    out = np.zeros(p, dtype=np.uint8)
    powers = power_table(p, tau)
    coprime = np.gcd(np.arange(1, p, dtype=np.int64), p - 1) == 1
    out[powers[coprime]] = 1
    return out
