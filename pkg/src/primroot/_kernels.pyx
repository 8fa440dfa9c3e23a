# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels.

Hot loops only: sieves, smallest-prime-factor tables, prime-range scans for
least (prime) primitive roots, power tables, and primitive-root indicator
fields.  primroot._kernels_py mirrors this module in pure Python; both must
stay output-identical.
"""

import numpy as np

__all__ = [
    "sieve",
    "spf_table",
    "prime_scan",
    "psi_indicator",
    "power_table",
]

# Modular products go through 128-bit intermediates so the kernels stay exact
# well past the desk-scale limit of ~1e7.
cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t pr_mulmod(uint64_t a, uint64_t b, uint64_t m) {
        return (uint64_t)(((__uint128_t)a * b) % m);
    }
    """
    unsigned long long pr_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long m) nogil


cdef unsigned long long pr_powmod(unsigned long long base,
                                  unsigned long long exp,
                                  unsigned long long m) nogil:
    cdef unsigned long long r = 1 % m
    base %= m
    while exp:
        if exp & 1:
            r = pr_mulmod(r, base, m)
        base = pr_mulmod(base, base, m)
        exp >>= 1
    return r


cdef long long pr_gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def sieve(long long limit):
    """Return all primes <= limit as an int64 array (ascending)."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    cdef unsigned char[::1] comp = np.zeros(limit + 1, dtype=np.uint8)
    cdef long long p, q
    for p in range(2, limit + 1):
        if p * p > limit:
            break
        if not comp[p]:
            for q in range(p * p, limit + 1, p):
                comp[q] = 1
    cdef long long count = 0
    for p in range(2, limit + 1):
        if not comp[p]:
            count += 1
    out_arr = np.empty(count, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long i = 0
    for p in range(2, limit + 1):
        if not comp[p]:
            out[i] = p
            i += 1
    return out_arr


def spf_table(long long limit):
    """Return the smallest-prime-factor table for 0..limit.

    spf[0] = 0, spf[1] = 1, and spf[n] is the least prime dividing n.
    """
    if limit < 1:
        raise ValueError("spf table limit must be >= 1")
    spf_arr = np.arange(limit + 1, dtype=np.int64)
    cdef long long[::1] spf = spf_arr
    cdef long long p, q
    for p in range(2, limit + 1):
        if p * p > limit:
            break
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf_arr


# Initial segment of the primes, long enough for any omega(p-1) reachable
# below 2^63 (the primorial of the first 16 primes already exceeds it).
cdef long long[16] _FIRST_PRIMES
_FIRST_PRIMES[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]

DEF MAX_DISTINCT = 20

FLAG_FERMAT = 1
FLAG_GERMAIN = 2
FLAG_HIGHLY_COMPOSITE = 4


def prime_scan(ps, spf, primes):
    """Scan odd primes, returning per-prime root and factorization data.

    Parameters
    ----------
    ps : int64 array of odd primes to scan (ascending).
    spf : smallest-prime-factor table covering max(ps) - 1.
    primes : int64 array of all primes up to at least max(ps) - 1,
        used as the candidate list for the least prime primitive root.

    Returns (g, g_star, phi, omega, flags) : int64 x4 + uint8 arrays aligned
    with ps.  flags is a bitmask: 1 = Fermat (p-1 a power of two),
    2 = Germain-type (p-1 = 2^a * q, q prime), 4 = highly composite
    (the distinct primes of p-1 are exactly the first omega primes).
    """
    cdef const long long[::1] ps_v = np.ascontiguousarray(ps, dtype=np.int64)
    cdef const long long[::1] spf_v = np.ascontiguousarray(spf, dtype=np.int64)
    cdef const long long[::1] pr_v = np.ascontiguousarray(primes, dtype=np.int64)
    cdef Py_ssize_t n = ps_v.shape[0]
    cdef Py_ssize_t npr = pr_v.shape[0]

    g_arr = np.zeros(n, dtype=np.int64)
    gs_arr = np.zeros(n, dtype=np.int64)
    phi_arr = np.zeros(n, dtype=np.int64)
    om_arr = np.zeros(n, dtype=np.int64)
    fl_arr = np.zeros(n, dtype=np.uint8)
    cdef long long[::1] g_v = g_arr
    cdef long long[::1] gs_v = gs_arr
    cdef long long[::1] phi_v = phi_arr
    cdef long long[::1] om_v = om_arr
    cdef unsigned char[::1] fl_v = fl_arr

    cdef long long qs[MAX_DISTINCT]
    cdef long long es[MAX_DISTINCT]
    cdef long long exps[MAX_DISTINCT]
    cdef Py_ssize_t i, j, k
    cdef long long p, m, rem, q, phi, u, cand
    cdef int nq, ok
    cdef unsigned char flags

    with nogil:
        for i in range(n):
            p = ps_v[i]
            m = p - 1
            # factor m = p - 1 through the spf table
            rem = m
            nq = 0
            phi = 1
            while rem > 1:
                q = spf_v[rem]
                qs[nq] = q
                es[nq] = 0
                while rem % q == 0:
                    rem //= q
                    es[nq] += 1
                phi *= (q - 1)
                for j in range(es[nq] - 1):
                    phi *= q
                nq += 1
            phi_v[i] = phi
            om_v[i] = nq
            for j in range(nq):
                exps[j] = m // qs[j]

            flags = 0
            if nq == 1 and qs[0] == 2:
                flags |= 1  # Fermat
                if es[0] >= 2:
                    flags |= 2  # Germain-type with q = 2
            if nq == 2 and qs[0] == 2 and es[1] == 1:
                flags |= 2  # Germain-type with q odd
            ok = 1
            for j in range(nq):
                if j >= 16 or qs[j] != _FIRST_PRIMES[j]:
                    ok = 0
                    break
            if ok:
                flags |= 4  # highly composite
            fl_v[i] = flags

            # least primitive root: first u whose order is exactly p - 1
            u = 2
            while True:
                ok = 1
                for j in range(nq):
                    if pr_powmod(u, exps[j], p) == 1:
                        ok = 0
                        break
                if ok:
                    g_v[i] = u
                    break
                u += 1

            # least prime primitive root: same test over prime candidates
            gs_v[i] = 0
            for k in range(npr):
                cand = pr_v[k]
                if cand >= p:
                    break
                ok = 1
                for j in range(nq):
                    if pr_powmod(cand, exps[j], p) == 1:
                        ok = 0
                        break
                if ok:
                    gs_v[i] = cand
                    break

    if n and np.min(gs_arr) == 0:
        raise AssertionError("no prime primitive root below p; contexts corrupt")
    return g_arr, gs_arr, phi_arr, om_arr, fl_arr


def psi_indicator(long long p, long long tau):
    """Indicator field of the primitive roots mod p.

    Walks tau^n for n = 1..p-1 and marks the residues whose exponent is
    coprime to p - 1.  Returns a uint8 array of length p indexed by residue.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    out_arr = np.zeros(p, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef long long n, m = p - 1
    cdef unsigned long long cur = 1, t = tau % p
    with nogil:
        for n in range(1, p):
            cur = pr_mulmod(cur, t, p)
            if pr_gcd(n, m) == 1:
                out[cur] = 1
    return out_arr


def power_table(long long p, long long tau):
    """Return tau^n mod p for n = 1..p-1 as an int64 array (index n-1)."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    out_arr = np.empty(p - 1, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long n
    cdef unsigned long long cur = 1, t = tau % p
    with nogil:
        for n in range(0, p - 1):
            cur = pr_mulmod(cur, t, p)
            out[n] = <long long> cur
    return out_arr
