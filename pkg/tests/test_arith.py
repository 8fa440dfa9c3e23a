"""Arithmetic helpers against hand oracles and brute-force references."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primroot import arith

PRIMES_BELOW_100 = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97,
]


def test_sieve_primes_to_100():
    assert list(arith.sieve_primes(100).primes) == PRIMES_BELOW_100


def test_sieve_primes_small_limits():
    assert list(arith.sieve_primes(2).primes) == [2]
    assert list(arith.sieve_primes(3).primes) == [2, 3]
    assert list(arith.sieve_primes(4).primes) == [2, 3]


def test_prime_table_membership():
    table = arith.prime_table(100)
    assert 97 in table
    assert 91 not in table  # 7 * 13
    assert 1 not in table


def test_prime_count_to_1e6():
    table = arith.prime_table(10**6)
    assert int((table.primes <= 10**6).sum()) == 78498


def test_is_prime_edges():
    assert not arith.is_prime(0)
    assert not arith.is_prime(1)
    assert arith.is_prime(2)
    assert not arith.is_prime(-7)
    assert arith.is_prime(10007)
    assert not arith.is_prime(10005)


def test_is_prime_matches_sieve():
    table = set(int(q) for q in arith.prime_table(2000).primes if q <= 2000)
    for n in range(2001):
        assert arith.is_prime(n) == (n in table)


def test_factorize_oracles():
    assert arith.factorize(1).factors == ()
    assert arith.factorize(1024).factors == ((2, 10),)
    assert arith.factorize(10006).factors == ((2, 1), (5003, 1))
    assert arith.factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert arith.factorize(360).distinct_primes == (2, 3, 5)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        arith.factorize(0)


@given(st.integers(min_value=1, max_value=200_000))
@settings(max_examples=200, deadline=None)
def test_factorize_reconstructs(n):
    fac = arith.factorize(n)
    prod = 1
    for q, e in fac:
        assert arith.is_prime(q)
        prod *= q**e
    assert prod == n


def test_totient_oracles():
    assert arith.totient(1) == 1
    assert arith.totient(2) == 1
    assert arith.totient(40) == 16
    assert arith.totient(10006) == 5002
    assert arith.totient(65536) == 32768
    assert arith.totient(arith.factorize(40)) == 16


def test_moebius_oracles():
    values = {1: 1, 2: -1, 3: -1, 4: 0, 6: 1, 12: 0, 30: -1, 210: 1}
    for n, mu in values.items():
        assert arith.moebius(n) == mu


def test_omega_oracles():
    assert arith.omega(1) == 0
    assert arith.omega(16) == 1
    assert arith.omega(190) == 3
    assert arith.omega(210) == 4


def test_mangoldt_oracles():
    assert arith.mangoldt(1) == 0.0
    assert arith.mangoldt(6) == 0.0
    assert arith.mangoldt(7) == pytest.approx(math.log(7))
    assert arith.mangoldt(8) == pytest.approx(math.log(2))
    assert arith.mangoldt(121) == pytest.approx(math.log(11))


def test_divisors_ascending():
    assert arith.divisors(1) == [1]
    assert arith.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert arith.divisors(40) == [1, 2, 4, 5, 8, 10, 20, 40]


def test_next_prime():
    assert arith.next_prime(2) == 3
    assert arith.next_prime(7) == 11
    assert arith.next_prime(41) == 43
    assert arith.next_prime(10007) == 10009


def test_totient_table_matches_totient():
    table = arith.totient_table(300)
    for n in range(1, 301):
        assert int(table[n]) == arith.totient(n)


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=150, deadline=None)
def test_totient_divisor_sum(n):
    # sum of phi over divisors of n recovers n
    assert sum(arith.totient(d) for d in arith.divisors(n)) == n


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=150, deadline=None)
def test_moebius_divisor_sum(n):
    # Moebius sums to the indicator of n == 1
    total = sum(arith.moebius(d) for d in arith.divisors(n))
    assert total == (1 if n == 1 else 0)


@given(
    st.integers(min_value=1, max_value=300),
    st.integers(min_value=1, max_value=300),
)
@settings(max_examples=150, deadline=None)
def test_totient_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert arith.totient(a * b) == arith.totient(a) * arith.totient(b)


def test_mangoldt_log_identity():
    # sum of Lambda over divisors of n equals log n
    for n in range(1, 400):
        total = sum(arith.mangoldt(d) for d in arith.divisors(n))
        assert total == pytest.approx(math.log(n), abs=1e-9)
