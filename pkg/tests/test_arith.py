"""Factorization and divisor enumeration against trial-division oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitring import arith


def naive_factorize(n):
    """Plain trial division, the oracle for everything in this file."""
    out = []
    d = 2
    while d * d <= n:
        v = 0
        while n % d == 0:
            n //= d
            v += 1
        if v:
            out.append((d, v))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_factorize_small_range():
    for n in range(1, 2000):
        assert arith.factorize(n) == naive_factorize(n), n


def test_factorize_above_sieve_table():
    # larger than any table we build in tests: exercises the trial-division path
    n = 10**14 + 31
    fac = arith.factorize(n)
    prod = 1
    for p, v in fac:
        prod *= p**v
    assert prod == n
    assert fac == naive_factorize(n)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_primes_below_100():
    primes = arith.sieve_primes(100)
    assert len(primes) == 25
    assert primes[:5] == [2, 3, 5, 7, 11]
    assert primes[-1] == 97


def test_prime_array_matches_list():
    assert arith.prime_array(500).tolist() == arith.sieve_primes(500)
    assert arith.prime_array(1).size == 0


def test_prime_powers_listing():
    got = [(p, v, q) for p, v, q in arith.prime_powers(30)]
    assert (2, 1, 2) in got and (2, 4, 16) in got and (3, 3, 27) in got
    assert (2, 5, 32) not in got
    assert all(q == p**v and q <= 30 for p, v, q in got)


def test_omega_and_radical():
    assert arith.omega(1) == 0
    assert arith.omega(30030) == 6  # 2*3*5*7*11*13
    assert arith.radical(360) == 30
    assert arith.radical(1) == 1


def test_valuation():
    assert arith.valuation(360, 2) == 3
    assert arith.valuation(360, 7) == 0
    with pytest.raises(ValueError):
        arith.valuation(360, 6)


def test_is_prime_agrees_with_factorization():
    for n in range(1, 500):
        assert arith.is_prime(n) == (len(naive_factorize(n)) == 1 and naive_factorize(n)[0][1] == 1)


def test_gcd_matches_math():
    for a in range(1, 60):
        for b in range(1, 60):
            assert arith.gcd(a, b) == math.gcd(a, b)
    with pytest.raises(ValueError):
        arith.gcd(0, 5)


def test_coprime_decompose_example():
    t = arith.coprime_decompose(12, 18)
    assert (t.p, t.n, t.q) == (6, 2, 3)
    assert t.p * t.n == 12 and t.p * t.q == 18


def test_coprime_decompose_roundtrip():
    for a in range(1, 120):
        for b in range(1, 120):
            t = arith.coprime_decompose(a, b)
            assert t.p * t.n == a
            assert t.p * t.q == b
            assert math.gcd(t.n, t.q) == 1
            assert t.p == math.gcd(a, b)


def test_divisors_ascending():
    for n in (1, 2, 12, 36, 97, 360):
        assert arith.divisors(n) == naive_divisors(n)


def test_divisor_pairs():
    pairs = arith.divisor_pairs(12)
    assert pairs == [(1, 12), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)]
    assert all(a * b == 12 for a, b in pairs)


def test_unitary_divisor_pairs():
    pairs = arith.unitary_divisor_pairs(12)
    assert all(a * b == 12 and math.gcd(a, b) == 1 for a, b in pairs)
    assert len(pairs) == 2 ** arith.omega(12)
    assert (1, 12) in pairs and (4, 3) in pairs
    assert arith.unitary_divisor_pairs(1) == [(1, 1)]


def test_unitary_divisor_pair_count_is_two_power_omega():
    for n in range(1, 400):
        assert len(arith.unitary_divisor_pairs(n)) == 2 ** arith.omega(n)


@given(st.integers(min_value=1, max_value=10**5))
@settings(max_examples=300, deadline=None)
def test_factorize_reconstructs(n):
    prod = 1
    for p, v in arith.factorize(n):
        assert arith.is_prime(p)
        assert v >= 1
        prod *= p**v
    assert prod == n


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=3000))
@settings(max_examples=300, deadline=None)
def test_coprime_decompose_is_injective_on_samples(a, b):
    t = arith.coprime_decompose(a, b)
    # the triple determines (a, b) uniquely, so recomposition is exact
    assert (t.p * t.n, t.p * t.q) == (a, b)
