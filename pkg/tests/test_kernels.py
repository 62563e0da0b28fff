"""Both kernel backends against naive oracles and against each other."""

import math

import numpy as np
import pytest

from unitring.kernels import backend_name, fallback

try:
    from unitring.kernels import _native as native
except ImportError:
    native = None

BACKENDS = [fallback] + ([native] if native is not None else [])
IDS = ["fallback"] + (["native"] if native is not None else [])


def naive_spf(limit):
    spf = list(range(limit + 1))
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


@pytest.mark.parametrize("impl", BACKENDS, ids=IDS)
def test_build_spf_against_naive(impl):
    limit = 5000
    got = impl.build_spf(limit)
    assert got.tolist() == naive_spf(limit)


@pytest.mark.parametrize("impl", BACKENDS, ids=IDS)
def test_split_tables_invariants(impl):
    n = 3000
    spf = impl.build_spf(n)
    comp, cof = impl.split_tables(spf, n)
    assert comp[1] == 1 and cof[1] == 1
    for m in range(2, n + 1):
        p = spf[m]
        assert comp[m] * cof[m] == m
        assert math.gcd(int(comp[m]), int(cof[m])) == 1
        assert comp[m] % p == 0
        q = int(comp[m])
        while q % p == 0:
            q //= p
        assert q == 1, f"component of {m} is not a power of {p}"


@pytest.mark.parametrize("impl", BACKENDS, ids=IDS)
def test_multiplicative_values_against_loop(impl):
    n = 3000
    spf = impl.build_spf(n)
    comp, cof = impl.split_tables(spf, n)
    rng = np.random.default_rng(7)
    ppval = np.zeros(n + 1, dtype=np.complex128)
    prime_power = [m for m in range(2, n + 1) if cof[m] == 1]
    ppval[prime_power] = rng.normal(size=len(prime_power)) + 1j * rng.normal(size=len(prime_power))

    got = impl.multiplicative_values(ppval, comp, cof)

    expected = np.zeros(n + 1, dtype=np.complex128)
    expected[1] = 1.0
    for m in range(2, n + 1):
        expected[m] = expected[cof[m]] * ppval[comp[m]]
    assert np.allclose(got, expected, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("impl", BACKENDS, ids=IDS)
def test_additive_values_count_prime_factors(impl):
    n = 2000
    spf = impl.build_spf(n)
    comp, cof = impl.split_tables(spf, n)
    ppval = np.zeros(n + 1, dtype=np.complex128)
    for m in range(2, n + 1):
        if cof[m] == 1:
            ppval[m] = 1.0
    got = impl.additive_values(ppval, comp, cof)
    for m in range(1, n + 1):
        assert got[m].real == len({p for p, _ in _factor(m)}), m


def _factor(n):
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
    return out


@pytest.mark.skipif(native is None, reason="compiled kernels unavailable")
def test_backends_agree_on_larger_range():
    n = 50_000
    spf_f = fallback.build_spf(n)
    spf_n = native.build_spf(n)
    assert np.array_equal(spf_f, spf_n)
    comp_f, cof_f = fallback.split_tables(spf_f, n)
    comp_n, cof_n = native.split_tables(spf_n, n)
    assert np.array_equal(comp_f, comp_n)
    assert np.array_equal(cof_f, cof_n)
    rng = np.random.default_rng(11)
    ppval = np.where(cof_f == 1, rng.normal(size=n + 1) + 0j, 0j)
    ppval[:2] = 0
    a = fallback.multiplicative_values(ppval, comp_f, cof_f)
    b = native.multiplicative_values(ppval, comp_n, cof_n)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


def test_selected_backend_is_reported():
    assert backend_name() in ("native", "fallback")


@pytest.mark.parametrize("impl", BACKENDS, ids=IDS)
def test_value_tables_validate_lengths(impl):
    spf = impl.build_spf(100)
    comp, cof = impl.split_tables(spf, 100)
    short = np.zeros(50, dtype=np.complex128)
    with pytest.raises((ValueError, IndexError)):
        impl.multiplicative_values(short, comp, cof)
