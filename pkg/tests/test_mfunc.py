"""Ring operations against brute-force divisor-sum oracles."""

import cmath
import math

import numpy as np
import pytest

from unitring import arith, catalog, mfunc, weights


def brute_unitary_convolve(F, G, n):
    total = 0j
    for a in range(1, n + 1):
        if n % a:
            continue
        b = n // a
        if math.gcd(a, b) == 1:
            total += F(a) * G(b)
    return total


def brute_dirichlet_convolve(F, G, n):
    total = 0j
    for a in range(1, n + 1):
        if n % a == 0:
            total += F(a) * G(n // a)
    return total


def test_evaluate_known_values():
    assert mfunc.evaluate(catalog.sigma_hat(), 12) == 20
    assert mfunc.evaluate(catalog.sigma_hat(), 36) == 50  # 1 + 4 + 9 + 36
    assert mfunc.evaluate(catalog.one(), 997) == 1
    assert mfunc.evaluate(catalog.delta_one(), 1) == 1
    assert mfunc.evaluate(catalog.delta_one(), 2) == 0
    assert mfunc.evaluate(catalog.two_omega(), 60) == 8
    assert mfunc.evaluate(catalog.minus_one_omega(), 30) == -1


def test_call_rejects_nonpositive():
    with pytest.raises(ValueError):
        catalog.one()(0)


def test_values_matches_pointwise_calls():
    F = mfunc.random_multiplicative(seed=3)
    table = F.values(800)
    assert table[0] == 0
    for n in range(1, 801):
        assert abs(table[n] - F(n)) <= 1e-12


def test_unitary_convolve_is_the_coprime_divisor_sum():
    F = mfunc.random_multiplicative(seed=101)
    G = mfunc.random_multiplicative(seed=202)
    H = mfunc.unitary_convolve(F, G)
    for n in range(1, 400):
        want = brute_unitary_convolve(F, G, n)
        assert abs(H(n) - want) <= 1e-12 * max(1.0, abs(want))


def test_unitary_convolve_examples():
    box = mfunc.unitary_convolve(catalog.id_power(1), catalog.one())
    assert box(12) == 20
    # F box F doubles every prime-power value: (4+4)(3+3) at 12
    double = mfunc.unitary_convolve(catalog.id_power(1), catalog.id_power(1))
    assert double(12) == 48
    two_om_times = mfunc.pointwise_product(catalog.two_omega(), catalog.id_power(1))
    assert two_om_times(12) == 48


def test_convolution_ring_laws_on_samples():
    A = mfunc.random_multiplicative(seed=5)
    B = mfunc.random_multiplicative(seed=6)
    C = mfunc.random_multiplicative(seed=7)
    left = mfunc.unitary_convolve(A, B)
    right = mfunc.unitary_convolve(B, A)
    assoc_l = mfunc.unitary_convolve(mfunc.unitary_convolve(A, B), C)
    assoc_r = mfunc.unitary_convolve(A, mfunc.unitary_convolve(B, C))
    dist_l = mfunc.pointwise_product(C, mfunc.unitary_convolve(A, B))
    dist_r = mfunc.unitary_convolve(
        mfunc.pointwise_product(C, A), mfunc.pointwise_product(C, B)
    )
    for n in list(range(1, 200)) + [960, 1024, 9973, 10000]:
        assert abs(left(n) - right(n)) <= 1e-12
        assert abs(assoc_l(n) - assoc_r(n)) <= 1e-12
        assert abs(dist_l(n) - dist_r(n)) <= 1e-12


def test_neutral_elements():
    F = mfunc.random_multiplicative(seed=9)
    boxed = mfunc.unitary_convolve(F, catalog.delta_one())
    timesed = mfunc.pointwise_product(F, catalog.one())
    for n in range(1, 300):
        assert abs(boxed(n) - F(n)) <= 1e-12
        assert abs(timesed(n) - F(n)) <= 1e-12


def test_unitary_inverse_law():
    F = mfunc.random_multiplicative(seed=12)
    H = mfunc.unitary_convolve(F, mfunc.unitary_inverse(F))
    assert abs(H(1) - 1) <= 1e-12
    for n in range(2, 2000):
        assert abs(H(n)) <= 1e-12


def test_unitary_inverse_closed_form():
    # the inverse is (-1)^omega(n) F(n)
    F = mfunc.random_multiplicative(seed=13)
    I = mfunc.unitary_inverse(F)
    for n in range(1, 500):
        assert abs(I(n) - (-1) ** arith.omega(n) * F(n)) <= 1e-12


def test_w_convolve_with_ones_is_full_divisor_sum():
    F = mfunc.random_multiplicative(seed=21)
    G = mfunc.random_multiplicative(seed=22)
    H = mfunc.w_convolve(F, G, weights.ones_weight())
    for n in range(1, 120):
        assert abs(H(n) - brute_dirichlet_convolve(F, G, n)) <= 1e-12


def test_w_convolve_with_coprime_weight_matches_unitary():
    F = mfunc.random_multiplicative(seed=23)
    G = mfunc.random_multiplicative(seed=24)
    H = mfunc.w_convolve(F, G, weights.coprime_weight())
    box = mfunc.unitary_convolve(F, G)
    for n in range(1, 200):
        assert abs(H(n) - box(n)) <= 1e-12


def test_w_convolve_at_one_sees_w_one_one():
    F = catalog.one()
    W = weights.scaled_coprime_weight(3.0)
    H = mfunc.w_convolve(F, F, W)
    assert abs(H(1) - 3.0) <= 1e-12


def test_twist_by_power():
    F = mfunc.random_multiplicative(seed=31)
    t = 0.7
    T = mfunc.twist_by_power(F, t)
    for n in range(1, 300):
        assert abs(T(n) - F(n) * cmath.exp(1j * t * math.log(n))) <= 1e-12


def test_indicator_of_integer_is_unitary_divisor_indicator():
    ind = mfunc.indicator_of_integer(12)
    hits = [n for n in range(1, 60) if abs(ind(n) - 1) <= 1e-12]
    assert hits == [1, 3, 4, 12]
    assert mfunc.indicator_of_integer(1)(1) == 1
    assert mfunc.indicator_of_integer(1)(2) == 0


def test_random_multiplicative_reproducible_and_bounded():
    F = mfunc.random_multiplicative(seed=77)
    G = mfunc.random_multiplicative(seed=77)
    H = mfunc.random_multiplicative(seed=78)
    vals_f = [F(n) for n in range(1, 200)]
    vals_g = [G(n) for n in range(1, 200)]
    assert vals_f == vals_g
    assert any(abs(a - b) > 1e-9 for a, b in zip(vals_f, (H(n) for n in range(1, 200))))
    assert all(abs(F.on_prime_power(p, v)) <= 1.0 for p in (2, 3, 97) for v in (1, 2, 5))
    with pytest.raises(TypeError):
        mfunc.random_multiplicative()


def test_remarkable_identity():
    # (A box B) times (A box (-1)^omega B) = A^2 box (-1)^omega B^2
    A = mfunc.random_multiplicative(seed=41)
    B = mfunc.random_multiplicative(seed=42)
    minus = catalog.minus_one_omega()
    lhs = mfunc.pointwise_product(
        mfunc.unitary_convolve(A, B),
        mfunc.unitary_convolve(A, mfunc.pointwise_product(minus, B)),
    )
    rhs = mfunc.unitary_convolve(
        mfunc.pointwise_product(A, A),
        mfunc.pointwise_product(minus, mfunc.pointwise_product(B, B)),
    )
    for n in range(1, 1500):
        assert abs(lhs(n) - rhs(n)) <= 1e-12


def test_cos_squared_box_sin_squared_is_one():
    for y in (0.0, 0.5, 1.7, -3.2):
        c, s = catalog.cosa(y), catalog.sina(y)
        combo = mfunc.unitary_convolve(
            mfunc.pointwise_product(c, c), mfunc.pointwise_product(s, s)
        )
        for n in range(1, 800):
            assert abs(combo(n) - 1) <= 1e-12


def test_reconstruct_power():
    for m in (1, 2, 12, 97, 5040):
        for y in (0.0, 0.3, -2.5):
            got = catalog.reconstruct_power(m, y)
            assert abs(got - cmath.exp(1j * y * math.log(m))) <= 1e-12


def test_euler_phi_matches_coprime_count():
    phi = catalog.euler_phi()
    for n in range(1, 300):
        count = sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert abs(phi(n) - count) <= 1e-9, n


def test_restrict_to_primes_partition():
    F = catalog.one()
    inside = catalog.restrict_to_primes(F, {2, 3})
    outside = catalog.restrict_to_primes(F, {2, 3}, complement=True)
    assert inside(6) == 1 and inside(12) == 1 and inside(10) == 0
    assert outside(35) == 1 and outside(5) == 1 and outside(10) == 0
    assert inside(1) == 1 and outside(1) == 1


def test_catalog_labels_resolve():
    table = catalog.catalog()
    assert set(table) >= {"one", "delta1", "id", "two-omega", "minus-one-omega",
                          "inv-rad", "sigma-hat", "phi"}
    for fn in table.values():
        assert abs(fn(1) - 1) <= 1e-12 or fn.label == "delta1"
