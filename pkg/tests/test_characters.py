"""Character groups mod k: structure, orthogonality, and the box/product sums."""

import cmath
import functools
import math

import pytest

from unitring import arith, mfunc
from unitring.characters import (
    box_over_characters,
    box_over_characters_closed_form,
    character_group,
    char_to_multiplicative,
    product_over_characters,
)


def naive_phi(k):
    return sum(1 for a in range(1, k + 1) if math.gcd(a, k) == 1)


@pytest.mark.parametrize("k", list(range(1, 31)) + [40, 72, 100])
def test_group_size_is_phi(k):
    assert len(character_group(k)) == naive_phi(k)


def test_characters_are_distinct():
    for k in (3, 4, 5, 8, 12, 15, 16, 24):
        seen = {chi.values for chi in character_group(k)}
        assert len(seen) == naive_phi(k)


def test_principal_character_is_index_zero():
    for k in (1, 2, 3, 4, 5, 12):
        group = character_group(k)
        assert group[0].is_principal
        for n in range(2 * k + 1):
            expected = 1.0 if math.gcd(n, k) == 1 else 0.0
            assert abs(group[0](n) - expected) <= 1e-12


def test_mod4_nonprincipal():
    chi = character_group(4)[1]
    assert abs(chi(1) - 1) <= 1e-12
    assert abs(chi(3) + 1) <= 1e-12
    assert chi(0) == 0 and chi(2) == 0


def test_mod5_contains_fourth_roots():
    group = character_group(5)
    values_at_2 = sorted(
        (round(chi(2).real, 9), round(chi(2).imag, 9)) for chi in group
    )
    assert values_at_2 == [(-1.0, 0.0), (0.0, -1.0), (0.0, 1.0), (1.0, 0.0)]


def test_mod1_group_is_trivial():
    group = character_group(1)
    assert len(group) == 1
    for n in range(8):
        assert group[0](n) == 1


def test_periodicity_and_vanishing():
    for k in (3, 4, 8, 9, 12):
        for chi in character_group(k):
            for n in range(1, 4 * k):
                assert abs(chi(n + k) - chi(n)) <= 1e-12
                if math.gcd(n, k) > 1:
                    assert chi(n) == 0


def test_complete_multiplicativity():
    for k in (4, 5, 9, 12):
        for chi in character_group(k):
            for m in range(1, 40):
                for n in range(1, 40):
                    assert abs(chi(m * n % k) - chi(m) * chi(n)) <= 1e-12


def test_group_closure_under_pointwise_product():
    for k in (5, 8, 12):
        group = character_group(k)
        tuples = {tuple(round(z.real, 9) + 1j * round(z.imag, 9) for z in chi.values)
                  for chi in group}
        for chi in group:
            for psi in group:
                prod = tuple(
                    round((a * b).real, 9) + 1j * round((a * b).imag, 9)
                    for a, b in zip(chi.values, psi.values)
                )
                assert prod in tuples


def test_orthogonality_over_n():
    for k in (3, 4, 5, 8, 12):
        for chi in character_group(k):
            total = sum(chi(n) for n in range(k))
            expected = naive_phi(k) if chi.is_principal else 0.0
            assert abs(total - expected) <= 1e-10


def test_orthogonality_over_characters():
    for k in (3, 4, 5, 8, 12):
        group = character_group(k)
        for a in range(1, k + 1):
            total = sum(chi(a) for chi in group)
            expected = len(group) if a % k == 1 else 0.0
            assert abs(total - expected) <= 1e-10


def test_char_to_multiplicative_matches_character():
    for k in (4, 5, 12):
        for chi in character_group(k):
            F = char_to_multiplicative(chi)
            assert F.completely_multiplicative
            for n in range(1, 200):
                assert abs(F(n) - chi(n % k)) <= 1e-12


def test_box_over_characters_examples():
    assert abs(box_over_characters(4, 5) - 2) <= 1e-12
    assert abs(box_over_characters(4, 3)) <= 1e-12
    assert abs(box_over_characters(3, 49) - 2) <= 1e-12


def test_box_over_characters_against_fold():
    # oracle: actually box together all phi(k) characters and evaluate
    for k in (3, 4, 5):
        fns = [char_to_multiplicative(chi) for chi in character_group(k)]
        boxed = functools.reduce(mfunc.unitary_convolve, fns)
        for a in range(2, 300):
            want = boxed(a)
            got = box_over_characters(k, a)
            assert abs(got - want) <= 1e-9, (k, a)


def test_box_closed_form_agreement():
    for k in (3, 4, 5, 8, 12):
        for a in range(2, 2000):
            got = box_over_characters(k, a)
            want = box_over_characters_closed_form(k, a)
            assert abs(got - want) <= 1e-9, (k, a)


def test_box_closed_form_counts_unit_components():
    # nonzero exactly when every prime-power component of a is 1 mod k,
    # and then the value is phi(k)^omega(a)
    assert abs(box_over_characters_closed_form(4, 5) - 2) <= 1e-12
    assert abs(box_over_characters_closed_form(4, 45) - 4) <= 1e-12  # 45 = 9 * 5, both 1 mod 4
    assert box_over_characters_closed_form(4, 21) == 0  # 21 = 3 * 7, 3 != 1 mod 4
    assert abs(box_over_characters(4, 21)) <= 1e-12


def test_product_over_characters_examples():
    assert abs(product_over_characters(4, 3) + 1) <= 1e-12
    assert abs(product_over_characters(5, 2) + 1) <= 1e-12
    for k in (3, 4, 5, 8):
        group = character_group(k)
        for l in range(1, 30):
            direct = 1 + 0j
            for chi in group:
                direct *= chi(l)
            assert abs(product_over_characters(k, l) - direct) <= 1e-10


def test_character_group_input_validation():
    with pytest.raises(ValueError):
        character_group(0)
    group = character_group(7)
    with pytest.raises(IndexError):
        _ = group[7]


def test_box_over_characters_input_validation():
    with pytest.raises(ValueError):
        box_over_characters(1, 10)
    with pytest.raises(ValueError):
        box_over_characters(4, 1)
