"""Dirichlet characters mod k and the character-family identities.

The group is built from the cyclic decomposition of (Z/kZ)*: an odd prime
power contributes one cyclic component on a primitive root; 2^e contributes
nothing (e=1), C2 on 3 (e=2), or C2 x C_{2^{e-2}} on -1 and 5 (e>=3). Local
generators are CRT-lifted to mod k and every character is a tuple of
root-of-unity exponents against those components. Index 0 is the principal
character; the rest follow in lexicographic exponent-tuple order, so tables
and reports are reproducible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .arith import factorize
from .mfunc import MultiplicativeFunction


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    index: int
    values: tuple[complex, ...]  # values[r] at residue r, length = modulus

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, index {self.index})"


def _primitive_root(p: int, e: int) -> int:
    """A generator of (Z/p^eZ)* for odd prime p."""
    m = p**e
    order = p ** (e - 1) * (p - 1)
    prime_divs = [q for q, _ in factorize(order)]
    for g in range(2, m):
        if g % p == 0:
            continue
        if all(pow(g, order // q, m) != 1 for q in prime_divs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}^{e}")  # unreachable for odd p


def _crt_lift(g: int, m: int, rest: int) -> int:
    """x with x = g (mod m), x = 1 (mod rest); m and rest coprime."""
    if rest == 1:
        return g % m
    t = ((1 - g) * pow(m, -1, rest)) % rest
    return (g + m * t) % (m * rest)


def _cyclic_components(k: int) -> list[tuple[int, int]]:
    """(generator mod k, order) pairs whose direct product is (Z/kZ)*."""
    comps: list[tuple[int, int]] = []
    for p, e in factorize(k):
        m = p**e
        rest = k // m
        if p == 2:
            if e == 1:
                continue
            local = [(3, 2)] if e == 2 else [(m - 1, 2), (5, 2 ** (e - 2))]
        else:
            local = [(_primitive_root(p, e), p ** (e - 1) * (p - 1))]
        comps.extend((_crt_lift(g, m, rest), order) for g, order in local)
    return comps


@lru_cache(maxsize=256)
def character_group(k: int) -> tuple[DirichletCharacter, ...]:
    """All phi(k) characters mod k, principal first."""
    if k < 1:
        raise ValueError("modulus must be a positive integer")
    if k == 1:
        return (DirichletCharacter(1, 0, (1 + 0j,)),)

    comps = _cyclic_components(k)
    orders = [order for _, order in comps]
    phi = math.prod(orders)

    # discrete logs: enumerate the exponent lattice once
    logs: dict[int, tuple[int, ...]] = {}
    for ts in iter_product(*(range(s) for s in orders)):
        r = 1
        for (g, _), t in zip(comps, ts):
            r = (r * pow(g, t, k)) % k
        logs[r] = ts
    if len(logs) != phi:
        raise ArithmeticError(f"cyclic decomposition failed for k={k}")

    chars = []
    for index, ts in enumerate(iter_product(*(range(s) for s in orders))):
        values = [0j] * k
        for r, ls in logs.items():
            turns = sum(t * l / s for t, l, s in zip(ts, ls, orders))
            values[r] = cmath.exp(2j * math.pi * turns)
        chars.append(DirichletCharacter(k, index, tuple(values)))
    return tuple(chars)


def char_to_multiplicative(chi: DirichletCharacter) -> MultiplicativeFunction:
    """chi as a completely multiplicative function, rule (p, v) -> chi(p)^v."""
    return MultiplicativeFunction(
        f"chi:{chi.modulus}:{chi.index}",
        lambda p, v: chi(p) ** v,
        completely_multiplicative=True,
    )


def box_over_characters(k: int, a: int) -> complex:
    """The unitary convolution of all phi(k) characters, evaluated at a.

    Convolution adds rules, so the value is prod over p^v || a of
    sum_j chi_j(p^v).
    """
    if k < 2:
        raise ValueError("box_over_characters needs modulus k >= 2")
    if a < 2:
        raise ValueError("box_over_characters is stated for a >= 2")
    chars = character_group(k)
    out = 1 + 0j
    for p, v in factorize(a):
        r = pow(p, v, k)
        out *= sum(chi.values[r] for chi in chars)
    return out


def box_over_characters_closed_form(k: int, a: int) -> complex:
    """phi(k)^omega(a) when every unitary component p^{v_p(a)} is 1 mod k, else 0."""
    if k < 2 or a < 2:
        raise ValueError("closed form is stated for k >= 2, a >= 2")
    phi = len(character_group(k))
    fac = factorize(a)
    if all(pow(p, v, k) == 1 for p, v in fac):
        return complex(phi ** len(fac))
    return 0j


def product_over_characters(k: int, l: int) -> complex:
    """prod_j chi_j(l); zero as soon as gcd(l, k) > 1."""
    if k < 2:
        raise ValueError("product_over_characters needs modulus k >= 2")
    out = 1 + 0j
    for chi in character_group(k):
        out *= chi(l)
    return out
