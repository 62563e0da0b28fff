"""Multiplicative functions and their convolution algebra.

A MultiplicativeFunction is determined by its rule on prime powers; evaluation
at n multiplies the rule over the factorization of n, so F(1) = 1 always. The
unitary convolution has the product formula [F box G](p^v) = F(p^v) + G(p^v),
hence stays inside the class; the general weighted convolution does not, and
returns a plain point-by-point function instead.
"""

from __future__ import annotations

import cmath
import functools
import math
import random
from typing import Callable, Iterable

import numpy as np

from . import arith, kernels

Rule = Callable[[int, int], complex]


class MultiplicativeFunction:
    """F with F(1) = 1 and F(ab) = F(a)F(b) for coprime a, b.

    The rule gives F on prime powers (p, v >= 1) and is memoized; instances
    are immutable and safe to evaluate concurrently. The flag
    completely_multiplicative is advisory: it gates identities whose proofs
    need F(ab) = F(a)F(b) for all a, b.
    """

    __slots__ = ("label", "completely_multiplicative", "_rule")

    def __init__(
        self,
        label: str,
        rule: Rule,
        completely_multiplicative: bool = False,
        cache_size: int = 1 << 16,
    ):
        self.label = label
        self.completely_multiplicative = bool(completely_multiplicative)
        self._rule = functools.lru_cache(maxsize=cache_size)(rule)

    def on_prime_power(self, p: int, v: int) -> complex:
        return complex(self._rule(p, v))

    def __call__(self, n: int) -> complex:
        if n < 1:
            raise ValueError(f"multiplicative functions are defined on n >= 1, got {n}")
        out = 1 + 0j
        for p, v in arith.factorize(n):
            out *= self._rule(p, v)
        return complex(out)

    def values(self, n: int) -> np.ndarray:
        """F(m) for m = 0..n as complex128 (index 0 is 0, index 1 is 1)."""
        component, cofactor = arith.split_tables(n)
        ppval = np.zeros(n + 1, dtype=np.complex128)
        for p, v, q in arith.prime_powers(n):
            ppval[q] = self._rule(p, v)
        return kernels.multiplicative_values(ppval, component, cofactor)

    def __repr__(self):
        return f"MultiplicativeFunction({self.label!r})"


class ArithmeticFunction:
    """Plain point-by-point function; no multiplicativity promised."""

    __slots__ = ("label", "_value")

    def __init__(self, label: str, value: Callable[[int], complex], cache_size: int = 1 << 16):
        self.label = label
        self._value = functools.lru_cache(maxsize=cache_size)(value)

    def __call__(self, n: int) -> complex:
        if n < 1:
            raise ValueError(f"arithmetic functions are defined on n >= 1, got {n}")
        return complex(self._value(n))

    def __repr__(self):
        return f"ArithmeticFunction({self.label!r})"


def evaluate(F, n: int) -> complex:
    """F(n). Functions are callable; this spelling reads better in scripts."""
    return F(n)


def w_convolve(F, G, W) -> ArithmeticFunction:
    """[F conv_W G](m) = sum over a*b = m of F(a) G(b) W(a, b).

    The result is a plain function: multiplicativity only survives for
    weights with the two-variable stability property, which general W lacks.
    """

    def value(m: int) -> complex:
        acc = 0j
        for a, b in arith.divisor_pairs(m):
            fa = F(a)
            gb = G(b)
            if fa != 0 and gb != 0:
                acc += fa * gb * complex(W.rule(a, b))
        return acc

    return ArithmeticFunction(f"wconv[{W.label}]({F.label},{G.label})", value)


def unitary_convolve(F: MultiplicativeFunction, G: MultiplicativeFunction) -> MultiplicativeFunction:
    """[F box G](n) = sum over coprime a*b = n of F(a) G(b).

    By the product formula this is the multiplicative function with rule
    (p, v) -> F(p^v) + G(p^v).
    """
    f, g = F.on_prime_power, G.on_prime_power
    return MultiplicativeFunction(
        f"box({F.label},{G.label})", lambda p, v: f(p, v) + g(p, v)
    )


def pointwise_product(F: MultiplicativeFunction, G: MultiplicativeFunction) -> MultiplicativeFunction:
    """[F times G](n) = F(n) G(n); rule is the pointwise rule product."""
    f, g = F.on_prime_power, G.on_prime_power
    return MultiplicativeFunction(
        f"times({F.label},{G.label})",
        lambda p, v: f(p, v) * g(p, v),
        completely_multiplicative=F.completely_multiplicative and G.completely_multiplicative,
    )


def unitary_inverse(F: MultiplicativeFunction) -> MultiplicativeFunction:
    """The box-inverse: rule (p, v) -> -F(p^v), so F box inv(F) = delta1.

    Globally this is n -> (-1)^omega(n) F(n) -- the same multiplicative
    function; only the prime-power rule is implemented.
    """
    f = F.on_prime_power
    return MultiplicativeFunction(f"inv({F.label})", lambda p, v: -f(p, v))


def twist_by_power(F: MultiplicativeFunction, t: float) -> MultiplicativeFunction:
    """Pointwise multiply by n^{it}: rule (p, v) -> F(p^v) * (p^v)^{it}."""
    f = F.on_prime_power
    return MultiplicativeFunction(
        f"twist({F.label},{t:g})",
        lambda p, v: f(p, v) * cmath.exp(1j * t * v * math.log(p)),
        completely_multiplicative=F.completely_multiplicative,
    )


def indicator(S: Iterable[tuple[int, int]], label: str | None = None) -> MultiplicativeFunction:
    """1 on the prime powers listed in S (and at 1), 0 elsewhere."""
    pairs = frozenset((int(p), int(v)) for p, v in S)
    return MultiplicativeFunction(
        label or f"ind{sorted(pairs)}",
        lambda p, v: 1.0 if (p, v) in pairs else 0.0,
    )


def indicator_of_integer(s: int) -> MultiplicativeFunction:
    """Indicator of the unitary divisors of s; s = 1 gives delta1."""
    return indicator(arith.factorize(s), label=f"ind:{s}")


def random_multiplicative(seed: int, label: str | None = None) -> MultiplicativeFunction:
    """Reproducible pseudo-random F with |F(p^v)| <= 1.

    The value at (p, v) depends only on (seed, p, v), never on evaluation
    order. seed is required by design: runs must be replayable.
    """
    if seed is None:
        raise ValueError("random_multiplicative requires an explicit seed")

    def rule(p: int, v: int) -> complex:
        rng = random.Random(((seed & 0xFFFFFFFF) << 48) ^ (p << 10) ^ v)
        modulus = rng.random()
        angle = rng.random() * 2 * math.pi
        return modulus * cmath.exp(1j * angle)

    return MultiplicativeFunction(label or f"random@{seed}", rule)
