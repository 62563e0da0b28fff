"""The standard function catalog.

Names follow the CLI grammar: one, delta1, id, sigma-hat, phi, inv-rad,
two-omega, minus-one-omega, and the parameterized families cosa@y, sina@y,
niy@y, comega@c. sigma-hat and phi are built from their defining compositions
(id box one, and id times (one box ((-1)^omega times 1/rad))), not from closed
forms, so the algebra stays on the hook for their values.
"""

from __future__ import annotations

import cmath
import math

from . import arith
from .mfunc import (
    MultiplicativeFunction,
    pointwise_product,
    unitary_convolve,
)


def one() -> MultiplicativeFunction:
    """Constant 1; neutral for the pointwise product."""
    return MultiplicativeFunction("one", lambda p, v: 1.0, completely_multiplicative=True)


def delta_one() -> MultiplicativeFunction:
    """1 at n = 1 and 0 elsewhere; neutral for the unitary convolution."""
    return MultiplicativeFunction("delta1", lambda p, v: 0.0, completely_multiplicative=True)


def id_power(e: float = 1.0) -> MultiplicativeFunction:
    """n -> n^e on prime powers; e = 1 is the identity function."""
    label = "id" if e == 1 else f"id^{e:g}"
    return MultiplicativeFunction(
        label, lambda p, v: float(p) ** (v * e), completely_multiplicative=True
    )


def c_omega(c: complex) -> MultiplicativeFunction:
    """n -> c^{omega(n)}: the rule is the constant c on every prime power."""
    c = complex(c)
    return MultiplicativeFunction(f"comega@{c:g}", lambda p, v: c)


def two_omega() -> MultiplicativeFunction:
    f = c_omega(2)
    f.label = "two-omega"
    return f


def minus_one_omega() -> MultiplicativeFunction:
    f = c_omega(-1)
    f.label = "minus-one-omega"
    return f


def inv_radical() -> MultiplicativeFunction:
    """n -> 1/rad(n)."""
    return MultiplicativeFunction("inv-rad", lambda p, v: 1.0 / p)


def cosa(y: float) -> MultiplicativeFunction:
    """Multiplicative cos(y ln .): rule (p, v) -> cos(y ln p^v)."""
    return MultiplicativeFunction(f"cosa@{y:g}", lambda p, v: math.cos(y * v * math.log(p)))


def sina(y: float) -> MultiplicativeFunction:
    """Multiplicative sin(y ln .): rule (p, v) -> sin(y ln p^v)."""
    return MultiplicativeFunction(f"sina@{y:g}", lambda p, v: math.sin(y * v * math.log(p)))


def power_iy(y: float) -> MultiplicativeFunction:
    """n -> n^{iy}, completely multiplicative."""
    return MultiplicativeFunction(
        f"niy@{y:g}",
        lambda p, v: cmath.exp(1j * y * v * math.log(p)),
        completely_multiplicative=True,
    )


def sigma_hat() -> MultiplicativeFunction:
    """Sum of unitary divisors, defined as id box one."""
    f = unitary_convolve(id_power(1), one())
    f.label = "sigma-hat"
    return f


def euler_phi() -> MultiplicativeFunction:
    """Euler phi through its unitary-ring factorization:
    id times (one box ((-1)^omega times 1/rad))."""
    inner = unitary_convolve(one(), pointwise_product(minus_one_omega(), inv_radical()))
    f = pointwise_product(id_power(1), inner)
    f.label = "phi"
    return f


def restrict_to_primes(
    F: MultiplicativeFunction, primes: frozenset[int] | set[int], complement: bool = False
) -> MultiplicativeFunction:
    """Pointwise product with the indicator of {n : every p | n is in the set}.

    complement=True uses the primes outside the set instead.
    """
    allowed = frozenset(int(p) for p in primes)
    f = F.on_prime_power
    inside = (lambda p: p not in allowed) if complement else (lambda p: p in allowed)
    tag = "~" if complement else ""
    label = f"restrict[{tag}{{{','.join(map(str, sorted(allowed)))}}}]({F.label})"
    return MultiplicativeFunction(
        label,
        lambda p, v: f(p, v) if inside(p) else 0.0,
        completely_multiplicative=F.completely_multiplicative,
    )


def reconstruct_power(m: int, y: float) -> complex:
    """[cosa_y box (i^omega times sina_y)](m), which rebuilds m^{iy}."""
    f = unitary_convolve(cosa(y), pointwise_product(c_omega(1j), sina(y)))
    return f(m)


def cosa_at(a: float, y: float) -> float:
    """Plain cos(y ln a) for a positive real (ratios of integers allowed)."""
    if a <= 0:
        raise ValueError("cosa_at needs a positive argument")
    return math.cos(y * math.log(a))


def sina_at(a: float, y: float) -> float:
    """Plain sin(y ln a) for a positive real."""
    if a <= 0:
        raise ValueError("sina_at needs a positive argument")
    return math.sin(y * math.log(a))


def catalog() -> dict[str, MultiplicativeFunction]:
    """The fixed named entries (parameterized families live as factories)."""
    return {
        "one": one(),
        "delta1": delta_one(),
        "id": id_power(1),
        "two-omega": two_omega(),
        "minus-one-omega": minus_one_omega(),
        "inv-rad": inv_radical(),
        "sigma-hat": sigma_hat(),
        "phi": euler_phi(),
    }
