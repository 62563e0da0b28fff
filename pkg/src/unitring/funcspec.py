"""Parser for the command-line function mini-language.

Grammar, by example:

    one, delta1, id, sigma-hat, phi, inv-rad, two-omega, minus-one-omega
    id@3           the power function n^3
    comega@2       c^omega(n) with c = 2 (complex accepted: comega@1j)
    cosa@0.5       cos(0.5 ln p^v) on prime powers; sina@0.5 likewise
    niy@1.5        the completely multiplicative n^{1.5 i}
    chi:4:1        character j = 1 mod 4, lifted to a multiplicative function
    ind:12         indicator of the unitary divisors of 12
    box(f,g)       unitary convolution; times(f,g) pointwise; inv(f) box inverse

Whitespace around arguments is ignored. Everything returns a
MultiplicativeFunction, so parsed expressions compose and feed straight into
the series engine.
"""

from __future__ import annotations

import re

from .catalog import (
    c_omega,
    cosa,
    delta_one,
    euler_phi,
    id_power,
    inv_radical,
    minus_one_omega,
    one,
    power_iy,
    sigma_hat,
    sina,
    two_omega,
)
from .characters import char_to_multiplicative, character_group
from .mfunc import (
    MultiplicativeFunction,
    indicator_of_integer,
    pointwise_product,
    unitary_convolve,
    unitary_inverse,
)


class FuncSpecError(ValueError):
    """The spec string does not parse."""


_NAMES = {
    "one": one,
    "delta1": delta_one,
    "id": id_power,
    "sigma-hat": sigma_hat,
    "phi": euler_phi,
    "inv-rad": inv_radical,
    "two-omega": two_omega,
    "minus-one-omega": minus_one_omega,
}

_COMBINATORS = {
    "box": (2, unitary_convolve),
    "times": (2, pointwise_product),
    "inv": (1, unitary_inverse),
}

_TOKEN = re.compile(r"[^(),\s]+")


def available_names() -> list[str]:
    """Atoms and combinators, for error messages and --help text."""
    atoms = sorted(_NAMES) + ["id@E", "comega@C", "cosa@Y", "sina@Y", "niy@Y",
                              "chi:K:J", "ind:N"]
    return atoms + [f"{name}(...)" for name in sorted(_COMBINATORS)]


def _number(text: str, token: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise FuncSpecError(f"{token!r}: expected a number after '@'") from None


def _atom(token: str) -> MultiplicativeFunction:
    if token in _NAMES:
        return _NAMES[token]()
    if token in _COMBINATORS:
        raise FuncSpecError(f"{token!r} needs arguments, e.g. {token}(one,id)")
    head, sep, rest = token.partition("@")
    if sep:
        if head == "id":
            return id_power(_number(rest, token))
        if head == "comega":
            try:
                return c_omega(complex(rest))
            except ValueError:
                raise FuncSpecError(f"{token!r}: expected a complex constant after '@'") from None
        if head == "cosa":
            return cosa(_number(rest, token))
        if head == "sina":
            return sina(_number(rest, token))
        if head == "niy":
            return power_iy(_number(rest, token))
        raise FuncSpecError(f"unknown parameterized name {head!r} in {token!r}")
    if token.startswith("chi:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise FuncSpecError(f"{token!r}: character spec is chi:K:J")
        try:
            k, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise FuncSpecError(f"{token!r}: K and J must be integers") from None
        group = character_group(k)
        if not 0 <= j < len(group):
            raise FuncSpecError(f"{token!r}: index J out of range (mod {k} has {len(group)} characters)")
        return char_to_multiplicative(group[j])
    if token.startswith("ind:"):
        try:
            s = int(token[4:])
        except ValueError:
            raise FuncSpecError(f"{token!r}: expected ind:N with integer N") from None
        if s < 1:
            raise FuncSpecError(f"{token!r}: N must be >= 1")
        return indicator_of_integer(s)
    raise FuncSpecError(
        f"unknown function name {token!r}; known: {', '.join(available_names())}"
    )


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_expr(text: str, pos: int) -> tuple[MultiplicativeFunction, int]:
    pos = _skip_ws(text, pos)
    m = _TOKEN.match(text, pos)
    if m is None:
        raise FuncSpecError(f"expected a function name at position {pos} in {text!r}")
    token, pos = m.group(0), m.end()
    pos = _skip_ws(text, pos)
    if pos < len(text) and text[pos] == "(":
        if token not in _COMBINATORS:
            raise FuncSpecError(f"{token!r} is not a combinator (use box, times, inv)")
        arity, build = _COMBINATORS[token]
        args = []
        pos += 1
        while True:
            fn, pos = _parse_expr(text, pos)
            args.append(fn)
            pos = _skip_ws(text, pos)
            if pos >= len(text):
                raise FuncSpecError(f"unclosed '(' in {text!r}")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise FuncSpecError(f"expected ',' or ')' at position {pos} in {text!r}")
        if len(args) != arity:
            raise FuncSpecError(f"{token} takes {arity} argument(s), got {len(args)}")
        return build(*args), pos
    return _atom(token), pos


def parse(spec: str) -> MultiplicativeFunction:
    """Parse a function expression; raises FuncSpecError on bad input."""
    if not spec or not spec.strip():
        raise FuncSpecError("empty function spec")
    fn, pos = _parse_expr(spec, 0)
    pos = _skip_ws(spec, pos)
    if pos != len(spec):
        raise FuncSpecError(f"trailing input at position {pos} in {spec!r}")
    return fn
