"""Convolution weights and the ring-axiom checker.

check_ring_axioms tests the five conditions under which the weighted
convolution makes (multiplicative functions, conv_W, times) a commutative
ring. "Up to bound" means every W evaluation a condition needs stays inside
the box [1..bound]^2; the product-constrained enumerations below are the
largest finite families with that property. Failures are data (witness plus
both side values), never exceptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import arith
from .mfunc import indicator_of_integer, pointwise_product, w_convolve

_TOL = 1e-12


@dataclass(frozen=True)
class WeightFunction:
    """Total map (a, b) in N* x N* -> complex."""

    label: str
    rule: Callable[[int, int], complex]


def coprime_weight() -> WeightFunction:
    return WeightFunction("coprime", lambda a, b: 1.0 if math.gcd(a, b) == 1 else 0.0)


def ones_weight() -> WeightFunction:
    return WeightFunction("ones", lambda a, b: 1.0)


def scaled_coprime_weight(c: complex) -> WeightFunction:
    c = complex(c)
    return WeightFunction(
        f"coprime*{c:g}", lambda a, b: c if math.gcd(a, b) == 1 else 0.0
    )


def table_weight(entries: dict[tuple[int, int], complex], label: str = "custom-table") -> WeightFunction:
    """Finite table; pairs not listed evaluate to 0."""
    frozen = {(int(a), int(b)): complex(z) for (a, b), z in entries.items()}
    return WeightFunction(label, lambda a, b: frozen.get((a, b), 0j))


def load_weight_table(path: str) -> WeightFunction:
    """Parse a weight table file: one 'a b re im' per line, # comments."""
    entries: dict[tuple[int, int], complex] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = body.split()
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 'a b re im', got {body!r}")
            a, b = int(parts[0]), int(parts[1])
            entries[(a, b)] = complex(float(parts[2]), float(parts[3]))
    return table_weight(entries, label=f"custom-table:{path}")


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None  # argument tuple of the first failure
    lhs: complex | None = None
    rhs: complex | None = None

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL at {self.witness}: {self.lhs} != {self.rhs}"


@dataclass
class AxiomReport:
    weight_label: str
    bound: int
    checks: dict[str, AxiomCheck] = field(default_factory=dict)

    AXIOMS = (
        "commutativity",
        "stability",
        "neutral-element",
        "associativity-cocycle",
        "distributivity",
    )

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def __str__(self):
        head = f"ring axioms for W={self.weight_label}, bound={self.bound}"
        return "\n".join([head] + ["  " + self.checks[a].describe() for a in self.AXIOMS])


def _weight_table(W: WeightFunction, amax: int, bmax: int) -> np.ndarray:
    """W on [0..amax] x [0..bmax]; row/col 0 unused."""
    T = np.zeros((amax + 1, bmax + 1), dtype=np.complex128)
    for a in range(1, amax + 1):
        for b in range(1, bmax + 1):
            T[a, b] = W.rule(a, b)
    return T


def _product_pairs(bound: int) -> tuple[np.ndarray, np.ndarray]:
    """All (u, w) with u*w <= bound, lexicographic."""
    us, ws = [], []
    for u in range(1, bound + 1):
        top = bound // u
        us.extend([u] * top)
        ws.extend(range(1, top + 1))
    return np.array(us, dtype=np.int64), np.array(ws, dtype=np.int64)


def check_ring_axioms(W: WeightFunction, bound: int) -> AxiomReport:
    """Test the five ring conditions for conv_W on arguments up to bound."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    report = AxiomReport(weight_label=W.label, bound=bound)
    T = _weight_table(W, bound, bound)

    # commutativity: W(a,b) == W(b,a)
    diff = np.abs(T - T.T)
    bad = np.argwhere(diff > _TOL)
    if bad.size:
        a, b = map(int, bad[0])
        check = AxiomCheck("commutativity", False, (a, b), complex(T[a, b]), complex(T[b, a]))
    else:
        check = AxiomCheck("commutativity", True)
    report.checks["commutativity"] = check

    # stability: W(a,b) W(c,d) == W(ac, bd) whenever gcd(ab, cd) = 1,
    # over all quadruples with ac <= bound and bd <= bound
    A, C = _product_pairs(bound)
    B, D = A, C
    AC = A * C
    BD = B * D
    lhs = T[A[:, None], B[None, :]] * T[C[:, None], D[None, :]]
    rhs = T[AC[:, None], BD[None, :]]
    coprime = np.gcd(np.multiply.outer(A, B), np.multiply.outer(C, D)) == 1
    mism = np.argwhere(coprime & (np.abs(lhs - rhs) > _TOL))
    if mism.size:
        i, j = map(int, mism[0])
        witness = (int(A[i]), int(B[j]), int(C[i]), int(D[j]))
        check = AxiomCheck("stability", False, witness, complex(lhs[i, j]), complex(rhs[i, j]))
    else:
        check = AxiomCheck("stability", True)
    report.checks["stability"] = check

    # neutral element: W(1, p^v) == 1 on prime powers <= bound
    check = AxiomCheck("neutral-element", True)
    for p, v, q in arith.prime_powers(bound):
        w = complex(T[1, q])
        if abs(w - 1) > _TOL:
            check = AxiomCheck("neutral-element", False, (1, q), w, 1 + 0j)
            break
    report.checks["neutral-element"] = check

    # associativity cocycle: W(a,b) W(ab,c) == W(b,c) W(bc,a),
    # over all triples with ab <= bound and bc <= bound
    Apair, Bpair = _product_pairs(bound)  # (a, b) with a*b <= bound
    counts = bound // Bpair
    A3 = np.repeat(Apair, counts)
    B3 = np.repeat(Bpair, counts)
    C3 = np.concatenate([np.arange(1, c + 1, dtype=np.int64) for c in counts])
    lhs3 = T[A3, B3] * T[A3 * B3, C3]
    rhs3 = T[B3, C3] * T[B3 * C3, A3]
    mism3 = np.flatnonzero(np.abs(lhs3 - rhs3) > _TOL)
    if mism3.size:
        i = int(mism3[0])
        witness = (int(A3[i]), int(B3[i]), int(C3[i]))
        check = AxiomCheck(
            "associativity-cocycle", False, witness, complex(lhs3[i]), complex(rhs3[i])
        )
    else:
        check = AxiomCheck("associativity-cocycle", True)
    report.checks["associativity-cocycle"] = check

    # distributivity, on the witness family that characterizes it:
    # indicators at the splits l + f = v of each prime power p^v <= bound,
    # comparing ([A conv_W B] times C)(p^v) with ([A times C] conv_W [B times C])(p^v)
    check = AxiomCheck("distributivity", True)
    done = False
    for p, v, q in arith.prime_powers(bound):
        for l in range(0, v + 1):
            f = v - l
            ind_l = indicator_of_integer(p**l)
            ind_f = indicator_of_integer(p**f)
            ind_q = indicator_of_integer(q)
            left = w_convolve(ind_l, ind_f, W)(q) * ind_q(q)
            right = w_convolve(
                pointwise_product(ind_l, ind_q), pointwise_product(ind_f, ind_q), W
            )(q)
            if abs(left - right) > _TOL:
                check = AxiomCheck("distributivity", False, (p, l, f), left, right)
                done = True
                break
        if done:
            break
    report.checks["distributivity"] = check

    return report
