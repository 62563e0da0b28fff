"""Dirichlet-series evaluation and the identity checks.

Partial sums are plain truncations: when an identity multiplies two series,
both factors share the same cutoff N, and the truncation error is surfaced as
a crude tail bound C/((x-1) N^(x-1)) in the report. Convergence is gated at
Re(s) > 1; the exploratory flag lowers the gate to Re(s) > 1/2 (Cesaro
averaging advised there) and marks every report not-applicable instead of
pass/fail. Complex powers n^{-s} are exp(-s ln n) with the real logarithm.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import arith, kernels
from .catalog import restrict_to_primes, two_omega
from .characters import (
    DirichletCharacter,
    box_over_characters,
    box_over_characters_closed_form,
    character_group,
    char_to_multiplicative,
)
from .mfunc import (
    MultiplicativeFunction,
    pointwise_product,
    twist_by_power,
    unitary_convolve,
)


class ConvergenceError(ValueError):
    """A series was requested outside its convergence gate."""


@dataclass(frozen=True)
class SeriesPoint:
    """s = x + iy."""

    x: float
    y: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("series point must be finite")

    @property
    def s(self) -> complex:
        return complex(self.x, self.y)

    @property
    def conjugate(self) -> "SeriesPoint":
        return SeriesPoint(self.x, -self.y)


def as_point(s) -> SeriesPoint:
    if isinstance(s, SeriesPoint):
        return s
    z = complex(s)
    return SeriesPoint(z.real, z.imag)


@dataclass(frozen=True)
class SummationConfig:
    term_count: int = 100_000
    prime_limit: int = 10_000
    mode: str = "direct"  # "direct" | "cesaro"
    exploratory: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.term_count < 1:
            raise ValueError("term_count must be >= 1")
        if self.prime_limit < 2:
            raise ValueError("prime_limit must be >= 2")
        if self.mode not in ("direct", "cesaro"):
            raise ValueError(f"unknown summation mode {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


DEFAULT_CONFIG = SummationConfig()


@dataclass
class IdentityReport:
    identity: str
    params: dict
    lhs: complex
    rhs: complex
    tol: float
    tail_bound: float
    applicable: bool = True
    seed: int | None = None
    workers: int = 1

    @property
    def abs_error(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_error(self) -> float:
        denom = abs(self.rhs)
        return self.abs_error / denom if denom > 0 else math.inf

    @property
    def passed(self) -> bool | None:
        """True/False, or None when the point was exploratory-only."""
        if not self.applicable:
            return None
        err = self.rel_error if abs(self.rhs) > 1 else self.abs_error
        return bool(err <= self.tol)

    @property
    def status(self) -> str:
        p = self.passed
        if p is None:
            return "not-applicable"
        return "pass" if p else "fail"

    def to_dict(self) -> dict:
        p = self.passed
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "abs_error": self.abs_error,
            "rel_error": None if math.isinf(self.rel_error) else self.rel_error,
            "tol": self.tol,
            "pass": "not-applicable" if p is None else p,
            "tail_bound": None if math.isinf(self.tail_bound) else self.tail_bound,
            "seed": self.seed,
            "workers": self.workers,
        }

    def summary(self) -> str:
        shown = {k: v for k, v in self.params.items() if v is not None}
        return (
            f"[{self.status.upper():^14}] {self.identity} {shown} "
            f"abs_error={self.abs_error:.3e} tol={self.tol:.3e}"
        )


def _gate(point: SeriesPoint, cfg: SummationConfig, what: str) -> bool:
    """True inside the convergence region, False when exploratory-only."""
    if point.x > 1:
        return True
    if cfg.exploratory and point.x > 0.5:
        return False
    hint = (
        "exploratory mode reaches only Re(s) > 1/2"
        if cfg.exploratory
        else "set exploratory=True (Cesaro mode advised) to compute anyway"
    )
    raise ConvergenceError(f"{what}: Re(s) = {point.x} <= 1; {hint}")


def _tail_bound(point: SeriesPoint, cfg: SummationConfig, lhs: complex, rhs: complex) -> float:
    x = point.x
    if x <= 1:
        return math.inf
    c = 1.0 + abs(lhs) + abs(rhs)
    return c / ((x - 1) * cfg.term_count ** (x - 1))


def _resolve_tol(tol: float | None, tail: float) -> float:
    if tol is not None:
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        return float(tol)
    return max(1e-9, tail) if math.isfinite(tail) else 1e-9


def _pow_values(ns: np.ndarray, e: complex) -> np.ndarray:
    """ns^e elementwise via exp(e ln ns); ns must be positive."""
    ln = np.log(ns.astype(np.float64))
    if isinstance(e, complex) and e.imag != 0:
        return np.exp(e * ln)
    return np.exp(float(np.real(e)) * ln)


def _inv_powers(n: int, s: complex) -> np.ndarray:
    """[0, 1^{-s}, 2^{-s}, ..., n^{-s}]."""
    ln = np.zeros(n + 1, dtype=np.float64)
    ln[1:] = np.log(np.arange(1, n + 1, dtype=np.float64))
    s = complex(s)
    out = np.exp(-s * ln) if s.imag != 0 else np.exp(-s.real * ln)
    out[0] = 0
    return out


def _sum_terms(terms: np.ndarray, cfg: SummationConfig) -> complex:
    """Reduce terms[1..N]: direct sum or Cesaro mean of partial sums.

    The Cesaro mean (1/N) sum_M S_M equals the weighted sum with weights
    (N - n + 1)/N. Worker partitioning is contiguous and reduced in ascending
    order, so results are reproducible for a fixed worker count.
    """
    n = terms.shape[0] - 1
    if cfg.mode == "cesaro":
        w = (n + 1 - np.arange(n + 1, dtype=np.float64)) / n
        w[0] = 0.0
        terms = terms * w
    body = terms[1:]
    if cfg.workers == 1 or n < 4 * cfg.workers:
        return complex(body.sum())
    chunks = np.array_split(body, cfg.workers)
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        partials = list(pool.map(lambda c: c.sum(), chunks))
    total = 0j
    for part in partials:
        total += complex(part)
    return total


def _values_of(F, n: int) -> np.ndarray:
    if hasattr(F, "values"):
        return F.values(n)
    out = np.zeros(n + 1, dtype=np.complex128)
    for m in range(1, n + 1):
        out[m] = F(m)
    return out


def _omega_table(n: int) -> np.ndarray:
    component, cofactor = arith.split_tables(n)
    ppval = np.zeros(n + 1, dtype=np.complex128)
    for _, _, q in arith.prime_powers(n):
        ppval[q] = 1.0
    return kernels.additive_values(ppval, component, cofactor).real


# --- series evaluation ---------------------------------------------------


def dirichlet_series(F, s, cfg: SummationConfig = DEFAULT_CONFIG) -> complex:
    """Partial sum of D(F, s) = sum F(n)/n^s over n <= cfg.term_count."""
    point = as_point(s)
    _gate(point, cfg, f"D({getattr(F, 'label', '?')}, s)")
    n = cfg.term_count
    return _sum_terms(_values_of(F, n) * _inv_powers(n, point.s), cfg)


def zeta_partial_sum(s, cfg: SummationConfig = DEFAULT_CONFIG) -> complex:
    """Partial sum of zeta: sum_{n <= N} n^{-s} (no convergence gate)."""
    point = as_point(s)
    return _sum_terms(_inv_powers(cfg.term_count, point.s), cfg)


def prime_zeta_partial_sum(s, cfg: SummationConfig = DEFAULT_CONFIG) -> complex:
    """sum over primes p <= prime_limit of p^{-s}."""
    point = as_point(s)
    primes = arith.prime_array(cfg.prime_limit)
    if primes.size == 0:
        return 0j
    return complex(np.sum(_pow_values(primes, -point.s)))


def euler_product_L(chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG) -> complex:
    """prod over primes p <= prime_limit of (1 - chi(p) p^{-s})^{-1}."""
    point = as_point(s)
    _gate(point, cfg, "euler_product_L")
    primes = arith.prime_array(cfg.prime_limit)
    if primes.size == 0:
        return 1 + 0j
    chi_p = np.array([chi(int(p)) for p in primes], dtype=np.complex128)
    return complex(np.prod(1.0 / (1.0 - chi_p * _pow_values(primes, -point.s))))


def lseries_modsq_direct(
    chi: DirichletCharacter,
    s,
    cfg: SummationConfig = DEFAULT_CONFIG,
    method: str = "modulus",
) -> float:
    """|sum_{n <= N} chi(n)/n^s|^2.

    method "modulus" squares the partial sum; "double" accumulates the full
    N x N double sum; "coprime" re-indexes the double sum over coprime pairs
    (m, k) and common factors p <= min(N/m, N/k). All three agree to rounding
    at every finite N; the last two are quadratic and guarded to small N.
    """
    point = as_point(s)
    _gate(point, cfg, "lseries_modsq_direct")
    n = cfg.term_count
    if method == "modulus":
        z = dirichlet_series(char_to_multiplicative(chi), point, cfg)
        return float(z.real * z.real + z.imag * z.imag)
    if cfg.mode != "direct":
        raise ValueError(f"method {method!r} is defined for direct summation only")
    terms = _values_of(char_to_multiplicative(chi), n) * _inv_powers(n, point.s)
    if method == "double":
        if n > 4000:
            raise ValueError("double method is O(N^2); keep N <= 4000")
        body = terms[1:]
        return float(np.sum(np.multiply.outer(body, np.conj(body))).real)
    if method == "coprime":
        if n > 600:
            raise ValueError("coprime method is O(N^2 log N); keep N <= 600")
        total = 0j
        for m in range(1, n + 1):
            seg_m = terms[m::m]
            for k in range(1, n + 1):
                if math.gcd(m, k) != 1:
                    continue
                pmax = min(n // m, n // k)
                # seg_m[j] is the term at (j + 1) * m, so p = 1..pmax is [:pmax]
                total += np.sum(seg_m[:pmax] * np.conj(terms[k::k][:pmax]))
        return float(total.real)
    raise ValueError(f"unknown method {method!r}")


# --- the factored |L|^2 forms --------------------------------------------


def q_forms(chi: DirichletCharacter, y: float, p: int, v: int) -> tuple[float, float, complex]:
    """The three equivalent prime-power forms of Q: dot product,
    real 2x2 determinant, and the i-determinant (real up to rounding)."""
    t = y * v * math.log(p)
    c, s_ = math.cos(t), math.sin(t)
    z = chi(pow(p, v, chi.modulus))
    re, im = z.real, z.imag
    dot = 2.0 * (c * re + s_ * im)
    det_real = 2.0 * (c * re - (-im) * s_)
    det_i = 2.0 * (c * re - (1j * im) * (1j * s_))
    return dot, det_real, det_i


def q_function(chi: DirichletCharacter, y: float) -> MultiplicativeFunction:
    """The second-factor coefficient function of the |L|^2 factorization:
    rule (p, v) -> 2 [cos(y ln p^v) Re chi(p^v) + sin(y ln p^v) Im chi(p^v)].

    Every evaluation cross-checks the determinant forms at 1e-12."""

    def rule(p: int, v: int) -> float:
        dot, det_real, det_i = q_forms(chi, y, p, v)
        if abs(dot - det_real) > 1e-12 or abs(dot - det_i) > 1e-12:
            raise ArithmeticError(f"Q forms disagree at (p={p}, v={v})")
        return dot

    return MultiplicativeFunction(f"q[chi:{chi.modulus}:{chi.index}]@{y:g}", rule)


def _char_modsq_factor(chi: DirichletCharacter, point: SeriesPoint, cfg: SummationConfig) -> float:
    """First factor: sum over all integers r <= N of |chi(r)|^2 / r^{2x}."""
    n = cfg.term_count
    vals = _values_of(char_to_multiplicative(chi), n)
    modsq = vals.real**2 + vals.imag**2
    return _sum_terms(modsq * _inv_powers(n, complex(2 * point.x)), cfg).real


def lseries_modsq_factored(
    chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG
) -> float:
    """(sum_r |chi(r)|^2 r^{-2x}) (sum_l Q(l) l^{-x}), both truncated at N."""
    point = as_point(s)
    _gate(point, cfg, "lseries_modsq_factored")
    n = cfg.term_count
    qv = q_function(chi, point.y).values(n).real
    second = _sum_terms(qv * _inv_powers(n, complex(point.x)), cfg).real
    return float(_char_modsq_factor(chi, point, cfg) * second)


def modsq_euler_product(
    chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG
) -> float:
    """First factor as above times prod_{q <= P} [1 + sum_m Q(q^m)/q^{mx}],
    the inner sum cut at the first m with q^{mx} > 1e15."""
    point = as_point(s)
    _gate(point, cfg, "modsq_euler_product")
    Q = q_function(chi, point.y)
    x = point.x
    prod = 1.0
    for p in arith.prime_array(cfg.prime_limit):
        p = int(p)
        inner = 0.0
        m = 1
        while True:
            denom = float(p) ** (m * x)
            inner += Q.on_prime_power(p, m).real / denom
            if denom > 1e15:
                break
            m += 1
        prod *= 1.0 + inner
    return float(_char_modsq_factor(chi, point, cfg) * prod)


def zeta_modsq_cosine(s, cfg: SummationConfig = DEFAULT_CONFIG) -> float:
    """zeta_N(2x) sum_{m <= N} 2^omega(m) m^{-x} prod_{p | m} cos(y ln p^{v_p(m)}).

    The cosine weight is exactly Q for the modulus-1 character."""
    point = as_point(s)
    _gate(point, cfg, "zeta_modsq_cosine")
    n = cfg.term_count
    first = _sum_terms(_inv_powers(n, complex(2 * point.x)), cfg).real
    qv = q_function(character_group(1)[0], point.y).values(n).real
    second = _sum_terms(qv * _inv_powers(n, complex(point.x)), cfg).real
    return float(first * second)


# --- identity checks ------------------------------------------------------


def _report(
    identity: str,
    params: dict,
    lhs: complex,
    rhs: complex,
    point: SeriesPoint,
    cfg: SummationConfig,
    tol: float | None,
    applicable: bool,
    seed: int | None = None,
) -> IdentityReport:
    tail = _tail_bound(point, cfg, lhs, rhs)
    return IdentityReport(
        identity=identity,
        params=params,
        lhs=complex(lhs),
        rhs=complex(rhs),
        tol=_resolve_tol(tol, tail),
        tail_bound=tail,
        applicable=applicable,
        seed=seed,
        workers=cfg.workers,
    )


def _series_params(point: SeriesPoint, cfg: SummationConfig, **extra) -> dict:
    params = {"x": point.x, "y": point.y, "N": cfg.term_count, "P": cfg.prime_limit,
              "mode": cfg.mode}
    params.update(extra)
    return params


def hardy_identity_check(
    x: float, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    """zeta_N(x)^2 against zeta_N(2x) sum_{m <= N} 2^omega(m)/m^x."""
    point = SeriesPoint(float(x))
    applicable = _gate(point, cfg, "hardy")
    n = cfg.term_count
    zx = _sum_terms(_inv_powers(n, complex(point.x)), cfg).real
    z2x = _sum_terms(_inv_powers(n, complex(2 * point.x)), cfg).real
    sq = _sum_terms(two_omega().values(n).real * _inv_powers(n, complex(point.x)), cfg).real
    return _report(
        "hardy", _series_params(point, cfg), zx * zx, z2x * sq, point, cfg, tol, applicable
    )


def zeta_cosine_check(
    s, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    """|zeta_N(s)|^2 against the cosine-product factorization."""
    point = as_point(s)
    applicable = _gate(point, cfg, "zeta-cosine")
    lhs = lseries_modsq_direct(character_group(1)[0], point, cfg)
    rhs = zeta_modsq_cosine(point, cfg)
    return _report(
        "zeta-cosine", _series_params(point, cfg), lhs, rhs, point, cfg, tol, applicable
    )


def _chi_params(chi: DirichletCharacter) -> str:
    return f"chi:{chi.modulus}:{chi.index}"


def modsq_factored_check(
    chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    point = as_point(s)
    applicable = _gate(point, cfg, "modsq-direct-vs-factored")
    lhs = lseries_modsq_direct(chi, point, cfg)
    rhs = lseries_modsq_factored(chi, point, cfg)
    params = _series_params(point, cfg, chi=_chi_params(chi))
    return _report("modsq-direct-vs-factored", params, lhs, rhs, point, cfg, tol, applicable)


def modsq_euler_check(
    chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    point = as_point(s)
    applicable = _gate(point, cfg, "modsq-direct-vs-euler")
    lhs = lseries_modsq_direct(chi, point, cfg)
    rhs = modsq_euler_product(chi, point, cfg)
    params = _series_params(point, cfg, chi=_chi_params(chi))
    return _report("modsq-direct-vs-euler", params, lhs, rhs, point, cfg, tol, applicable)


def modsq_factored_euler_check(
    chi: DirichletCharacter, s, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    point = as_point(s)
    applicable = _gate(point, cfg, "modsq-factored-vs-euler")
    lhs = lseries_modsq_factored(chi, point, cfg)
    rhs = modsq_euler_product(chi, point, cfg)
    params = _series_params(point, cfg, chi=_chi_params(chi))
    return _report("modsq-factored-vs-euler", params, lhs, rhs, point, cfg, tol, applicable)


def _require_completely_multiplicative(*fs) -> None:
    for f in fs:
        if not f.completely_multiplicative:
            raise ValueError(
                f"{f.label} is not flagged completely multiplicative; "
                "the identity's hypothesis fails"
            )


def product_identity_check(
    F: MultiplicativeFunction,
    G: MultiplicativeFunction,
    s,
    cfg: SummationConfig = DEFAULT_CONFIG,
    tol: float | None = None,
) -> IdentityReport:
    """D(F,s) D(G,s) against D(F times G, 2s) D(F box G, s)."""
    _require_completely_multiplicative(F, G)
    point = as_point(s)
    applicable = _gate(point, cfg, "product-identity")
    lhs = dirichlet_series(F, point, cfg) * dirichlet_series(G, point, cfg)
    double = SeriesPoint(2 * point.x, 2 * point.y)
    rhs = dirichlet_series(pointwise_product(F, G), double, cfg) * dirichlet_series(
        unitary_convolve(F, G), point, cfg
    )
    params = _series_params(point, cfg, f=F.label, g=G.label)
    return _report("product-identity", params, lhs, rhs, point, cfg, tol, applicable)


def conj_identity_check(
    F: MultiplicativeFunction,
    G: MultiplicativeFunction,
    s,
    cfg: SummationConfig = DEFAULT_CONFIG,
    tol: float | None = None,
) -> IdentityReport:
    """D(F,s) D(G, conj s) against
    D(F times G, 2x) D(F/n^{iy} box G/n^{-iy}, x); F = G gives |D(F,s)|^2."""
    _require_completely_multiplicative(F, G)
    point = as_point(s)
    applicable = _gate(point, cfg, "conj-identity")
    lhs = dirichlet_series(F, point, cfg) * dirichlet_series(G, point.conjugate, cfg)
    boxed = unitary_convolve(twist_by_power(F, -point.y), twist_by_power(G, point.y))
    rhs = dirichlet_series(pointwise_product(F, G), SeriesPoint(2 * point.x), cfg)
    rhs = rhs * dirichlet_series(boxed, SeriesPoint(point.x), cfg)
    params = _series_params(point, cfg, f=F.label, g=G.label)
    return _report("conj-identity", params, lhs, rhs, point, cfg, tol, applicable)


def euler_complement_check(
    F: MultiplicativeFunction,
    A: Iterable[int],
    s,
    cfg: SummationConfig = DEFAULT_CONFIG,
    tol: float | None = None,
) -> IdentityReport:
    """D(1_A times F, s) D(1_Abar times F, s) against D(F, s)."""
    _require_completely_multiplicative(F)
    point = as_point(s)
    applicable = _gate(point, cfg, "euler-complement")
    primes = frozenset(int(p) for p in A)
    for p in primes:
        if not arith.is_prime(p):
            raise ValueError(f"prime set contains {p}, which is not prime")
    inside = dirichlet_series(restrict_to_primes(F, primes), point, cfg)
    outside = dirichlet_series(restrict_to_primes(F, primes, complement=True), point, cfg)
    rhs = dirichlet_series(F, point, cfg)
    params = _series_params(point, cfg, f=F.label, primes=sorted(primes))
    return _report("euler-complement", params, inside * outside, rhs, point, cfg, tol, applicable)


def omega_series_check(
    s, cfg: SummationConfig = DEFAULT_CONFIG, tol: float | None = None
) -> IdentityReport:
    """(sum_{p <= P} p^{-s})(sum_{n <= N} n^{-s}) against sum_{n <= N} omega(n) n^{-s}."""
    point = as_point(s)
    applicable = _gate(point, cfg, "omega-product")
    n = cfg.term_count
    lhs = prime_zeta_partial_sum(point, cfg) * zeta_partial_sum(point, cfg)
    rhs = _sum_terms(_omega_table(n) * _inv_powers(n, point.s), cfg)
    return _report("omega-product", _series_params(point, cfg), lhs, rhs, point, cfg, tol, applicable)


def omega_reciprocal_check(
    s,
    cfg: SummationConfig = DEFAULT_CONFIG,
    tol: float | None = None,
    variant: str = "pair-sum",
) -> IdentityReport:
    """The reciprocal-weight rearrangements against zeta_N(s) - 1.

    variant "pair-sum": sum over primes p <= min(P, N) of
    sum_{m <= N, p | m} m^{-s}/omega(m); with P >= N every m in [2, N] is hit
    omega(m) times at weight 1/omega(m), an exact rearrangement of the rhs.
    variant "split": sum over n <= N and p <= P without the np <= N cap,
    splitting on p | n, which turns the inner sum into
    (P_P(s) - S1(n))/(omega(n)+1) + S1(n)/omega(n) with S1(n) = sum_{p|n} p^{-s}.
    Both are double-sum identities, summed directly (no averaging mode).
    """
    point = as_point(s)
    applicable = _gate(point, cfg, f"omega-reciprocal[{variant}]")
    n, plimit = cfg.term_count, cfg.prime_limit
    invpow = _inv_powers(n, point.s)
    om = _omega_table(n)
    primes = arith.prime_array(min(plimit, n))
    if variant == "pair-sum":
        total = 0j
        for p in primes:
            p = int(p)
            total += np.sum(invpow[p::p] / om[p::p])
        lhs = complex(total)
        name = "omega-reciprocal"
    elif variant == "split":
        s1 = np.zeros(n + 1, dtype=np.complex128)
        for p in primes:
            p = int(p)
            s1[p::p] += complex(_pow_values(np.array([p]), -point.s)[0])
        pterm = prime_zeta_partial_sum(point, cfg)
        ratio = np.divide(s1, om, out=np.zeros_like(s1), where=om > 0)
        terms = invpow * ((pterm - s1) / (om + 1.0) + ratio)
        lhs = complex(terms[1:].sum())
        name = "omega-reciprocal-split"
    else:
        raise ValueError(f"unknown variant {variant!r} (use 'pair-sum' or 'split')")
    rhs = complex(invpow[2:].sum())
    params = _series_params(point, cfg, variant=variant)
    return _report(name, params, lhs, rhs, point, cfg, tol, applicable)


def box_characters_check(k: int, amax: int, tol: float | None = None) -> IdentityReport:
    """box-over-characters against its closed form for every a in [2, amax];
    the report carries the worst a."""
    if amax < 2:
        raise ValueError("amax must be >= 2")
    worst = (-1.0, 2, 0j, 0j)
    for a in range(2, amax + 1):
        lhs = box_over_characters(k, a)
        rhs = box_over_characters_closed_form(k, a)
        d = abs(lhs - rhs)
        if d > worst[0]:
            worst = (d, a, lhs, rhs)
    _, a, lhs, rhs = worst
    report = IdentityReport(
        identity="box-characters",
        params={"k": k, "amax": amax, "worst_a": a, "max_abs_error": worst[0]},
        lhs=lhs,
        rhs=rhs,
        tol=_resolve_tol(tol, 0.0),
        tail_bound=0.0,
        applicable=True,
    )
    return report
