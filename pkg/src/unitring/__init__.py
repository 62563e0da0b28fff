"""Multiplicative arithmetic functions under unitary convolution.

The ring: multiplicative functions F (F(1) = 1, F determined by its values on
prime powers) with pointwise product as one operation and unitary convolution
[F box G](n) = sum over coprime splittings ab = n, gcd(a, b) = 1 as the other.
On prime powers the box product is simply F(p^v) + G(p^v), which is what makes
everything here fast.

On top of the ring sits a Dirichlet-series engine that checks factorization
identities numerically (|zeta|^2 and |L(s, chi)|^2 as products of two real
series, Euler-product forms, omega rearrangements) and a character-group
builder for the finite sums over Dirichlet characters.
"""

from . import arith, catalog, characters, funcspec, kernels, mfunc, series, weights
from .arith import coprime_decompose, divisors, factorize, is_prime, omega, radical
from .catalog import (
    c_omega,
    cosa,
    cosa_at,
    delta_one,
    euler_phi,
    id_power,
    inv_radical,
    minus_one_omega,
    one,
    power_iy,
    reconstruct_power,
    restrict_to_primes,
    sigma_hat,
    sina,
    sina_at,
    two_omega,
)
from .characters import (
    DirichletCharacter,
    box_over_characters,
    box_over_characters_closed_form,
    character_group,
    char_to_multiplicative,
    product_over_characters,
)
from .mfunc import (
    ArithmeticFunction,
    MultiplicativeFunction,
    evaluate,
    indicator,
    indicator_of_integer,
    pointwise_product,
    random_multiplicative,
    twist_by_power,
    unitary_convolve,
    unitary_inverse,
    w_convolve,
)
from .series import (
    ConvergenceError,
    IdentityReport,
    SeriesPoint,
    SummationConfig,
    box_characters_check,
    conj_identity_check,
    dirichlet_series,
    euler_complement_check,
    euler_product_L,
    hardy_identity_check,
    lseries_modsq_direct,
    lseries_modsq_factored,
    modsq_euler_product,
    omega_reciprocal_check,
    omega_series_check,
    product_identity_check,
    q_forms,
    q_function,
    zeta_cosine_check,
    zeta_modsq_cosine,
)
from .weights import (
    AxiomReport,
    WeightFunction,
    check_ring_axioms,
    coprime_weight,
    load_weight_table,
    ones_weight,
    scaled_coprime_weight,
    table_weight,
)

__version__ = "0.1.0"

__all__ = [
    "arith", "catalog", "characters", "funcspec", "kernels", "mfunc", "series",
    "weights",
    "ArithmeticFunction", "MultiplicativeFunction", "evaluate",
    "unitary_convolve", "unitary_inverse", "pointwise_product", "w_convolve",
    "twist_by_power", "indicator", "indicator_of_integer", "random_multiplicative",
    "one", "delta_one", "id_power", "c_omega", "two_omega", "minus_one_omega",
    "inv_radical", "cosa", "sina", "power_iy", "sigma_hat", "euler_phi",
    "restrict_to_primes", "reconstruct_power", "cosa_at", "sina_at",
    "factorize", "omega", "radical", "divisors", "coprime_decompose", "is_prime",
    "DirichletCharacter", "character_group", "char_to_multiplicative",
    "box_over_characters", "box_over_characters_closed_form", "product_over_characters",
    "WeightFunction", "coprime_weight", "ones_weight", "scaled_coprime_weight",
    "table_weight", "load_weight_table", "check_ring_axioms", "AxiomReport",
    "ConvergenceError", "SeriesPoint", "SummationConfig", "IdentityReport",
    "dirichlet_series", "euler_product_L", "lseries_modsq_direct",
    "lseries_modsq_factored", "modsq_euler_product", "zeta_modsq_cosine",
    "q_function", "q_forms", "hardy_identity_check", "zeta_cosine_check",
    "product_identity_check", "conj_identity_check", "euler_complement_check",
    "omega_series_check", "omega_reciprocal_check", "box_characters_check",
    "__version__",
]
