"""Inclusion-exclusion counting, Euler's totient, and direct resolution of congruences."""

__version__ = "0.1.0"

from .arith import BezoutTriple, Factorization, ext_gcd, factorize, gcd, is_prime, mod_inv, mod_pow
from .congruence import (
    BezoutCongruencePair,
    CoprimeFactorization,
    ResidueSolutionSet,
    bezout_silva,
    euler_power,
    fermat_check,
    rsa_roundtrip,
    silva_sum,
    solve_binomial,
    solve_crt,
    solve_linear,
)
from .errors import (
    ArithmeticOverflow,
    DomainError,
    ExpansionTooLarge,
    InvariantViolation,
    NotCoprime,
    NotInvertible,
    UniverseTooLarge,
    UnsupportedModulus,
)
from .pie import (
    DivisibleBy,
    ExplicitSet,
    Indicator,
    PropertyFamily,
    SignedExpansion,
    Term,
    count_none,
    count_union,
    expand,
    indicator_product_check,
)
from .totient import phi_bruteforce, phi_factored, phi_via_pie
