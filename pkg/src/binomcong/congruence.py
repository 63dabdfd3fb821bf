"""Euler's theorem, its k-factor generalization, and direct congruence solvers.

Each identity used below is re-checked at runtime before a result is
returned; a failed check raises :class:`InvariantViolation`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .arith import check_natural, checked_mul, is_prime, mod_inv
from .errors import DomainError, InvariantViolation, NotCoprime, UnsupportedModulus
from .totient import phi_factored

BINOMIAL_SCAN_LIMIT = 10**6
RSA_PRIME_LIMIT = 1 << 31

PATH_EULER = "direct-euler-power"
PATH_LIFT = "reduce-and-lift"
PATH_INVERSION = "exponent-inversion"
PATH_SCAN = "exhaustive-scan"
PATH_LINEAR = "linear"


def _ensure(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)


@dataclass(frozen=True)
class CoprimeFactorization:
    """``n = a_1 * a_2 * ... * a_k`` with ``k >= 2`` pairwise coprime factors, each ``>= 2``."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if len(factors) < 2:
            raise DomainError("need at least two factors")
        n = 1
        for i, a in enumerate(factors):
            check_natural(a, "factor")
            if a < 2:
                raise DomainError(f"factors must be >= 2, got {a}")
            for b in factors[:i]:
                if gcd(a, b) != 1:
                    raise NotCoprime(f"factors {b} and {a} share the divisor {gcd(a, b)}")
            n = checked_mul(n, a)

    @property
    def n(self) -> int:
        return math.prod(self.factors)

    @property
    def k(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class ResidueSolutionSet:
    modulus: int
    residues: tuple[int, ...]
    path: str = ""

    def __post_init__(self):
        residues = tuple(self.residues)
        object.__setattr__(self, "residues", residues)
        for prev, cur in zip(residues, residues[1:]):
            if cur <= prev:
                raise InvariantViolation("residues must be strictly increasing")
        if residues and not (0 <= residues[0] and residues[-1] < self.modulus):
            raise InvariantViolation(f"residues must lie in [0, {self.modulus})")

    def __iter__(self):
        return iter(self.residues)

    def __len__(self) -> int:
        return len(self.residues)

    def __contains__(self, x: int) -> bool:
        return x in self.residues


@dataclass(frozen=True)
class BezoutCongruencePair:
    x: int
    y: int
    a: int
    b: int


def euler_power(a: int, n: int) -> int:
    """``a**phi(n) mod n``: 1 for ``n >= 2``, 0 for ``n == 1``."""
    check_natural(a, "a")
    check_natural(n, "n")
    if n == 0:
        raise DomainError("n must be ≥ 1")
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) = {gcd(a, n)}")
    value = pow(a, phi_factored(n), n)
    _ensure(value == 1 % n, f"{a}^phi({n}) mod {n} = {value}")
    return value


def fermat_check(a: int, p: int) -> bool:
    check_natural(a, "a")
    check_natural(p, "p")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")
    return pow(a, p - 1, p) == 1


def silva_sum(f: CoprimeFactorization | Sequence[int]) -> int:
    """``sum a_i**phi(n / a_i) mod n``, checked to equal ``(k - 1) mod n``."""
    if not isinstance(f, CoprimeFactorization):
        f = CoprimeFactorization(tuple(f))
    n = f.n
    total = 0
    for a in f.factors:
        total = (total + pow(a, phi_factored(n // a), n)) % n
    _ensure(total == (f.k - 1) % n, f"power sum {total} != k - 1 = {f.k - 1} (mod {n})")
    return total


def bezout_silva(a: int, b: int) -> BezoutCongruencePair:
    """``x = a**(phi(b) - 1)``, ``y = b**(phi(a) - 1)`` modulo ``ab``.

    They satisfy ``a*x + b*y ≡ 1 (mod ab)`` with no Euclidean division.
    """
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 2 or b < 2:
        raise DomainError("a and b must both be >= 2")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    n = checked_mul(a, b)
    x = pow(a, phi_factored(b) - 1, n)
    y = pow(b, phi_factored(a) - 1, n)
    _ensure((a * x + b * y) % n == 1 % n, f"{a}*{x} + {b}*{y} != 1 (mod {n})")
    return BezoutCongruencePair(x, y, a, b)


def _direct_linear(a: int, b: int, n: int) -> int:
    # gcd(a, n) == 1, so a**(phi(n)-1) is the inverse of a
    return b * pow(a, phi_factored(n) - 1, n) % n


def solve_linear(a: int, b: int, n: int) -> ResidueSolutionSet:
    """All ``x`` in ``[0, n)`` with ``a*x ≡ b (mod n)``."""
    check_natural(a, "a")
    check_natural(b, "b")
    check_natural(n, "n")
    if n == 0:
        raise DomainError("n must be ≥ 1")
    g = gcd(a, n)
    if g == 1:
        x = _direct_linear(a, b, n)
        _ensure((a * x - b) % n == 0, f"{a}*{x} !≡ {b} (mod {n})")
        return ResidueSolutionSet(n, (x,), PATH_EULER)
    if b % g:
        return ResidueSolutionSet(n, (), PATH_LIFT)
    step = n // g
    x0 = _direct_linear(a // g, b // g, step)
    residues = tuple(x0 + i * step for i in range(g))
    _ensure((a * x0 - b) % n == 0, f"{a}*{x0} !≡ {b} (mod {n})")
    return ResidueSolutionSet(n, residues, PATH_LIFT)


def solve_crt(pairs: Iterable[tuple[int, int]]) -> int:
    """Unique ``x mod N`` meeting every ``x ≡ r_i (mod m_i)``, ``N = prod m_i``.

    Uses ``x = sum r_i * (N/m_i)**phi(m_i) mod N``: the i-th power is 1 modulo
    ``m_i`` by Euler's theorem and 0 modulo every other modulus.
    """
    pairs = [tuple(p) for p in pairs]
    if len(pairs) < 2:
        raise DomainError("need at least two congruences")
    for r, m in pairs:
        check_natural(r, "residue")
        check_natural(m, "modulus")
        if m < 2:
            raise DomainError(f"moduli must be >= 2, got {m}")
        if r >= m:
            raise DomainError(f"residue {r} is not reduced modulo {m}")
    moduli = CoprimeFactorization(tuple(m for _, m in pairs))
    big_n = moduli.n
    x = 0
    for r, m in pairs:
        x = (x + r * pow(big_n // m, phi_factored(m), big_n)) % big_n
    for r, m in pairs:
        _ensure(x % m == r, f"{x} !≡ {r} (mod {m})")
    return x


@lru_cache(maxsize=4096)
def _preimages(a: int, n_exp: int, modulus: int) -> dict[int, tuple[int, ...]]:
    buckets: dict[int, list[int]] = {}
    for x in range(modulus):
        buckets.setdefault(a * pow(x, n_exp, modulus) % modulus, []).append(x)
    return {v: tuple(xs) for v, xs in buckets.items()}


def solve_binomial(a: int, n_exp: int, b: int, modulus: int) -> ResidueSolutionSet:
    """All ``x`` in ``[0, N)`` with ``a * x**n_exp ≡ b (mod N)``.

    When ``N`` is prime, ``a`` is a unit and ``n_exp`` is coprime to ``N - 1``,
    the map ``x -> x**n_exp`` is a bijection undone by the exponent
    ``n_exp**-1 mod (N - 1)``. Exponent 1 is handed to :func:`solve_linear`;
    everything else is scanned.
    """
    check_natural(a, "a")
    check_natural(n_exp, "n_exp")
    check_natural(b, "b")
    check_natural(modulus, "N")
    if modulus < 2:
        raise DomainError("N must be >= 2")
    if modulus > BINOMIAL_SCAN_LIMIT:
        raise UnsupportedModulus(f"N = {modulus} exceeds {BINOMIAL_SCAN_LIMIT}")
    if n_exp < 1:
        raise DomainError("n_exp must be >= 1")
    if n_exp == 1:
        linear = solve_linear(a % modulus, b % modulus, modulus)
        return ResidueSolutionSet(modulus, linear.residues, PATH_LINEAR)
    if gcd(a, modulus) == 1 and is_prime(modulus) and gcd(n_exp, modulus - 1) == 1:
        # d must stay positive so that x = 0 survives; only N = 2 gives d = 0
        d = mod_inv(n_exp, modulus - 1) or modulus - 1
        x = pow(b * mod_inv(a, modulus) % modulus, d, modulus)
        _ensure((a * pow(x, n_exp, modulus) - b) % modulus == 0, f"{x} is not a root")
        return ResidueSolutionSet(modulus, (x,), PATH_INVERSION)
    roots = _preimages(a % modulus, n_exp, modulus).get(b % modulus, ())
    return ResidueSolutionSet(modulus, roots, PATH_SCAN)


def rsa_roundtrip(p: int, q: int, e: int, message: int) -> int:
    """Encrypt ``message`` with ``(pq, e)`` and decrypt with ``d = e**-1 mod phi(pq)``.

    Toy demonstration only: no padding, tiny keys.
    """
    for value, name in ((p, "p"), (q, "q"), (e, "e"), (message, "message")):
        check_natural(value, name)
    if p == q:
        raise DomainError("p and q must be distinct")
    for prime, name in ((p, "p"), (q, "q")):
        if prime > RSA_PRIME_LIMIT or not is_prime(prime):
            raise DomainError(f"{name} = {prime} must be a prime ≤ 2^31")
    n = p * q
    phi = (p - 1) * (q - 1)
    if e == 0 or gcd(e, phi) != 1:
        raise DomainError(f"e = {e} is not invertible modulo phi = {phi}")
    if message >= n:
        raise DomainError(f"message must be < {n}")
    d = mod_inv(e, phi)
    recovered = pow(pow(message, e, n), d, n)
    if gcd(message, n) == 1:
        _ensure(recovered == message, f"roundtrip of {message} gave {recovered}")
    return recovered

