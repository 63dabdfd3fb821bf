"""Exact 64-bit integer kernel.

Values are plain Python ints, checked at every public entry point to lie in
``[0, 2**64)``. Intermediates are exact, so products of two words never wrap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import ArithmeticOverflow, DomainError, NotInvertible

WORD_BITS = 64
WORD_LIMIT = 1 << WORD_BITS
TRIAL_DIVISION_BOUND = 10**6

# Deterministic for every n < 2**64 (Jim Sinclair's set).
MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def check_natural(value: int, name: str = "value") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    if value >= WORD_LIMIT:
        raise ArithmeticOverflow(f"{name} = {value} does not fit in 64 bits")
    return value


def checked_mul(a: int, b: int) -> int:
    """Product of two naturals, raising instead of leaving the word range."""
    p = a * b
    if p >= WORD_LIMIT:
        raise ArithmeticOverflow(f"{a} * {b} overflows 64 bits")
    return p


class BezoutTriple(NamedTuple):
    g: int
    x: int
    y: int


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; ``gcd(0, 0) == 0``."""
    check_natural(a, "a")
    check_natural(b, "b")
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> BezoutTriple:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``.

    The coefficients are the ones produced by the classical Euclidean
    recurrence, so ``|x| <= b`` and ``|y| <= a`` whenever both are positive.
    """
    check_natural(a, "a")
    check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return BezoutTriple(old_r, old_x, old_y)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` with ``0**0 == 1``."""
    check_natural(base, "base")
    check_natural(exp, "exp")
    check_natural(modulus, "modulus")
    if modulus == 0:
        raise DomainError("modulus must be >= 1")
    return pow(base, exp, modulus)


def mod_inv(a: int, n: int) -> int:
    check_natural(a, "a")
    check_natural(n, "n")
    if n == 0:
        raise DomainError("modulus must be >= 1")
    if n == 1:
        return 0
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible modulo {n} (gcd {g})")
    return x % n


@lru_cache(maxsize=None)
def small_primes(bound: int = TRIAL_DIVISION_BOUND) -> tuple[int, ...]:
    """All primes ``<= bound``, by the sieve of Eratosthenes."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact below ``2**64``."""
    check_natural(n, "n")
    return _is_prime(n)


def _brent(n: int) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard rho, Brent's cycle finding)."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched product hit zero; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split(n: int, out: dict[int, int]) -> None:
    if _is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


@dataclass(frozen=True)
class Factorization:
    """``n`` as a product of prime powers, primes strictly increasing."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@lru_cache(maxsize=1 << 16)
def _factorize(n: int) -> Factorization:
    found: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        if n <= TRIAL_DIVISION_BOUND**2:
            # no prime <= sqrt(n) divides the cofactor
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, found)
    return Factorization(tuple(sorted(found.items())))


def factorize(n: int) -> Factorization:
    """Prime factorization of ``1 <= n < 2**64``; ``factorize(1)`` is empty."""
    check_natural(n, "n")
    if n == 0:
        raise DomainError("cannot factorize 0")
    return _factorize(n)
