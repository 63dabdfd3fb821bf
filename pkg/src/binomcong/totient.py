"""Euler's totient, computed three independent ways.

``phi(n)`` counts ``k`` in ``1..n`` with ``gcd(k, n) == 1``. Counting over
``1..n`` instead of ``1..n-1`` changes nothing for ``n > 1`` (``gcd(n, n) = n``)
and fixes ``phi(1) = 1``.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .arith import check_natural, factorize
from .errors import DomainError
from .pie import DivisibleBy, PropertyFamily, count_none

PIE_LIMIT = 1 << 32
BRUTEFORCE_LIMIT = 10**7


def _require_positive(n: int) -> None:
    check_natural(n, "n")
    if n == 0:
        raise DomainError("n must be ≥ 1")


@lru_cache(maxsize=1 << 16)
def _phi(n: int) -> int:
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def phi_factored(n: int) -> int:
    """Product formula ``prod p**(e-1) * (p-1)`` over the factorization of ``n``."""
    _require_positive(n)
    return _phi(n)


def totient_family(n: int) -> PropertyFamily:
    """Universe ``1..n`` with one divisibility property per prime divisor of ``n``."""
    _require_positive(n)
    return PropertyFamily(n, tuple(DivisibleBy(p) for p in factorize(n).primes))


def phi_via_pie(n: int) -> int:
    _require_positive(n)
    if n > PIE_LIMIT:
        raise DomainError(f"n must be ≤ 2^32 for the inclusion-exclusion route, got {n}")
    return count_none(totient_family(n))


def phi_bruteforce(n: int) -> int:
    """Exhaustive count over ``1..n``.

    Every divisor ``d > 1`` of ``n`` is found by trial and its multiples are
    struck out; whatever survives shares no divisor with ``n``. No primality
    test or factorization is involved.
    """
    _require_positive(n)
    if n > BRUTEFORCE_LIMIT:
        raise DomainError(f"n must be ≤ {BRUTEFORCE_LIMIT} for the brute-force route, got {n}")
    divisors = []
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            divisors.append(d)
            if d * d != n:
                divisors.append(n // d)
    if n > 1:
        divisors.append(n)
    divisors.sort()
    struck = bytearray(n + 1)
    for d in divisors:
        # a struck divisor's multiples are already struck
        if not struck[d]:
            struck[d::d] = b"\x01" * (n // d)
    return n - struck.count(1)
