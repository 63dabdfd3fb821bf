import math
import random

import pytest
from hypothesis import assume, given, strategies as st

from binomcong.errors import DomainError
from binomcong.pie import expand
from binomcong.totient import phi_bruteforce, phi_factored, phi_via_pie, totient_family
from oracles import divisors, phi_gcd_scan


@pytest.mark.parametrize("fn", [phi_factored, phi_via_pie, phi_bruteforce])
def test_examples(fn):
    assert fn(1) == 1
    assert phi_gcd_scan(12) == 4 and fn(12) == 4
    assert fn(97) == 96
    assert fn(30) == 8
    assert fn(2**10) == 512


@pytest.mark.parametrize("fn", [phi_factored, phi_via_pie, phi_bruteforce])
def test_zero_is_rejected(fn):
    with pytest.raises(DomainError, match="n must be ≥ 1"):
        fn(0)


def test_pie_terms_for_30():
    terms = expand(totient_family(30)).terms
    assert sum(t.sign * t.cardinality for t in terms) == 30 - (15 + 10 + 6) + (5 + 3 + 2) - 1 == 8


def test_bruteforce_matches_gcd_scan():
    for n in range(1, 3001):
        assert phi_bruteforce(n) == phi_gcd_scan(n)


def test_primes_give_p_minus_1():
    for p in (2, 3, 65537, 2147483647, 2**61 - 1):
        assert phi_factored(p) == p - 1
    assert phi_via_pie(2147483647) == 2147483646


def test_range_limits():
    with pytest.raises(DomainError):
        phi_bruteforce(10**7 + 1)
    with pytest.raises(DomainError):
        phi_via_pie(2**32 + 1)
    assert phi_via_pie(2**32) == 2**31


def test_triple_agreement_sample():
    for n in list(range(1, 2001)) + random.Random(5).sample(range(2001, 10**6), 100):
        assert phi_factored(n) == phi_via_pie(n) == phi_bruteforce(n)


def test_divisor_sum():
    for n in range(1, 10**4 + 1):
        assert sum(phi_factored(d) for d in divisors(n)) == n


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_multiplicative(m, n):
    assume(math.gcd(m, n) == 1)
    assert phi_factored(m * n) == phi_factored(m) * phi_factored(n)
