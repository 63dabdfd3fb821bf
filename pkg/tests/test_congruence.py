import math

import pytest
from hypothesis import assume, given, strategies as st

from binomcong.arith import ext_gcd, is_prime
from binomcong.congruence import (
    PATH_EULER,
    PATH_INVERSION,
    PATH_LIFT,
    PATH_LINEAR,
    PATH_SCAN,
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
from binomcong.errors import (
    ArithmeticOverflow,
    DomainError,
    InvariantViolation,
    NotCoprime,
    UnsupportedModulus,
)
from binomcong.totient import phi_factored
from oracles import scan_binomial, scan_linear


def test_euler_power_examples():
    assert 3**4 % 5 == 1
    assert euler_power(3, 5) == 1
    assert euler_power(0, 1) == 0 and euler_power(12345, 1) == 0
    with pytest.raises(NotCoprime):
        euler_power(2, 4)
    with pytest.raises(DomainError):
        euler_power(2, 0)


@given(st.integers(0, 10**9), st.integers(2, 10**6))
def test_euler_theorem(a, n):
    assume(math.gcd(a, n) == 1)
    assert euler_power(a, n) == 1


def test_fermat():
    assert 2**6 == 64 and 64 % 7 == 1
    assert fermat_check(2, 7)
    for p in (2, 3, 5, 101, 65537):
        assert fermat_check(1, p)
    with pytest.raises(DomainError):
        fermat_check(10, 5)
    with pytest.raises(DomainError):
        fermat_check(2, 561)


def test_silva_sum_examples():
    assert 3**4 + 5**2 == 106 and 106 % 15 == 1
    assert silva_sum(CoprimeFactorization((3, 5))) == 1
    assert (2**phi_factored(15) + 3**phi_factored(10) + 5**phi_factored(6)) % 30 == 2
    assert silva_sum((2, 3, 5)) == 2


def test_silva_sum_k_equals_n_wraps():
    # five factors with product 2*3*5*7*11; k - 1 = 4
    assert silva_sum((2, 3, 5, 7, 11)) == 4


@pytest.mark.parametrize("factors", [(6,), (), (4, 6), (1, 5), (3, 5, 9)])
def test_coprime_factorization_rejects(factors):
    with pytest.raises(DomainError):
        CoprimeFactorization(factors)


def test_coprime_factorization_overflow():
    with pytest.raises(ArithmeticOverflow):
        CoprimeFactorization((2**40 + 1, 2**40))


@given(st.lists(st.integers(2, 2000), min_size=2, max_size=5))
def test_silva_sum_property(factors):
    assume(all(math.gcd(a, b) == 1 for i, a in enumerate(factors) for b in factors[:i]))
    f = CoprimeFactorization(tuple(factors))
    assert silva_sum(f) == (f.k - 1) % f.n


def test_bezout_examples():
    pair = bezout_silva(3, 5)
    assert pair.x == 27 % 15 and pair.y == 5
    assert (3 * 27 + 5 * 5) % 15 == 1
    pair = bezout_silva(2, 3)
    assert (pair.x, pair.y) == (2, 1)
    assert (2 * 2 + 3 * 1) % 6 == 1
    with pytest.raises(NotCoprime):
        bezout_silva(4, 6)
    with pytest.raises(DomainError):
        bezout_silva(1, 5)


@given(st.integers(2, 10**6), st.integers(2, 10**6))
def test_bezout_property(a, b):
    assume(math.gcd(a, b) == 1)
    pair = bezout_silva(a, b)
    n = a * b
    assert (a * pair.x + b * pair.y) % n == 1
    assert 0 <= pair.x < n and 0 <= pair.y < n
    _, ex, ey = ext_gcd(a, b)
    # both solutions of a*x + b*y = 1: a*x is 1 mod b and 0 mod a, so a*x agrees with a*ex mod ab
    assert a * pair.x % n == a * ex % n
    assert a * pair.x % n == (1 - b * pair.y) % n


def test_solve_linear_examples():
    assert scan_linear(3, 4, 7) == [6]
    assert 4 * 3**5 == 972 and 972 % 7 == 6
    sol = solve_linear(3, 4, 7)
    assert sol.residues == (6,) and sol.path == PATH_EULER
    assert solve_linear(2, 3, 4).residues == ()
    assert scan_linear(4, 2, 6) == [2, 5]
    sol = solve_linear(4, 2, 6)
    assert sol.residues == (2, 5) and sol.path == PATH_LIFT
    assert solve_linear(0, 0, 1).residues == (0,)
    assert solve_linear(0, 0, 5).residues == (0, 1, 2, 3, 4)
    with pytest.raises(DomainError):
        solve_linear(1, 1, 0)


def test_solve_linear_unreduced_inputs():
    assert list(solve_linear(10, 25, 7)) == scan_linear(10, 25, 7)


def test_solve_linear_exhaustive_small():
    for n in range(1, 41):
        for a in range(n):
            for b in range(n):
                assert list(solve_linear(a, b, n)) == scan_linear(a, b, n)


def test_solve_crt_examples():
    assert [x for x in range(15) if x % 3 == 2 and x % 5 == 3] == [8]
    assert 2 * 5**2 + 3 * 3**4 == 293 and 293 % 15 == 8
    assert solve_crt([(2, 3), (3, 5)]) == 8
    assert solve_crt([(0, 3), (0, 5)]) == 0
    assert [x for x in range(30) if (x % 2, x % 3, x % 5) == (1, 2, 3)] == [23]
    assert solve_crt([(1, 2), (2, 3), (3, 5)]) == 23


@pytest.mark.parametrize(
    "pairs,exc",
    [
        ([(1, 4), (1, 6)], NotCoprime),
        ([(1, 4)], DomainError),
        ([], DomainError),
        ([(5, 4), (1, 3)], DomainError),
        ([(0, 1), (1, 3)], DomainError),
    ],
)
def test_solve_crt_errors(pairs, exc):
    with pytest.raises(exc):
        solve_crt(pairs)


@given(st.lists(st.integers(2, 400), min_size=2, max_size=4), st.data())
def test_solve_crt_matches_scan(moduli, data):
    assume(all(math.gcd(a, b) == 1 for i, a in enumerate(moduli) for b in moduli[:i]))
    big_n = math.prod(moduli)
    assume(big_n <= 10**5)
    pairs = [(data.draw(st.integers(0, m - 1)), m) for m in moduli]
    expected = [x for x in range(big_n) if all(x % m == r for r, m in pairs)]
    assert [solve_crt(pairs)] == expected


def test_solve_binomial_examples():
    assert scan_binomial(1, 3, 2, 5) == [3]
    sol = solve_binomial(1, 3, 2, 5)
    assert sol.residues == (3,) and sol.path == PATH_INVERSION
    assert scan_binomial(1, 2, 3, 5) == []
    sol = solve_binomial(1, 2, 3, 5)
    assert sol.residues == () and sol.path == PATH_SCAN
    for big_n in (2, 9, 12, 13):
        for b in range(big_n):
            sol = solve_binomial(1, 1, b, big_n)
            assert sol.residues == solve_linear(1, b, big_n).residues and sol.path == PATH_LINEAR


def test_solve_binomial_errors():
    with pytest.raises(UnsupportedModulus):
        solve_binomial(1, 2, 1, 10**6 + 1)
    with pytest.raises(DomainError):
        solve_binomial(1, 2, 0, 1)
    with pytest.raises(DomainError):
        solve_binomial(1, 0, 1, 7)


def test_solve_binomial_modulus_two():
    for a in range(2):
        for e in range(1, 6):
            for b in range(2):
                assert list(solve_binomial(a, e, b, 2)) == scan_binomial(a, e, b, 2)


def test_solve_binomial_large_prime_fast_path():
    p = 999983
    sol = solve_binomial(7, 5, 12345, p)
    assert sol.path == PATH_INVERSION
    (x,) = sol.residues
    assert 7 * pow(x, 5, p) % p == 12345


def test_solve_binomial_exhaustive_small():
    for big_n in range(2, 30):
        for e in range(1, 6):
            for a in range(big_n):
                for b in range(big_n):
                    assert list(solve_binomial(a, e, b, big_n)) == scan_binomial(a, e, b, big_n)


def test_rsa_examples():
    assert 7 * 3 % 20 == 1 and pow(pow(5, 7, 33), 3, 33) == 5
    assert rsa_roundtrip(3, 11, 7, 5) == 5
    assert rsa_roundtrip(61, 53, 17, 1) == 1
    assert rsa_roundtrip(61, 53, 17, 65) == 65
    with pytest.raises(DomainError):
        rsa_roundtrip(5, 5, 3, 2)
    with pytest.raises(DomainError):
        rsa_roundtrip(4, 7, 5, 2)
    with pytest.raises(DomainError):
        rsa_roundtrip(3, 11, 5, 2)  # gcd(5, 20) = 5
    with pytest.raises(DomainError):
        rsa_roundtrip(3, 11, 7, 33)
    with pytest.raises(DomainError):
        rsa_roundtrip(2**31 + 11, 3, 5, 2)


def test_rsa_largest_primes():
    p, q = 2147483647, 2147483629
    assert is_prime(q)
    assert rsa_roundtrip(p, q, 65537, 123456789123456789) == 123456789123456789


def test_residue_solution_set_invariants():
    with pytest.raises(InvariantViolation):
        ResidueSolutionSet(5, (3, 1))
    with pytest.raises(InvariantViolation):
        ResidueSolutionSet(5, (5,))
    sol = ResidueSolutionSet(5, [1, 3])
    assert 3 in sol and len(sol) == 2 and sol.residues == (1, 3)


