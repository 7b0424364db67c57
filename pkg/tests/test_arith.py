import math

import pytest
from hypothesis import given, strategies as st

from gcddft.arith import (
    Factorization,
    alpha,
    classical,
    divisors,
    factorize,
    is_prime,
    mobius,
    multiplicative_eval,
    sigma,
    tau,
    theta,
    totient,
)


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_coprime_pair_count(n):
    """Ordered pairs (d, n/d) with gcd(d, n/d) = 1."""
    return sum(1 for d in brute_divisors(n) if math.gcd(d, n // d) == 1)


def test_factorize_basics():
    assert factorize(1).pairs == ()
    assert factorize(12).pairs == ((2, 2), (3, 1))
    assert factorize(2**31 - 1).pairs == ((2147483647, 1),)
    assert is_prime(2147483647)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        divisors(0)


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((2, 0),))


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert fac.value == n
    assert all(is_prime(p) for p, _ in fac)


def test_factorize_large_cofactor_split():
    n = 1000003 * 1000033  # both prime, above the trial-division table
    assert factorize(n).pairs == ((1000003, 1), (1000033, 1))


@pytest.mark.parametrize("n", [1, 12, 97, 360])
def test_divisors_match_brute_force(n):
    assert divisors(n) == brute_divisors(n)
    assert len(divisors(n)) == tau(n)


def test_classical_textbook_values():
    assert totient(12) == 4
    assert tau(12) == 6
    assert sigma(12) == 28
    assert theta(6) == 4
    assert alpha(12) == 2
    assert classical("totient", 12) == 4
    assert classical("sigma_k", 12, 1) == 28
    assert classical("sigma_k", 12, 0) == tau(12)


def test_classical_rejects_unknown_name():
    with pytest.raises(ValueError):
        classical("carmichael", 12)


def test_theta_brute_force_oracle():
    assert theta(6) == brute_coprime_pair_count(6) == 4
    for n in range(1, 10**4 + 1):
        assert theta(n) == 2 ** len(factorize(n))
    for n in range(1, 500):
        assert theta(n) == brute_coprime_pair_count(n)


def test_theta_tau_substitution():
    # tau(m^2) = sum of theta(d) over d|m
    for m in range(1, 200):
        assert tau(m * m) == sum(theta(d) for d in divisors(m))


def test_alpha_counts_odd_divisors():
    assert alpha(12) == sum(1 for d in brute_divisors(12) if d % 2) == 2
    for n in range(1, 10**4 + 1):
        m = n
        while m % 2 == 0:
            m //= 2
        assert alpha(n) == tau(m)


def test_multiplicative_eval():
    phi_rule = lambda p, e: p**e - p ** (e - 1)
    assert multiplicative_eval(phi_rule, 12) == 4
    assert multiplicative_eval(lambda p, e: 1, 360) == 1
    assert multiplicative_eval(phi_rule, 1) == 1
    # gcd-sum values at prime powers: (k+1) p^k - k p^(k-1)
    pillai_rule = lambda p, k: (k + 1) * p**k - k * p ** (k - 1)
    for p, k in [(2, 3), (3, 2), (5, 1)]:
        assert multiplicative_eval(pillai_rule, p**k) == (k + 1) * p**k - k * p ** (k - 1)


MULT_FNS = [mobius, totient, tau, sigma, theta, alpha, lambda n: sigma(n, 2)]


@pytest.mark.parametrize("fn", MULT_FNS)
def test_multiplicative_on_coprime_grid(fn):
    for m in range(1, 101):
        for n in range(m, 101):
            if math.gcd(m, n) == 1:
                assert fn(m * n) == fn(m) * fn(n)


def test_euler_identity_totient_sum():
    for n in range(1, 10**4 + 1):
        assert sum(totient(d) for d in divisors(n)) == n


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=5000))
def test_totient_multiplicative_property(m, n):
    if math.gcd(m, n) == 1:
        assert totient(m * n) == totient(m) * totient(n)
