"""Integer primitives and the classical arithmetic functions.

Everything here is exact: values are Python ints (arbitrary precision),
factorizations are deterministic, and there is no floating point anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

_TRIAL_LIMIT = 10**6

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below 10**6, sieved once on first use."""
    limit = _TRIAL_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = bytearray(len(range(start, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle finding).

    The parameter sweep is a fixed sequence, so the output is deterministic.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, exponent) pairs, sorted ascending by prime.

    The empty sequence represents 1.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.pairs]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("primes must be distinct and ascending")
        if any(e < 1 for _, e in self.pairs):
            raise ValueError("exponents must be positive")

    @property
    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.pairs, 1)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor a positive integer into its Factorization.

    Trial division by the cached prime table, then Miller-Rabin plus a
    Pollard-rho splitter for any large cofactor.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    pairs: list[tuple[int, int]] = []
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            pairs.append((p, e))
    if rest > 1:
        if rest < _TRIAL_LIMIT**2 or is_prime(rest):
            pairs.append((rest, 1))
        else:
            extra: dict[int, int] = {}
            stack = [rest]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    extra[m] = extra.get(m, 0) + 1
                    continue
                d = _pollard_rho(m)
                stack.extend((d, m // d))
            pairs.extend(sorted(extra.items()))
    pairs.sort()
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def tau(n: int) -> int:
    return math.prod(e + 1 for _, e in factorize(n))


@lru_cache(maxsize=None)
def sigma(n: int, k: int = 1) -> int:
    """Sum of k-th powers of the divisors of n."""
    if k < 0:
        raise ValueError("sigma exponent must be nonnegative")
    if k == 0:
        return tau(n)
    return math.prod((p ** (k * (e + 1)) - 1) // (p**k - 1) for p, e in factorize(n))


def theta(n: int) -> int:
    """Number of ordered decompositions of n into two coprime factors.

    Equals 2**omega(n); theta(1) = 1 (the pair (1, 1)).
    """
    return 2 ** len(factorize(n))


def alpha(n: int) -> int:
    """Number of odd divisors of n."""
    if n < 1:
        raise ValueError(f"alpha requires n >= 1, got {n}")
    m = n
    while m % 2 == 0:
        m //= 2
    return tau(m)


_CLASSICAL = {
    "mobius": mobius,
    "totient": totient,
    "tau": tau,
    "theta": theta,
    "alpha": alpha,
}


def classical(name: str, n: int, k: int = 1) -> int:
    """Evaluate a classical arithmetic function by name.

    Known names: mobius, totient, tau, sigma_k (k passed separately),
    theta, alpha.
    """
    if n < 1:
        raise ValueError(f"classical functions require n >= 1, got {n}")
    if name == "sigma_k":
        return sigma(n, k)
    fn = _CLASSICAL.get(name)
    if fn is None:
        raise ValueError(f"unknown arithmetic function {name!r}")
    return fn(n)


def multiplicative_eval(rule, n: int) -> int:
    """Evaluate a multiplicative function from its prime-power rule.

    rule(p, e) gives the value at p**e; the result is the product over the
    factorization of n, and 1 at n = 1.
    """
    return math.prod(rule(p, e) for p, e in factorize(n))
