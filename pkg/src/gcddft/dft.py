"""Ramanujan sums and the discrete Fourier transform of the gcd.

Each quantity is computable along independent routes: exact divisor sums
(Kluyver), the Holder/Von Sterneck quotient, direct complex summation over
roots of unity, and a brute-force pair count.  The exact routes are
authoritative; the float routes exist as independent witnesses and raise
ResidualError when the rounding residual is out of tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

import numpy as np

from .arith import divisors, factorize, mobius, tau, totient
from .convolve import ID, MU, U, ArithFn, Rational, a_convolve, dirichlet

ROUNDING_TOL = 1e-6


class ResidualError(ArithmeticError):
    """A floating-point summation landed too far from an integer."""


@dataclass(frozen=True)
class DftValue:
    """A complex DFT value with its nearest integer and rounding residual."""

    value: complex
    rounded: int
    residual: float

    @classmethod
    def from_complex(cls, value: complex) -> "DftValue":
        rounded = round(value.real)
        return cls(value, rounded, abs(value - rounded))


@lru_cache(maxsize=4096)
def _unit_root_powers(m: int) -> np.ndarray:
    """Powers of exp(2*pi*i/m): index j holds the j-th power."""
    return np.exp(2j * np.pi * np.arange(m) / m)


@lru_cache(maxsize=4096)
def _residues(m: int) -> np.ndarray:
    return np.arange(1, m + 1, dtype=np.int64)


@lru_cache(maxsize=4096)
def _coprime_residues(m: int) -> np.ndarray:
    ks = _residues(m)
    return ks[np.gcd(ks, m) == 1]


@lru_cache(maxsize=4096)
def _gcd_row(m: int) -> np.ndarray:
    return np.gcd(_residues(m), m)


def ramanujan(m: int, a: int, method: str = "kluyver") -> int:
    """Ramanujan's sum c_m(a) by one of three routes.

    kluyver: sum of d*mu(m/d) over d | gcd(a, m), exact.
    holder: mu(m/g) phi(m) / phi(m/g) with g = gcd(a, m), exact division.
    definition: complex sum of m-th root powers over residues coprime to m,
    rounded; raises ResidualError when the residual exceeds 1e-6 * m.
    """
    if m < 1:
        raise ValueError(f"ramanujan requires m >= 1, got {m}")
    if a < 0:
        raise ValueError(f"ramanujan requires a >= 0, got {a}")
    if method == "kluyver":
        return sum(d * mobius(m // d) for d in divisors(gcd(a, m)))
    if method == "holder":
        g = gcd(a, m)
        num = mobius(m // g) * totient(m)
        den = totient(m // g)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"Holder quotient not integral at m={m}, a={a}")
        return q
    if method == "definition":
        powers = _unit_root_powers(m)
        ks = _coprime_residues(m)
        value = complex(powers[(ks * (a % m)) % m].sum())
        dv = DftValue.from_complex(value)
        if dv.residual > ROUNDING_TOL * m:
            raise ResidualError(
                f"c_{m}({a}) residual {dv.residual:.3g} exceeds {ROUNDING_TOL * m:.3g}"
            )
        return dv.rounded
    raise ValueError(f"unknown ramanujan method {method!r}")


def dft_gcd_direct(h: ArithFn, a: int, m: int) -> DftValue:
    """Direct complex evaluation of sum over k of h(gcd(k, m)) alpha_m^(k a)."""
    if m < 1:
        raise ValueError(f"dft_gcd requires m >= 1, got {m}")
    hvals = {d: float(h(d)) for d in divisors(m)}
    vec = np.array([hvals[int(g)] for g in _gcd_row(m)])
    powers = _unit_root_powers(m)
    phases = powers[(_residues(m) * (a % m)) % m]
    value = complex((vec * phases).sum())
    dv = DftValue.from_complex(value)
    bound = ROUNDING_TOL * m * max(abs(v) for v in hvals.values())
    if dv.residual > bound:
        raise ResidualError(
            f"DFT residual {dv.residual:.3g} exceeds {bound:.3g} at a={a}, m={m}"
        )
    return dv


def dft_gcd(h: ArithFn, a: int, m: int, method: str = "exact") -> int:
    """Fourier transform of h of the gcd, h-hat[a](m), as an integer.

    exact: sum over d | m of h(m/d) c_d(a) with Kluyver Ramanujan sums.
    direct: complex summation, rounded (dft_gcd_direct for the raw value).
    """
    if method == "direct":
        return dft_gcd_direct(h, a, m).rounded
    if method == "exact":
        total = sum(h(m // d) * ramanujan(d, a) for d in divisors(m))
        if isinstance(total, Fraction):
            if total.denominator != 1:
                raise ArithmeticError(f"non-integer DFT value {total} at a={a}, m={m}")
            return int(total)
        return int(total)
    raise ValueError(f"unknown dft_gcd method {method!r}")


@lru_cache(maxsize=512)
def _pair_count_table(m: int) -> tuple[int, ...]:
    """tally[r] = number of ordered pairs (i, j) in [1, m]^2 with i*j = r mod m."""
    ks = _residues(m)
    tally = np.zeros(m, dtype=np.int64)
    for i in range(1, m + 1):
        tally += np.bincount((i * ks) % m, minlength=m)
    return tuple(int(t) for t in tally)


def count_factorizations(a: int, m: int) -> int:
    """Number of ordered pairs (i, j) in [1, m]^2 with i*j = a mod m.

    Exhaustive enumeration of all m^2 products; a is reduced mod m.
    """
    if m < 1:
        raise ValueError(f"count_factorizations requires m >= 1, got {m}")
    return _pair_count_table(m)[a % m]


def _prime_power_phi_a(p: int, k: int, ell: Union[int, None]) -> int:
    """phi_a at p**k given the multiplicity ell of p in a (None means infinite)."""
    if ell is not None and ell < k:
        return (p**k - p ** (k - 1)) * (ell + 1)
    return (k + 1) * p**k - k * p ** (k - 1)


@lru_cache(maxsize=None)
def phi_a(a: int, m: int, method: str = "closed") -> int:
    """The DFT of the gcd, phi_a(m): counts pairs (i, j) with i*j = a mod m.

    closed: sum of d*phi(m/d) over d | gcd(a, m).
    prime_power: multiplicative evaluation from the prime-power formula,
    where the branch depends on the multiplicity of p in a (infinite at a=0).
    dft: direct complex DFT of id, rounded.
    pairs: brute-force factorization count (O(m^2), keep m desk-scale).
    """
    if m < 1:
        raise ValueError(f"phi_a requires m >= 1, got {m}")
    if a < 0:
        raise ValueError(f"phi_a requires a >= 0, got {a}")
    if method == "closed":
        return sum(d * totient(m // d) for d in divisors(gcd(a, m)))
    if method == "prime_power":
        result = 1
        for p, k in factorize(m):
            if a == 0:
                ell = None
            else:
                ell = 0
                rest = a
                while rest % p == 0:
                    rest //= p
                    ell += 1
            result *= _prime_power_phi_a(p, k, ell)
        return result
    if method == "dft":
        return dft_gcd(ID, a, m, method="direct")
    if method == "pairs":
        return count_factorizations(a, m)
    raise ValueError(f"unknown phi_a method {method!r}")


def pillai(m: int) -> int:
    """Pillai's gcd-sum function P(m) = phi_0(m)."""
    return phi_a(0, m)


def id_a(a: int, m: int) -> int:
    """The a-extension of the identity: id_a(m) = m * tau(gcd(a, m)).

    Extended by id_a(0) = 0, which the Lambert-polynomial coefficients use
    at the tent function's zeros.
    """
    if m == 0:
        return 0
    if m < 0:
        raise ValueError(f"id_a requires m >= 0, got {m}")
    return m * tau(gcd(a, m))


def gcd_fn_coeffs(h: ArithFn, k: int, m: int) -> Rational:
    """Fourier coefficient ((h*mu) *_k u)(m); equals h(gcd(k, m)) exactly."""
    if not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
    return a_convolve(k, dirichlet(h, MU), U)(m)


@dataclass(frozen=True)
class FourierCheckResult:
    """Outcome of comparing an a-convolution against its Fourier expansion."""

    ok: bool
    residual: float
    expansion: complex
    exact: Rational

    def __bool__(self) -> bool:
        return self.ok


def aconv_fourier_check(f: ArithFn, g: ArithFn, a: int, m: int) -> FourierCheckResult:
    """Check (f *_a g)(m) against its Fourier expansion over roots of unity.

    The coefficients are h_k = g *_k (f/id); the expansion is the complex
    sum of h_k(m) alpha_m^(k a).
    """
    if m < 1:
        raise ValueError(f"aconv_fourier_check requires m >= 1, got {m}")
    coeffs = []
    for k in range(1, m + 1):
        hk = sum(
            Fraction(g(d)) * Fraction(f(m // d)) / (m // d)
            for d in divisors(gcd(k, m))
        )
        coeffs.append(hk)
    powers = _unit_root_powers(m)
    expansion = complex(
        sum(float(hk) * powers[(k * (a % m)) % m] for k, hk in enumerate(coeffs, start=1))
    )
    exact = a_convolve(a, f, g)(m)
    residual = abs(expansion - float(exact))
    bound = ROUNDING_TOL * m * max(abs(float(hk)) for hk in coeffs)
    return FourierCheckResult(residual <= bound, residual, expansion, exact)
