"""Lambert-series machinery: tent function, the fractal kappa, and the
integer polynomials behind the two Lambert series for phi_a.

p_poly(a) drives the x^m/(1-x^m) series, q_poly(a) the alternating
x^m/(1+x^m) one.  Coefficients come from exact integer formulas; the
series themselves are evaluated in floating point only as numeric
cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .arith import tau
from .dft import id_a, phi_a


@dataclass(frozen=True)
class PolyZ:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use PolyZ.make")

    @staticmethod
    def make(coeffs) -> "PolyZ":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return PolyZ(tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __add__(self, other: "PolyZ") -> "PolyZ":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyZ.make(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    def __sub__(self, other: "PolyZ") -> "PolyZ":
        return self + other.scale(-1)

    def __mul__(self, other: "PolyZ") -> "PolyZ":
        if not self.coeffs or not other.coeffs:
            return PolyZ(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return PolyZ.make(out)

    def scale(self, c: int) -> "PolyZ":
        return PolyZ.make(ci * c for ci in self.coeffs)

    def shift(self, k: int) -> "PolyZ":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return PolyZ((0,) * k + self.coeffs)

    def subst_x_squared(self) -> "PolyZ":
        """p(x) -> p(x^2)."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return PolyZ.make(out)

    def divmod_exact(self, divisor: "PolyZ") -> tuple["PolyZ", "PolyZ"]:
        """Long division by a monic-leading integer divisor; exact quotient
        requires every leading division to be integral."""
        if not divisor.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dn = len(dcs)
        if len(rem) < dn:
            return PolyZ(()), PolyZ.make(rem)
        q = [0] * (len(rem) - dn + 1)
        for i in range(len(q) - 1, -1, -1):
            head = rem[i + dn - 1]
            if head % dcs[-1]:
                raise ValueError("non-exact integer polynomial division")
            q[i] = head // dcs[-1]
            for j, dc in enumerate(dcs):
                rem[i + j] -= q[i] * dc
        return PolyZ.make(q), PolyZ.make(rem)


def tent(a: int, n: int) -> int:
    """Piecewise-linear hat on [0, 2a]: a - |n - a|."""
    if a < 1:
        raise ValueError(f"tent requires a >= 1, got {a}")
    if not 0 <= n <= 2 * a:
        raise ValueError(f"tent argument {n} outside [0, {2 * a}]")
    return a - abs(n - a)


def poly_p(a: int) -> PolyZ:
    """Numerator polynomial of the Lambert series of phi_a.

    Coefficient of x^(k-1) is id_a(tent(a, k)) for k = 1..2a; the degree
    is 2a - 2 and the coefficient sequence is palindromic.
    """
    if a < 1:
        raise ValueError(f"poly_p requires a >= 1, got {a}")
    return PolyZ.make(id_a(a, tent(a, k)) for k in range(1, 2 * a + 1))


def kappa(a: int, n: int) -> int:
    """Fractal coefficient function.

    0 at n = 0 and at even n with odd a; recurses on (a/2, n/2) when both
    are even; tau(gcd(a, n)) at odd n.
    """
    if a < 1:
        raise ValueError(f"kappa requires a >= 1, got {a}")
    if n < 0:
        raise ValueError(f"kappa requires n >= 0, got {n}")
    while True:
        if n == 0:
            return 0
        if n % 2:
            return tau(gcd(a, n))
        if a % 2:
            return 0
        a //= 2
        n //= 2


def h_fn(a: int, k: int) -> int:
    """h[a](k) = id_a(k) - 2 [2|k] id_a(k/2); equals kappa(a, k) * k."""
    if k < 1:
        raise ValueError(f"h_fn requires k >= 1, got {k}")
    value = id_a(a, k)
    if k % 2 == 0:
        value -= 2 * id_a(a, k // 2)
    return value


def _h0(a: int, k: int) -> int:
    """h[a] extended by h[a](0) = 0, as the tent endpoints require."""
    return 0 if k == 0 else h_fn(a, k)


def poly_q(a: int) -> PolyZ:
    """Numerator polynomial of the alternating Lambert series of phi_a.

    Coefficient of x^(k-1) is h[a](tent(2a, k)) for k = 1..4a.  Equals
    p(x) (1 + x^a)^2 - 2 x p(x^2) with p = poly_p(a).
    """
    if a < 1:
        raise ValueError(f"poly_q requires a >= 1, got {a}")
    return PolyZ.make(_h0(a, tent(2 * a, k)) for k in range(1, 4 * a + 1))


def poly_q_from_p(a: int) -> PolyZ:
    """The proof-side route: q(x) = p(x) (1 + x^a)^2 - 2 x p(x^2)."""
    p = poly_p(a)
    one_plus_xa = PolyZ((1,) + (0,) * (a - 1) + (1,))
    return p * one_plus_xa * one_plus_xa - p.subst_x_squared().shift(1).scale(2)


class LambertGap(NamedTuple):
    lhs: float
    rhs: float
    gap: float


def lambert_check(a: int, x: float, terms: int, alternating: bool = False) -> LambertGap:
    """Numerically compare a truncated Lambert series against its closed form.

    Plain mode sums phi_a(m) x^m / (1 - x^m) against p(x) x / (1 - x^a)^2;
    alternating mode sums phi_a(m) x^m / (1 + x^m) against
    q(x) x / (1 - x^(2a))^2.  The gap decreases in terms for 0 < x < 1.
    """
    if a < 1:
        raise ValueError(f"lambert_check requires a >= 1, got {a}")
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    if terms < 0:
        raise ValueError(f"terms must be nonnegative, got {terms}")
    lhs = 0.0
    for m in range(1, terms + 1):
        xm = x**m
        lhs += phi_a(a, m) * xm / ((1.0 + xm) if alternating else (1.0 - xm))
    if alternating:
        rhs = poly_q(a)(x) * x / (1.0 - x ** (2 * a)) ** 2
    else:
        rhs = poly_p(a)(x) * x / (1.0 - x**a) ** 2
    return LambertGap(lhs, rhs, abs(lhs - rhs))
