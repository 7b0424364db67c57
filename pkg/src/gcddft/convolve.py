"""The algebra of arithmetic functions.

Dirichlet convolution, a-convolution (generalized Ramanujan sums), the
divisor-indicator mask, and Kluyver extensions.  Values are exact: ints or
fractions.Fraction, never floats.  a = 0 reproduces plain Dirichlet
convolution through the gcd(0, m) = m convention.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Union

from .arith import divisors, mobius, sigma, tau, theta, totient

Rational = Union[int, Fraction]


class ArithFn:
    """An arithmetic function: a total map from positive integers to exact rationals.

    The multiplicative flag is metadata only; evaluation never shortcuts
    through it.  Instances are immutable apart from an internal memo table,
    whose population is idempotent.
    """

    __slots__ = ("_fn", "name", "multiplicative", "_memo")

    def __init__(
        self,
        fn: Callable[[int], Rational],
        name: str = "f",
        multiplicative: Optional[bool] = None,
        memoize: bool = True,
    ) -> None:
        self._fn = fn
        self.name = name
        self.multiplicative = multiplicative
        self._memo: Optional[dict[int, Rational]] = {} if memoize else None

    def __call__(self, m: int) -> Rational:
        if m < 1:
            raise ValueError(f"arithmetic functions are defined on m >= 1, got {m}")
        if self._memo is None:
            return self._fn(m)
        value = self._memo.get(m)
        if value is None:
            value = self._fn(m)
            self._memo[m] = value
        return value

    def __repr__(self) -> str:
        return f"ArithFn({self.name})"


ID = ArithFn(lambda m: m, "id", multiplicative=True, memoize=False)
U = ArithFn(lambda m: 1, "u", multiplicative=True, memoize=False)
I = ArithFn(lambda m: 1 if m == 1 else 0, "I", multiplicative=True, memoize=False)
MU = ArithFn(mobius, "mu", multiplicative=True)
PHI = ArithFn(totient, "phi", multiplicative=True)
TAU = ArithFn(tau, "tau", multiplicative=True)
SIGMA = ArithFn(sigma, "sigma", multiplicative=True)
THETA = ArithFn(theta, "theta", multiplicative=True)
ONE_OVER_ID = ArithFn(lambda m: Fraction(1, m), "1/id", multiplicative=True, memoize=False)


def id_pow(n: int) -> ArithFn:
    """id[n]: m -> m**n."""
    return ArithFn(lambda m: m**n, f"id[{n}]", multiplicative=True, memoize=False)


def sigma_pow(n: int) -> ArithFn:
    """sigma[n] = id[n] * u, the sum of n-th powers of divisors."""
    return ArithFn(lambda m: sigma(m, n), f"sigma[{n}]", multiplicative=True)


def _both_multiplicative(f: ArithFn, g: ArithFn) -> Optional[bool]:
    if f.multiplicative and g.multiplicative:
        return True
    return None


def dirichlet(f: ArithFn, g: ArithFn) -> ArithFn:
    """Dirichlet convolution: (f*g)(m) = sum over d|m of f(d) g(m/d)."""

    def conv(m: int) -> Rational:
        return sum(f(d) * g(m // d) for d in divisors(m))

    return ArithFn(conv, f"({f.name}*{g.name})", _both_multiplicative(f, g))


def a_convolve(a: int, f: ArithFn, g: ArithFn) -> ArithFn:
    """a-convolution: (f *_a g)(m) = sum over d | gcd(a, m) of f(d) g(m/d).

    gcd(0, m) = m, so a = 0 gives back the Dirichlet convolution.
    """
    if a < 0:
        raise ValueError(f"a-convolution requires a >= 0, got {a}")

    def conv(m: int) -> Rational:
        return sum(f(d) * g(m // d) for d in divisors(gcd(a, m)))

    return ArithFn(conv, f"({f.name}*_{a}{g.name})", _both_multiplicative(f, g))


def mask(a: int, f: ArithFn) -> ArithFn:
    """f *_a I: keeps f(k) where k divides a and zeroes the rest.

    Every k divides 0, so mask(0, f) is f itself.
    """
    if a < 0:
        raise ValueError(f"mask requires a >= 0, got {a}")

    def masked(k: int) -> Rational:
        return f(k) if a % k == 0 else 0

    return ArithFn(masked, f"[k|{a}]{f.name}", True if f.multiplicative else None)


def kluyver_extend(a: int, f: ArithFn) -> ArithFn:
    """The a-extension f_a = id *_a f; f_1 = f and f_0 = id * f."""
    fa = a_convolve(a, ID, f)
    fa.name = f"{f.name}_{a}"
    return fa
