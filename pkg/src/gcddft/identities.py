"""Registry of gcd-DFT / generalized-totient identities with an exact verifier.

Every entry states an identity between two independently evaluated exact
expressions (ints or Fractions, never floats) and carries a default
parameter box.  verify() sweeps the box and reports every mismatch
verbatim; verify_all() runs the whole registry.

The registry supports documented mutants (a deliberately corrupted rhs)
so the suite itself can be tested for sensitivity.
"""
from __future__ import annotations

import itertools
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Mapping, Optional, Sequence, Union

from .arith import divisors, factorize, mobius, sigma, tau, theta, totient
from .dft import phi_a, ramanujan

Rational = Union[int, Fraction]

GRID_CAP = 10**6


# ---------------------------------------------------------------------------
# cached building blocks shared by the entries
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _ck(k: int, a: int) -> int:
    """Ramanujan sum c_k(a) = (id *_a mu)(k), exact Kluyver form."""
    return ramanujan(k, a, method="kluyver")


@lru_cache(maxsize=None)
def _pillai_brute(n: int) -> int:
    """P(n) as the literal gcd sum; independent of the convolution route."""
    return sum(gcd(k, n) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _pillai_closed(n: int) -> int:
    return phi_a(0, n)


@lru_cache(maxsize=None)
def _pillai_ext(a: int, k: int) -> int:
    """P_a(k) = (id *_a P)(k), with P by the closed route."""
    return sum(d * _pillai_closed(k // d) for d in divisors(gcd(a, k)))


@lru_cache(maxsize=None)
def _id_conv_mu(x: int) -> int:
    """(id * mu)(x) by its divisor sum (equals phi, but evaluated literally)."""
    return sum(d * mobius(x // d) for d in divisors(x))


@lru_cache(maxsize=None)
def _idhat(x: int, a: int) -> int:
    """id-hat[a](x) = (id * c_.(a))(x), the (hffc) route."""
    return sum((x // e) * _ck(e, a) for e in divisors(x))


@lru_cache(maxsize=None)
def _muhat(x: int, b: int) -> int:
    """mu-hat[b](x) = (mu * c_.(b))(x)."""
    return sum(mobius(x // e) * _ck(e, b) for e in divisors(x))


@lru_cache(maxsize=None)
def _sigma_ext(a: int, m: int) -> int:
    """sigma_a(m) = (id *_a sigma)(m)."""
    return sum(d * sigma(m // d) for d in divisors(gcd(a, m)))


@lru_cache(maxsize=None)
def _tau_ext(a: int, x: int) -> int:
    """tau_a(x) = (id *_a tau)(x)."""
    return sum(e * tau(x // e) for e in divisors(gcd(a, x)))


@lru_cache(maxsize=None)
def _id_ext(a: int, x: int) -> int:
    """id_a(x) = (id *_a id)(x), evaluated as the literal divisor sum."""
    return sum(d * (x // d) for d in divisors(gcd(a, x)))


@lru_cache(maxsize=None)
def _phi_tau_conv(x: int) -> int:
    """(phi * tau)(x)."""
    return sum(totient(d) * tau(x // d) for d in divisors(x))


_PREFIX: dict[str, dict] = defaultdict(dict)


def _prefix_sum(key: str, a: Optional[int], n: int, term: Callable[[Optional[int], int], Rational]) -> Rational:
    """Running sum over k = 1..n of term(a, k), cached incrementally per a."""
    rows = _PREFIX[key]
    row = rows.get(a)
    if row is None:
        row = [0]
        rows[a] = row
    while len(row) <= n:
        k = len(row)
        row.append(row[k - 1] + term(a, k))
    return row[n]


def _is_prime_power(m: int) -> bool:
    return len(factorize(m)) == 1 if m > 1 else False


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    """One verifiable identity: two exact evaluators over a parameter box."""

    id: str
    statement: str
    paper_eq: str
    params: dict[str, tuple[int, int]]
    lhs: Callable[..., Rational]
    rhs: Callable[..., Rational]
    constraint: Optional[Callable[..., bool]] = None


@dataclass
class IdentityReport:
    """Outcome of sweeping one identity over a grid."""

    id: str
    points_checked: int
    failures: list[tuple[dict, str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def skipped(self) -> bool:
        return self.points_checked == 0


def _fmt(value: Rational) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


# ---------------------------------------------------------------------------
# the entries
# ---------------------------------------------------------------------------

def _build_entries() -> list[IdentityCheck]:
    entries: list[IdentityCheck] = []

    def add(id, statement, paper_eq, params, lhs, rhs, constraint=None):
        entries.append(IdentityCheck(id, statement, paper_eq, params, lhs, rhs, constraint))

    # --- gcd sums over a full period -------------------------------------
    add(
        "cesaro-1885",
        "sum of tau(gcd(k,m)) over k<=m equals (tau*phi)(m)",
        "(C)",
        {"m": (1, 200)},
        lambda m: sum(tau(gcd(k, m)) for k in range(1, m + 1)),
        lambda m: sum(tau(d) * totient(m // d) for d in divisors(m)),
    )
    add(
        "gen-cesaro",
        "sum of id_a(gcd(k,m)) over k<=m equals (id*phi_a)(m)",
        "(gC) with h=id",
        {"a": (0, 6), "m": (1, 60)},
        lambda a, m: sum(_id_ext(a, gcd(k, m)) for k in range(1, m + 1)),
        lambda a, m: sum((m // d) * phi_a(a, d) for d in divisors(m)),
    )
    add(
        "gen-cesaro-u",
        "sum of u_a(gcd(k,m)) over k<=m equals (u*phi_a)(m)",
        "(gC) with h=u",
        {"a": (0, 6), "m": (1, 60)},
        lambda a, m: sum(
            sum(d for d in divisors(gcd(a, gcd(k, m)))) for k in range(1, m + 1)
        ),
        lambda a, m: sum(phi_a(a, d) for d in divisors(m)),
    )
    add(
        "gen-cesaro-tau",
        "sum of tau_a(gcd(k,m)) over k<=m equals (tau*phi_a)(m)",
        "(gC) with h=tau",
        {"a": (0, 6), "m": (1, 60)},
        lambda a, m: sum(_tau_ext(a, gcd(k, m)) for k in range(1, m + 1)),
        lambda a, m: sum(tau(m // d) * phi_a(a, d) for d in divisors(m)),
    )

    # --- partial sums of f/id --------------------------------------------
    add(
        "partial-quot-base",
        "sum of (id*mu)(k)/k equals sum of mu(k)/k * floor(n/k)",
        "(ook) with f=mu, i.e. (fti)",
        {"n": (1, 200)},
        lambda n: _prefix_sum("ook-lhs", None, n, lambda _, k: Fraction(_id_conv_mu(k), k)),
        lambda n: sum(Fraction(mobius(k), k) * (n // k) for k in range(1, n + 1)),
    )
    add(
        "partial-quot-aconv",
        "sum of (u *_a (id*mu))(k)/k equals sum of (u *_a mu)(k)/k * floor(n/k)",
        "(cook) with f=u, g=mu",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: _prefix_sum(
            "cook-lhs",
            a,
            n,
            lambda a_, k: Fraction(
                sum(_id_conv_mu(k // d) for d in divisors(gcd(a_, k))), k
            ),
        ),
        lambda a, n: sum(
            Fraction(sum(mobius(k // d) for d in divisors(gcd(a, k))), k) * (n // k)
            for k in range(1, n + 1)
        ),
    )
    add(
        "g1",
        "sum of phi_a(k)/k equals sum of c_k(a)/k * floor(n/k)",
        "(g1)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: _prefix_sum("g1-lhs", a, n, lambda a_, k: Fraction(phi_a(a_, k), k)),
        lambda a, n: sum(Fraction(_ck(k, a), k) * (n // k) for k in range(1, n + 1)),
    )
    add(
        "g2",
        "sum of P_a(k)/k equals sum of phi_a(k)/k * floor(n/k)",
        "(g2)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: _prefix_sum("g2-lhs", a, n, lambda a_, k: Fraction(_pillai_ext(a_, k), k)),
        lambda a, n: sum(Fraction(phi_a(a, k), k) * (n // k) for k in range(1, n + 1)),
    )
    add(
        "g3",
        "sum of P(k)/k equals sum of phi(k)/k * floor(n/k)",
        "(g3)",
        {"n": (1, 200)},
        lambda n: _prefix_sum("g3-lhs", None, n, lambda _, k: Fraction(_pillai_closed(k), k)),
        lambda n: sum(Fraction(totient(k), k) * (n // k) for k in range(1, n + 1)),
    )

    # --- partial sums -----------------------------------------------------
    add(
        "partial-sum-base",
        "sum of (id*tau)(k) equals half of [sum tau(k) floor(n/k)^2 + sum (tau*u)(k)]",
        "(fid) with f=tau",
        {"n": (1, 200)},
        lambda n: _prefix_sum(
            "fid-lhs", None, n,
            lambda _, k: sum(d * tau(k // d) for d in divisors(k)),
        ),
        lambda n: Fraction(
            sum(tau(k) * (n // k) ** 2 for k in range(1, n + 1))
            + _prefix_sum(
                "fid-tau-u", None, n,
                lambda _, k: sum(tau(d) for d in divisors(k)),
            ),
            2,
        ),
    )
    add(
        "totient-partial",
        "sum of phi(k) equals half of [1 + sum mu(k) floor(n/k)^2]",
        "(iop)",
        {"n": (1, 200)},
        lambda n: _prefix_sum("iop-lhs", None, n, lambda _, k: totient(k)),
        lambda n: Fraction(1 + sum(mobius(k) * (n // k) ** 2 for k in range(1, n + 1)), 2),
    )
    add(
        "g4",
        "sum of phi_a(k) equals half of [sum of k|a, k<=n plus sum c_k(a) floor(n/k)^2]",
        "(g4)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: _prefix_sum("g4-lhs", a, n, lambda a_, k: phi_a(a_, k)),
        lambda a, n: Fraction(
            (sum(k for k in divisors(a) if k <= n) if a else n * (n + 1) // 2)
            + sum(_ck(k, a) * (n // k) ** 2 for k in range(1, n + 1)),
            2,
        ),
    )
    add(
        "sigma-remark",
        "sum of divisors k of a with k<=n equals sigma(a) once n>=a",
        "remark after (g4)",
        {"a": (1, 50), "n": (1, 200)},
        lambda a, n: sum(k for k in divisors(a) if k <= n),
        lambda a, n: sigma(a),
        constraint=lambda a, n: n >= a,
    )
    add(
        "euler-gen",
        "sum of phi_a(d) over d|m equals tau(gcd(a,m)) * m",
        "(jkl)",
        {"a": (0, 50), "m": (1, 200)},
        lambda a, m: sum(phi_a(a, d) for d in divisors(m)),
        lambda a, m: tau(gcd(a, m)) * m,
    )
    add(
        "g5",
        "sum of P_a(k) equals half of [sum tau(gcd(a,k)) k + sum phi_a(k) floor(n/k)^2]",
        "(g5)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: _prefix_sum("g5-lhs", a, n, lambda a_, k: _pillai_ext(a_, k)),
        lambda a, n: Fraction(
            _prefix_sum("g5-tgk", a, n, lambda a_, k: tau(gcd(a_, k)) * k)
            + sum(phi_a(a, k) * (n // k) ** 2 for k in range(1, n + 1)),
            2,
        ),
    )

    # --- Cesaro's identities and their extensions -------------------------
    add(
        "cesaro-c1",
        "sum of d phi(n/d) over d|n equals the brute-force gcd sum",
        "(c1)",
        {"n": (1, 200)},
        lambda n: sum(d * totient(n // d) for d in divisors(n)),
        lambda n: _pillai_brute(n),
    )
    add(
        "cesaro-c2",
        "sum of (d/n) phi(d) over d|n equals sum of 1/gcd(j,n)",
        "(c2)",
        {"n": (1, 200)},
        lambda n: sum(Fraction(d, n) * totient(d) for d in divisors(n)),
        lambda n: sum(Fraction(1, gcd(j, n)) for j in range(1, n + 1)),
    )
    add(
        "cesaro-c3",
        "sum of phi(d) phi(n/d) over d|n equals sum of phi(gcd(j,n))",
        "(c3)",
        {"n": (1, 200)},
        lambda n: sum(totient(d) * totient(n // d) for d in divisors(n)),
        lambda n: sum(totient(gcd(j, n)) for j in range(1, n + 1)),
    )
    add(
        "p1",
        "sum of d phi_a(n/d) over d|n equals P_a(n) built on the brute gcd sum",
        "(p1)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: sum(d * phi_a(a, n // d) for d in divisors(n)),
        lambda a, n: sum(d * _pillai_brute(n // d) for d in divisors(gcd(a, n))),
    )
    add(
        "p2",
        "sum of (d/n) phi_a(d) over d|n equals the double sum of 1/gcd(j, n/d)",
        "(p2), literal reading",
        {"a": (0, 50), "n": (1, 60)},
        lambda a, n: sum(Fraction(d, n) * phi_a(a, d) for d in divisors(n)),
        lambda a, n: sum(
            Fraction(1, gcd(j, n // d))
            for j in range(1, n + 1)
            for d in divisors(gcd(a, n))
        ),
    )
    add(
        "p3",
        "sum of phi_a(d) phi_b(n/d) over d|n equals the double sum of phi_b(gcd(j, n/d))",
        "(p3)",
        {"a": (0, 6), "b": (0, 6), "n": (1, 60)},
        lambda a, b, n: sum(phi_a(a, d) * phi_a(b, n // d) for d in divisors(n)),
        lambda a, b, n: sum(
            phi_a(b, gcd(j, n // d))
            for j in range(1, n + 1)
            for d in divisors(gcd(a, n))
        ),
    )

    # --- Liouville's identities and their extensions ----------------------
    add(
        "liouville-l1",
        "sum of phi(d) tau(m/d) over d|m equals sigma(m)",
        "(l1)",
        {"m": (1, 200)},
        lambda m: sum(totient(d) * tau(m // d) for d in divisors(m)),
        lambda m: sigma(m),
    )
    add(
        "liouville-l2",
        "sum of phi(d) sigma[b+1](m/d) over d|m equals m sigma[b](m)",
        "(l2)",
        {"b": (0, 2), "m": (1, 200)},
        lambda b, m: sum(totient(d) * sigma(m // d, b + 1) for d in divisors(m)),
        lambda b, m: m * sigma(m, b),
    )
    add(
        "liouville-l3",
        "sum of phi(d) tau(m^2/d^2) over d|m equals sum of d theta(m/d)",
        "(l3)",
        {"m": (1, 200)},
        lambda m: sum(totient(d) * tau((m // d) ** 2) for d in divisors(m)),
        lambda m: sum(d * theta(m // d) for d in divisors(m)),
    )
    add(
        "lg1",
        "sum of phi_a(d) tau(m/d) over d|m equals sigma_a(m)",
        "(lg1)",
        {"a": (0, 50), "m": (1, 200)},
        lambda a, m: sum(phi_a(a, d) * tau(m // d) for d in divisors(m)),
        lambda a, m: _sigma_ext(a, m),
    )
    add(
        "lg2",
        "sum of phi_a(d) sigma[b+1](m/d) over d|m equals m (u *_a sigma[b])(m)",
        "(lg2)",
        {"a": (0, 50), "b": (0, 2), "m": (1, 200)},
        lambda a, b, m: sum(phi_a(a, d) * sigma(m // d, b + 1) for d in divisors(m)),
        lambda a, b, m: m * sum(sigma(m // d, b) for d in divisors(gcd(a, m))),
    )
    add(
        "lg3",
        "sum of phi_a(d) tau(m^2/d^2) over d|m equals sum of d tau(gcd(a,d)) theta(m/d)",
        "(lg3)",
        {"a": (0, 50), "m": (1, 200)},
        lambda a, m: sum(phi_a(a, d) * tau((m // d) ** 2) for d in divisors(m)),
        lambda a, m: sum(d * tau(gcd(a, d)) * theta(m // d) for d in divisors(m)),
    )
    add(
        "dirichlet-partial",
        "sum of floor(n/k) phi_a(k) equals sum over d|a of d binom(floor(n/d)+1, 2)",
        "(tyu)",
        {"a": (0, 50), "n": (1, 200)},
        lambda a, n: sum((n // k) * phi_a(a, k) for k in range(1, n + 1)),
        lambda a, n: sum(
            d * comb((n // d) + 1, 2)
            for d in (divisors(a) if a else range(1, n + 1))
        ),
    )
    add(
        "perfect-square",
        "sum of phi_a(n) over a = 1..n equals n^2",
        "(nsq)",
        {"n": (1, 200)},
        lambda n: sum(phi_a(a, n) for a in range(1, n + 1)),
        lambda n: n * n,
    )

    # --- structural identities of the a-convolution -----------------------
    add(
        "interassoc",
        "((id *_a mu) * u)(m) equals (id *_a (mu * u))(m) = m [m|a]",
        "(assp) with f=id, g=mu, h=u",
        {"a": (0, 12), "m": (1, 200)},
        lambda a, m: sum(_ck(d, a) for d in divisors(m)),
        lambda a, m: m if a % m == 0 else 0,
    )
    add(
        "kluyver-commute",
        "(phi_a * tau)(m) equals (phi * tau_a)(m)",
        "(ig) with f=phi, g=tau",
        {"a": (0, 50), "m": (1, 200)},
        lambda a, m: sum(phi_a(a, d) * tau(m // d) for d in divisors(m)),
        lambda a, m: sum(totient(d) * _tau_ext(a, m // d) for d in divisors(m)),
    )
    add(
        "mt1",
        "(u * id-hat[a])(m) equals sigma-hat[a](m)",
        "(mt1) with f=u, g=id",
        {"a": (0, 10), "m": (1, 100)},
        lambda a, m: sum(_idhat(d, a) for d in divisors(m)),
        lambda a, m: sum(sigma(m // d) * _ck(d, a) for d in divisors(m)),
    )
    add(
        "mt2",
        "(id *_a mu-hat[b])(m) equals (c_.(a))-hat[b](m)",
        "(mt2) with f=id, g=mu",
        {"a": (0, 6), "b": (0, 6), "m": (1, 60)},
        lambda a, b, m: sum(d * _muhat(m // d, b) for d in divisors(gcd(a, m))),
        lambda a, b, m: sum(_ck(m // d, a) * _ck(d, b) for d in divisors(m)),
    )
    add(
        "pp-consistency",
        "the prime-power formula for phi_a matches the closed divisor sum",
        "(pp) vs (pham)",
        {"a": (0, 50), "m": (2, 200)},
        lambda a, m: phi_a(a, m, method="prime_power"),
        lambda a, m: sum(d * totient(m // d) for d in divisors(gcd(a, m))),
        constraint=lambda a, m: _is_prime_power(m),
    )
    return entries


_MUTATION_NOTE = (
    "mutate='euler-gen' swaps tau for sigma on the rhs (the documented mutant); "
    "any other entry id gets rhs + 1"
)


def registry(mutate: Optional[str] = None) -> list[IdentityCheck]:
    """All identity checks, in fixed order.

    mutate deliberately corrupts one entry's rhs for suite-sensitivity
    testing: 'euler-gen' swaps tau for sigma, any other id gets rhs + 1.
    """
    entries = _build_entries()
    if mutate is None:
        return entries
    by_id = {e.id: i for i, e in enumerate(entries)}
    if mutate not in by_id:
        raise ValueError(f"unknown identity id {mutate!r}")
    i = by_id[mutate]
    entry = entries[i]
    if mutate == "euler-gen":
        corrupted = IdentityCheck(
            entry.id,
            entry.statement + " [MUTANT: tau -> sigma]",
            entry.paper_eq,
            entry.params,
            entry.lhs,
            lambda a, m: sigma(gcd(a, m)) * m,
            entry.constraint,
        )
    else:
        orig = entry.rhs
        corrupted = IdentityCheck(
            entry.id,
            entry.statement + " [MUTANT: rhs + 1]",
            entry.paper_eq,
            entry.params,
            entry.lhs,
            lambda *args, **kw: orig(*args, **kw) + 1,
            entry.constraint,
        )
    entries[i] = corrupted
    return entries


def lookup(id: str) -> IdentityCheck:
    for entry in _build_entries():
        if entry.id == id:
            return entry
    raise ValueError(f"unknown identity id {id!r}")


def verify(
    check: Union[str, IdentityCheck],
    bounds: Optional[Mapping[str, int]] = None,
) -> IdentityReport:
    """Sweep one identity over its parameter box, exactly.

    bounds overrides upper bounds by parameter name; unknown names are
    ignored.  Raises when the raw grid would exceed the hard cap.
    """
    entry = lookup(check) if isinstance(check, str) else check
    ranges = []
    size = 1
    for name, (lo, hi) in entry.params.items():
        if bounds and name in bounds:
            hi = bounds[name]
        ranges.append(range(lo, hi + 1))
        size *= len(ranges[-1])
    if size > GRID_CAP:
        raise ValueError(f"grid of {size} points exceeds cap {GRID_CAP}")
    names = list(entry.params)
    start = time.perf_counter()
    checked = 0
    failures: list[tuple[dict, str, str]] = []
    for point in itertools.product(*ranges):
        kwargs = dict(zip(names, point))
        if entry.constraint is not None and not entry.constraint(**kwargs):
            continue
        lhs = entry.lhs(**kwargs)
        rhs = entry.rhs(**kwargs)
        checked += 1
        if lhs != rhs:
            failures.append((kwargs, _fmt(lhs), _fmt(rhs)))
    return IdentityReport(entry.id, checked, failures, time.perf_counter() - start)


def verify_all(
    bounds: Optional[Mapping[str, int]] = None,
    mutate: Optional[str] = None,
) -> list[IdentityReport]:
    """Run every registry entry with its default (or overridden) bounds."""
    return [verify(entry, bounds) for entry in registry(mutate)]
