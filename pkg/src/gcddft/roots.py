"""Numeric roots of the Lambert polynomials and distances to roots of unity.

Roots come from the companion-matrix eigenvalues (numpy.roots) polished by
Newton steps against the exact integer coefficients; the contract is the
residual bound, checked for every root.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .lambert import PolyZ

DEFAULT_TOL = 1e-10
NEWTON_CAP = 1000


class ConvergenceError(ArithmeticError):
    """Root polishing failed to reach the residual bound."""


@dataclass(frozen=True)
class RootSet:
    """Complex roots of an integer polynomial with per-root residuals.

    distances holds, when filled, each root's minimum distance to the
    reference_order-th roots of unity (or of -1).
    """

    poly_id: str
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    reference_order: Optional[int] = None
    distances: Optional[tuple[float, ...]] = None


def find_roots(p: PolyZ, tol: float = DEFAULT_TOL, poly_id: str = "") -> RootSet:
    """All complex roots of p, each with |p(z)| <= tol * sum(|coeffs|).

    Companion-matrix eigenvalues refined by capped Newton iteration;
    raises ConvergenceError when any residual stays out of bound.
    """
    if p.degree < 1:
        raise ValueError("find_roots requires degree >= 1")
    coeffs = p.coeffs
    bound = tol * float(sum(abs(c) for c in coeffs))
    raw = np.roots(np.array(coeffs[::-1], dtype=float))

    def horner(z: complex) -> tuple[complex, complex]:
        val = 0j
        deriv = 0j
        for c in reversed(coeffs):
            deriv = deriv * z + val
            val = val * z + c
        return val, deriv

    polished = []
    residuals = []
    for z0 in raw:
        z = complex(z0)
        val, deriv = horner(z)
        iterations = 0
        while abs(val) > 0.25 * bound and iterations < NEWTON_CAP:
            if deriv == 0:
                z += 1e-12 * (1.0 + abs(z))
            else:
                z = z - val / deriv
            val, deriv = horner(z)
            iterations += 1
        residual = abs(val)
        if residual > bound:
            raise ConvergenceError(
                f"root residual {residual:.3g} exceeds bound {bound:.3g} "
                f"for {poly_id or 'poly'}"
            )
        polished.append(z)
        residuals.append(residual)
    return RootSet(poly_id, tuple(polished), tuple(residuals))


def unity_distances(rs: RootSet, order: int, target: str = "roots_of_unity") -> RootSet:
    """Fill per-root minimum distances to the order-th roots of the target.

    target 'roots_of_unity' uses exp(2 pi i j / order); 'roots_of_minus_one'
    uses exp(pi i (2j + 1) / order).
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    j = np.arange(order)
    if target == "roots_of_unity":
        refs = np.exp(2j * np.pi * j / order)
    elif target == "roots_of_minus_one":
        refs = np.exp(1j * np.pi * (2 * j + 1) / order)
    else:
        raise ValueError(f"unknown target {target!r}")
    roots = np.array(rs.roots)
    dists = np.abs(roots[:, None] - refs[None, :]).min(axis=1)
    return replace(rs, reference_order=order, distances=tuple(float(d) for d in dists))
