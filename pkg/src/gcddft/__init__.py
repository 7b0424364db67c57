"""Exact arithmetic for the discrete Fourier transform of the gcd.

Ramanujan sums by three routes, the gcd-DFT phi_a by four, the
a-convolution algebra, a registry of generalized totient identities with
an exact verifier, and the Lambert-series polynomials with their roots.
"""

from .arith import (
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
from .convolve import (
    ID,
    MU,
    PHI,
    SIGMA,
    TAU,
    THETA,
    U,
    ArithFn,
    a_convolve,
    dirichlet,
    id_pow,
    kluyver_extend,
    mask,
    sigma_pow,
)
from .dft import (
    DftValue,
    ResidualError,
    aconv_fourier_check,
    count_factorizations,
    dft_gcd,
    dft_gcd_direct,
    gcd_fn_coeffs,
    id_a,
    phi_a,
    pillai,
    ramanujan,
)
from .identities import IdentityCheck, IdentityReport, registry, verify, verify_all
from .lambert import PolyZ, h_fn, kappa, lambert_check, poly_p, poly_q, poly_q_from_p, tent
from .roots import ConvergenceError, RootSet, find_roots, unity_distances

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "alpha",
    "classical",
    "divisors",
    "factorize",
    "is_prime",
    "mobius",
    "multiplicative_eval",
    "sigma",
    "tau",
    "theta",
    "totient",
    "ID",
    "MU",
    "PHI",
    "SIGMA",
    "TAU",
    "THETA",
    "U",
    "ArithFn",
    "a_convolve",
    "dirichlet",
    "id_pow",
    "kluyver_extend",
    "mask",
    "sigma_pow",
    "DftValue",
    "ResidualError",
    "aconv_fourier_check",
    "count_factorizations",
    "dft_gcd",
    "dft_gcd_direct",
    "gcd_fn_coeffs",
    "id_a",
    "phi_a",
    "pillai",
    "ramanujan",
    "IdentityCheck",
    "IdentityReport",
    "registry",
    "verify",
    "verify_all",
    "PolyZ",
    "h_fn",
    "kappa",
    "lambert_check",
    "poly_p",
    "poly_q",
    "poly_q_from_p",
    "tent",
    "ConvergenceError",
    "RootSet",
    "find_roots",
    "unity_distances",
]
