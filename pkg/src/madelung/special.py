"""Real-line special functions: Gamma, zeta, eta, beta and K_nu.

Everything works on 64-bit floats.  The Dirichlet series are summed with the
Cohen-Villegas-Zagier acceleration for alternating series and continued to
the left half-line through their functional equations.  K_nu is evaluated
by trapezoidal quadrature of

    K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt

for orders in [0, 2) and carried to higher orders by the upward recurrence.
"""

import math
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError

__all__ = [
    "gamma",
    "reciprocal_gamma",
    "zeta",
    "eta",
    "beta",
    "bessel_k",
    "is_nonpositive_integer",
]

POLE_TOL = 1e-12
LN2 = math.log(2.0)

# Within this distance of s = 0 zeta and eta are taken from their tangent
# lines; the quadratic terms are below 1e-18 and the reflection formulas
# would divide by underflowing quantities.
NEAR_ZERO = 1e-9
ZETA_PRIME_0 = -0.5 * math.log(2.0 * math.pi)
ETA_PRIME_0 = 0.5 * math.log(math.pi / 2.0)

# Number of terms in the accelerated alternating sums; the error is bounded
# by 2 / (3 + sqrt 8)**n times the first term, i.e. below 1e-22 here.
_CVZ_TERMS = 30


def _cvz_weights(n):
    # exact rational recursion except for d, so each weight is rounded once
    d = (Fraction(3) + Fraction(math.sqrt(8.0))) ** n
    d = (d + 1 / d) / 2
    b = Fraction(-1)
    c = -d
    w = np.empty(n)
    for k in range(n):
        c = b - c
        w[k] = float(c / d)
        b = (k + n) * (k - n) * b / ((k + Fraction(1, 2)) * (k + 1))
    return w


_CVZ_W = _cvz_weights(_CVZ_TERMS)
_CVZ_K = np.arange(_CVZ_TERMS, dtype=float)


def _alternating_sum(terms):
    """Sum_{k>=0} (-1)**k a_k for a completely monotone sequence a_k."""
    return math.fsum(_CVZ_W * terms)


def _check_finite(*args):
    for a in args:
        if not math.isfinite(a):
            raise DomainError(f"argument must be finite, got {a!r}")


def is_nonpositive_integer(x, tol=POLE_TOL):
    """True when x lies within tol of 0, -1, -2, ..."""
    return x < tol and abs(x - round(x)) < tol


def _sin_half_pi(u):
    # sin(pi*u/2), exact at integers and without the loss that comes from
    # forming pi*u/2 for large or near-integer u.
    n = round(u)
    r = u - n
    base = math.sin(math.pi * r / 2.0)
    if r == 0.0:
        return float((0, 1, 0, -1)[n % 4])
    # sin(pi*(n + r)/2) expanded by n mod 4
    cosr = math.cos(math.pi * r / 2.0)
    return (base, cosr, -base, -cosr)[n % 4]


def gamma(x):
    """Gamma function on the real line.

    Raises PoleError at 0, -1, -2, ...
    """
    _check_finite(x)
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    return math.gamma(x)


def reciprocal_gamma(x):
    """1/Gamma(x), entire; exactly 0 at the non-positive integers."""
    _check_finite(x)
    if is_nonpositive_integer(x):
        return 0.0
    if x > 171.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def _eta_series(s):
    return _alternating_sum((_CVZ_K + 1.0) ** (-s))


def _beta_series(s):
    return _alternating_sum((2.0 * _CVZ_K + 1.0) ** (-s))


def zeta(s):
    """Riemann zeta function for real s != 1.

    For s > 0 the value comes from the accelerated eta series divided by
    1 - 2**(1-s) (formed with expm1, so no accuracy is lost near s = 1).
    For s < 0 the functional equation

        zeta(-u) = -2 (2 pi)**(-u-1) sin(pi u / 2) Gamma(u+1) zeta(u+1)

    is used.
    """
    _check_finite(s)
    if abs(s - 1.0) < POLE_TOL:
        raise PoleError("zeta has a pole at s = 1")
    if abs(s) < NEAR_ZERO:
        return -0.5 + ZETA_PRIME_0 * s
    if s > 0.0:
        return _eta_series(s) / -math.expm1((1.0 - s) * LN2)
    u = -s
    sn = _sin_half_pi(u)
    if sn == 0.0:
        return 0.0
    return -2.0 * (2.0 * math.pi) ** (-u - 1.0) * sn * math.gamma(u + 1.0) * _zeta_1p(u)


def _zeta_1p(u):
    # zeta(1 + u) for u > 0 without rounding 1 + u first
    return _eta_series(1.0 + u) / -math.expm1(-u * LN2)


def _eta_reflected(s):
    # eta(-u) = u (2 - 2**-u) pi**(-u-1) sin(pi u/2) Gamma(u) zeta(u+1), u = -s.
    # Valid for any s that keeps u away from 0, -1, -2, ...
    u = -s
    return (
        (2.0 - 2.0 ** (-u))
        * math.pi ** (-u - 1.0)
        * _sin_half_pi(u)
        * (u * math.gamma(u))
        * zeta(u + 1.0)
    )


def eta(s):
    """Dirichlet eta function, entire on the real line."""
    _check_finite(s)
    if s == 1.0:
        return LN2
    if abs(s) < NEAR_ZERO:
        return 0.5 + ETA_PRIME_0 * s
    if s > 0.0:
        return _eta_series(s)
    u = -s
    if u == round(u) and round(u) % 2 == 0:
        return 0.0
    # u*Gamma(u) = Gamma(u+1) keeps the formula regular as u -> 0
    return (
        (2.0 - 2.0 ** (-u))
        * math.pi ** (-u - 1.0)
        * _sin_half_pi(u)
        * math.gamma(u + 1.0)
        * _zeta_1p(u)
    )


def beta(s):
    """Dirichlet beta function, entire on the real line."""
    _check_finite(s)
    if s > 0.0:
        return _beta_series(s)
    u = 1.0 - s
    sn = _sin_half_pi(u)
    if sn == 0.0:
        return 0.0
    return (math.pi / 2.0) ** (-u) * sn * math.gamma(u) * _beta_series(u)


def _k_quadrature(nu, x):
    """K_nu(x) for 0 <= nu < 2 by the trapezoidal rule in t.

    The integrand is even and analytic in a strip, so the trapezoidal rule
    on [0, T] converges exponentially in 1/h.  The step shrinks like
    x**-1/2 to resolve the peak at t = 0 for large x.
    """
    h = min(0.15, 0.5 / math.sqrt(x))
    # cut where x (cosh T - 1) - nu T exceeds ~45, i.e. terms below 1e-19
    t_max = math.acosh(1.0 + 45.0 / x)
    for _ in range(3):
        t_max = math.acosh(1.0 + (45.0 + nu * t_max) / x)
    n = int(math.ceil(t_max / h)) + 1
    t = h * np.arange(n + 1)
    sh = np.sinh(0.5 * t)
    f = np.exp(-2.0 * x * sh * sh) * np.cosh(nu * t)
    f[0] *= 0.5
    return h * math.fsum(f) * math.exp(-x)


def bessel_k(nu, x, x_lo=0.0):
    """Modified Bessel function of the second kind K_nu(x), real nu, x > 0.

    Uses K_{-nu} = K_nu, then quadrature for the two seed orders
    frac(|nu|) and frac(|nu|) + 1 and the recurrence

        K_{v+1}(x) = (2 v / x) K_v(x) + K_{v-1}(x)

    upwards, which is stable for K.  Relative error is a few ulp for
    x >= 0.1; smaller x is untested.

    K_nu falls like exp(-x), so rounding x to a double already costs about
    x ulp.  When the argument is known more precisely, pass its remainder
    as ``x_lo`` (argument = x + x_lo) and a first-order correction is made.
    """
    _check_finite(nu, x, x_lo)
    if x <= 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x!r}")
    nu = abs(nu)
    n = int(math.floor(nu))
    a = nu - n
    k0 = _k_quadrature(a, x)
    if n == 0 and x_lo == 0.0:
        return k0
    k1 = _k_quadrature(a + 1.0, x)
    for j in range(n):
        k0, k1 = k1, 2.0 * (a + j + 1.0) / x * k1 + k0
    # now k0 = K_nu, k1 = K_{nu+1};  K_nu' = (nu / x) K_nu - K_{nu+1}
    if x_lo == 0.0:
        return k0
    return k0 + x_lo * (nu / x * k0 - k1)
