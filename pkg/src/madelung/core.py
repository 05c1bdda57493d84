"""N-dimensional Madelung constants from Bessel-function expansions.

Two routes to M_N(s) are provided, both taking the *target* dimension N.

direct
    M_N(s) = -2 eta(2s) + sum_{m>=1} (-1)^m r_{N-1}(m) c_s(m)

    with the dimension-free coefficients

    c_s(m) = 4 pi^s / Gamma(s) * m^((1-2s)/4)
             * sum_{k>=1} (k - 1/2)^(s-1/2) K_{s-1/2}(pi (2k-1) sqrt m).

    The m-series oscillates; adjacent terms are paired and the pairs are
    accumulated from the tail towards m = 1.

recursive
    M_{n+1}(s) = M_n(s) + sum_{m>=0} r_n^odd(8m+n) c_{s,n}(m),  M_1 = -2 eta(2s)

    c_{s,n}(m) = 4 pi^s / Gamma(s)
                 * sum_{k>=1} (-1)^k ((8m+n)/(4k^2))^((2s-n)/4) K_{s-n/2}(pi k sqrt(8m+n)).

    All increments share one sign for s > 0, so nothing cancels; this is
    the default.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ConvergenceError, DomainError
from .special import bessel_k, eta, reciprocal_gamma
from .squares import odd_squares_row, squares_row

__all__ = [
    "MadelungQuery",
    "MadelungValue",
    "ConvergenceTrace",
    "coefficient_direct",
    "coefficient_half_integral",
    "coefficient_recursive",
    "heuristic_m_max",
    "madelung",
    "madelung_direct",
    "madelung_recursive",
    "madelung_ladder",
    "convergence_trace",
]

METHODS = ("direct", "recursive", "auto")

K_MAX = 200
K_REL_CUTOFF = 1e-20


@dataclass(frozen=True)
class MadelungQuery:
    dimension: int
    exponent: float
    target_remainder: float = 1e-14
    method: str = "auto"

    def __post_init__(self):
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dimension!r}")
        if not math.isfinite(self.exponent):
            raise DomainError(f"exponent must be finite, got {self.exponent!r}")
        if not self.target_remainder > 0:
            raise DomainError("target_remainder must be positive")
        if self.method not in METHODS:
            raise DomainError(f"method must be one of {METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class MadelungValue:
    value: float
    m_max_used: int
    remainder_estimate: float
    method_used: str


@dataclass(frozen=True)
class ConvergenceTrace:
    """Raw series terms behind a Madelung evaluation.

    ``terms_a[i]`` is a(i+1) of the direct series, ``terms_paired[j]`` is
    b(2j+2) = a(2j+2) + a(2j+1), and ``terms_d[m]`` is
    d(m) = r_N^odd(8m+N) c_{s,N}(m), the step from N to N+1 dimensions.
    """

    dimension: int
    exponent: float
    terms_a: tuple = field(default=())
    terms_paired: tuple = field(default=())
    terms_d: tuple = field(default=())


# --- coefficients -----------------------------------------------------------


def _truncated_k_sum(term):
    total = 0.0
    for k in range(1, K_MAX + 1):
        t = term(k)
        total += t
        if abs(t) < K_REL_CUTOFF * abs(total):
            break
    return total


# math.pi + _PI_LO is pi to about 32 digits
_PI_LO = 1.2246467991473532e-16


def _pi_root(c, j):
    """c pi sqrt(j) as an unevaluated sum hi + lo of two doubles."""
    r = math.sqrt(j)
    r_lo = float((j - Fraction(r) ** 2) / (2 * Fraction(r)))
    prod = c * Fraction(math.pi) * Fraction(r)
    hi = float(prod)
    lo = float(prod - Fraction(hi)) + c * (_PI_LO * r + math.pi * r_lo)
    return hi, lo


def _pi_pow(s):
    # pi**s corrected for the rounding of pi, which matters at large s
    return math.pi**s * (1.0 + s * _PI_LO / math.pi)


@lru_cache(maxsize=None)
def coefficient_direct(s, m):
    """c_s(m), the dimension-independent weight of r_{N-1}(m) in the direct series.

    Exactly zero at s = 0, -1, -2, ... where 1/Gamma(s) vanishes.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    rg = reciprocal_gamma(s)
    if rg == 0.0:
        return 0.0
    nu = s - 0.5

    def term(k):
        return (k - 0.5) ** nu * bessel_k(nu, *_pi_root(2 * k - 1, m))

    inner = _truncated_k_sum(term)
    return 4.0 * _pi_pow(s) * rg * m ** ((1.0 - 2.0 * s) / 4.0) * inner


def coefficient_half_integral(m):
    """c_{1/2}(m) = 2 int_0^inf dt / sinh(pi sqrt(m) cosh t).

    Independent of the Bessel routine; used to cross-check
    ``coefficient_direct(0.5, m)``.
    """
    import numpy as np

    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    a, a_lo = _pi_root(1, m)
    # 1/sinh(a cosh t) = 2 e^{-a} e^{-a(cosh t - 1)} / (1 - e^{-2 a cosh t})
    h = min(0.15, 0.5 / math.sqrt(a))
    t_max = math.acosh(1.0 + 45.0 / a)
    t = h * np.arange(int(math.ceil(t_max / h)) + 2)
    sh = np.sinh(0.5 * t)
    f = np.exp(-2.0 * a * sh * sh) / -np.expm1(-2.0 * a * np.cosh(t))
    f[0] *= 0.5
    ea = math.exp(-a)
    # e^{-(a + a_lo)} to first order; the rest of the integrand is insensitive to a_lo
    ea -= a_lo * ea
    return 4.0 * ea * h * math.fsum(f)


@lru_cache(maxsize=None)
def coefficient_recursive(s, N, m):
    """c_{s,N}(m), the weight of r_N^odd(8m+N) in the step from N to N+1 dimensions."""
    if N < 1 or m < 0:
        raise DomainError(f"need N >= 1 and m >= 0, got N={N}, m={m}")
    rg = reciprocal_gamma(s)
    if rg == 0.0:
        return 0.0
    j = 8 * m + N
    nu = s - N / 2.0
    p = (2.0 * s - N) / 4.0

    def term(k):
        return (-1) ** k * (j / (4.0 * k * k)) ** p * bessel_k(nu, *_pi_root(k, j))

    inner = _truncated_k_sum(term)
    return 4.0 * _pi_pow(s) * rg * inner


# --- direct series ----------------------------------------------------------


HEURISTIC_TOL = 1e-14


def heuristic_m_max(N):
    """nint(1.16 N^2 + 11.5 N + 73), an upper estimate of the m needed at 1e-14."""
    return int(math.floor(1.16 * N * N + 11.5 * N + 73 + 0.5))


def _direct_terms(s, n, m_hi):
    r = squares_row(n, m_hi)
    # exact counts meet floats only here, multiplied by the small coefficient
    return [(-1) ** m * (float(r[m]) * coefficient_direct(s, m)) for m in range(1, m_hi + 1)]


def _pair(a):
    return [a[2 * j] + a[2 * j + 1] for j in range(len(a) // 2)]


# Pairs can nearly cancel when r_{N-1} alternates in size between odd and
# even m, so the remainder is judged on several trailing pairs, not one.
REMAINDER_WINDOW = 4


def _direct_remainder(b):
    nonzero = [abs(x) for x in b if x != 0.0]
    return max(nonzero[-REMAINDER_WINDOW:], default=0.0)


def _direct_series(q):
    N, s, tol = q.dimension, q.exponent, q.target_remainder
    n = N - 1
    # terms fall like exp(-pi sqrt m), so the m needed scales with log(tol)^2
    scale = (math.log(tol) / math.log(HEURISTIC_TOL)) ** 2
    limit = 10 * heuristic_m_max(N)
    start = max(2, int(math.ceil(heuristic_m_max(N) * scale)))
    m_hi = start + start % 2
    while True:
        if m_hi > limit:
            raise ConvergenceError(
                f"direct series for N={N}, s={s} did not reach {tol:g} by m={limit}"
            )
        a = _direct_terms(s, n, m_hi)
        b = _pair(a)
        if _direct_remainder(b) < tol:
            return a, b
        m_hi += max(2, 2 * (m_hi // 20))


def madelung_direct(q):
    """M_N(s) from the direct Bessel series, summed backwards in pairs."""
    s = q.exponent
    base = -2.0 * eta(2.0 * s)
    if q.dimension == 1:
        return MadelungValue(base, 0, 0.0, "direct")
    a, b = _direct_series(q)
    total = 0.0
    for x in reversed(b):
        total += x
    return MadelungValue(base + total, len(a), _direct_remainder(b), "direct")


# --- recursive series -------------------------------------------------------


def _step_terms(s, n, tol):
    """d(m) = r_n^odd(8m+n) c_{s,n}(m) for m = 0.. until past the peak and below tol."""
    if reciprocal_gamma(s) == 0.0:
        return [0.0]
    m_cap = 10 * heuristic_m_max(n + 1)
    order = 8 * 64 + n
    row = odd_squares_row(n, order)
    d = []
    peak = 0.0
    m = 0
    while True:
        j = 8 * m + n
        if j > order:
            order = 2 * order
            row = odd_squares_row(n, order)
        r = row[j]
        t = float(r) * coefficient_recursive(s, n, m) if r else 0.0
        d.append(t)
        mag = abs(t)
        if t != 0.0 and mag < tol and mag < peak:
            return d
        peak = max(peak, mag)
        m += 1
        if m > m_cap:
            raise ConvergenceError(
                f"recursion step {n}->{n + 1} for s={s} did not reach {tol:g} by m={m_cap}"
            )


def _backward_sum(terms):
    total = 0.0
    for t in reversed(terms):
        total += t
    return total


@lru_cache(maxsize=256)
def _ladder(s, N, tol):
    m1 = -2.0 * eta(2.0 * s)
    out = [MadelungValue(m1, 0, 0.0, "recursive")]
    value = m1
    m_used = 0
    rem = 0.0
    per_dim = tol / N
    for n in range(1, N):
        d = _step_terms(s, n, per_dim)
        value += _backward_sum(d)
        m_used = max(m_used, len(d) - 1)
        rem += abs(d[-1])
        out.append(MadelungValue(value, m_used, rem, "recursive"))
    return tuple(out)


def madelung_ladder(N, s, tol=1e-14):
    """M_1(s), ..., M_N(s) from one pass of the dimension recursion.

    Every step uses the per-dimension budget tol/N, so all entries meet tol.
    """
    MadelungQuery(N, s, tol, "recursive")
    return list(_ladder(float(s), int(N), float(tol)))


def madelung_recursive(q):
    """M_N(s) by climbing the dimension recursion from M_1 = -2 eta(2s)."""
    return _ladder(float(q.exponent), int(q.dimension), float(q.target_remainder))[-1]


def madelung(N, s, tol=1e-14, method="auto"):
    """Madelung constant M_N(s) of the simple cubic lattice in N dimensions.

    Parameters
    ----------
    N : int
        Dimension, N >= 1.
    s : float
        Exponent of the lattice sum; s = 1/2 is the Coulomb case.  Any real
        value is accepted through analytic continuation.
    tol : float
        Target for the remainder estimate of the truncated series.
    method : {"auto", "recursive", "direct"}
        ``auto`` means ``recursive``.

    Returns
    -------
    MadelungValue
    """
    q = MadelungQuery(N, s, tol, method)
    if method == "direct":
        return madelung_direct(q)
    return madelung_recursive(q)


def convergence_trace(q):
    """Unsummed terms of both series for query ``q``."""
    s, N = q.exponent, q.dimension
    a = b = ()
    if N > 1:
        a, b = _direct_series(q)
    d = _step_terms(s, N, q.target_remainder)
    return ConvergenceTrace(N, s, tuple(a), tuple(b), tuple(d))
