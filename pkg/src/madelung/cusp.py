"""Truncated q-series, sums-of-squares identities and the 12-dimensional cusp form.

The alternating theta series sum_j (-1)^j q^(j^2) raised to the power 2k
generates (-1)^m r_2k(m).  For 2k <= 8 it equals a combination of Lambert
series (Jacobi); for 2k = 10 and 12 a cusp form must be added (Glaisher):

    E_10(q) = q prod_j (1 - q^2j)^14 / (1 - q^j)^4
    E_12(q) = q prod_j (1 - q^2j)^12 = sum_n e12(n) q^n

All series arithmetic is on exact integers.
"""

import csv
import math
import threading
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import BoundsError, DomainError
from .special import eta

__all__ = [
    "QSeries",
    "CuspCoefficients",
    "chi4",
    "divisor_count",
    "theta_alternating",
    "jacobi_rhs",
    "verify_jacobi",
    "glaisher_rhs",
    "verify_glaisher",
    "e10_series",
    "e12_series",
    "e12",
    "cusp_coefficients",
    "m12_cusp",
    "m12_dirichlet_partial",
    "write_e12_csv",
]


class QSeries:
    """Power series in q with exact integer coefficients, truncated at q^order.

    Arithmetic between series of different order truncates to the smaller.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def monomial(cls, power, order, coeff=1):
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c, order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = " + ".join(f"{c}q^{i}" for i, c in enumerate(self.coeffs[:6]) if c)
        return f"QSeries({head or '0'} + O(q^{self.order + 1}))"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int):
            return QSeries([other], self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order) + 1
        return QSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([other * c for c in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        M = min(self.order, other.order)
        out = [0] * (M + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs[: M + 1]):
            if a:
                for j in range(M + 1 - i):
                    out[i + j] += a * b[j]
        return QSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are supported")
        result = QSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def times_binomial(self, k, e=1):
        """Multiply by (1 - q^k)^e; negative e expands the geometric series."""
        c = list(self.coeffs)
        M = len(c) - 1
        if e >= 0:
            for _ in range(e):
                for i in range(M, k - 1, -1):
                    c[i] -= c[i - k]
        else:
            for _ in range(-e):
                for i in range(k, M + 1):
                    c[i] += c[i - k]
        return QSeries(c)


def chi4(n):
    """Non-principal character mod 4: +1, 0, -1, 0 for n = 1, 2, 3, 4 mod 4."""
    return (0, 1, 0, -1)[n % 4]


def divisor_count(n):
    """Number of positive divisors of n, by trial division."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            count += 1 if d * d == n else 2
        d += 1
    return count


def theta_alternating(M):
    """sum_{j in Z} (-1)^j q^(j^2) through q^M."""
    if M < 1:
        raise DomainError("order must be >= 1")
    c = [0] * (M + 1)
    c[0] = 1
    j = 1
    while j * j <= M:
        c[j * j] = 2 * (-1) ** j
        j += 1
    return QSeries(c)


# --- Lambert series ----------------------------------------------------------
# Each helper returns sum_{j>=1} w(j) * (expansion) through q^M.


def _lambert_plus(w, M):
    # w(j) q^j / (1 + q^j) = w(j) sum_k (-1)^(k-1) q^(jk)
    c = [0] * (M + 1)
    for j in range(1, M + 1):
        wj = w(j)
        if wj:
            for k, n in enumerate(range(j, M + 1, j)):
                c[n] += wj if k % 2 == 0 else -wj
    return QSeries(c)


def _lambert_minus(w, M):
    # w(j) q^j / (1 - q^j) = w(j) sum_k q^(jk)
    c = [0] * (M + 1)
    for j in range(1, M + 1):
        wj = w(j)
        if wj:
            for n in range(j, M + 1, j):
                c[n] += wj
    return QSeries(c)


def _lambert_odd(w, M):
    # w(j) q^j / (1 + q^(2j)) = w(j) sum_k (-1)^(k-1) q^(j(2k-1))
    c = [0] * (M + 1)
    for j in range(1, M + 1):
        wj = w(j)
        if wj:
            for k, n in enumerate(range(j, M + 1, 2 * j)):
                c[n] += wj if k % 2 == 0 else -wj
    return QSeries(c)


def jacobi_rhs(k, M):
    """Lambert-series side of Jacobi's identity for 2k squares, k = 1..4."""
    one = QSeries.one(M)
    if k == 1:
        return one - 4 * _lambert_plus(chi4, M)
    if k == 2:
        return one + 8 * _lambert_plus(lambda j: (-1) ** j * j, M)
    if k == 3:
        return (
            one
            + 4 * _lambert_plus(lambda j: chi4(j) * j * j, M)
            + 16 * _lambert_odd(lambda j: (-1) ** j * j * j, M)
        )
    if k == 4:
        return one + 16 * _lambert_minus(lambda j: (-1) ** j * j**3, M)
    raise DomainError(f"Jacobi identities cover k = 1..4, got {k}")


def verify_jacobi(k, M):
    """Coefficient-wise check of (sum (-1)^j q^(j^2))^(2k) against Jacobi's formula."""
    if M > 200:
        raise BoundsError("identity checks are limited to order 200")
    return theta_alternating(M) ** (2 * k) == jacobi_rhs(k, M)


def e12_series(M):
    """E_12(q) = q prod_j (1 - q^2j)^12 through q^M."""
    p = QSeries.monomial(1, M)
    for j in range(1, M // 2 + 1):
        p = p.times_binomial(2 * j, 12)
    return p


def e10_series(M):
    """E_10(q) = q prod_j (1 - q^2j)^14 / (1 - q^j)^4 through q^M."""
    p = QSeries.monomial(1, M)
    for j in range(1, M + 1):
        if 2 * j <= M:
            p = p.times_binomial(2 * j, 14)
        p = p.times_binomial(j, -4)
    return p


def glaisher_rhs(k, M, include_cusp=True):
    """Right side of Glaisher's identity for 2k = 10 or 12 squares.

    For 10 squares the rational coefficients are cleared, so the result is
    5 times the right side; compare it with 5 theta^10.
    """
    one = QSeries.one(M)
    if k == 5:
        rhs = (
            5 * one
            - 4 * _lambert_plus(lambda j: chi4(j) * j**4, M)
            + 64 * _lambert_odd(lambda j: (-1) ** j * j**4, M)
        )
        if include_cusp:
            rhs = rhs - 32 * e10_series(M)
        return rhs
    if k == 6:
        rhs = one + 8 * _lambert_plus(lambda j: (-1) ** j * j**5, M)
        if include_cusp:
            rhs = rhs - 16 * e12_series(M)
        return rhs
    raise DomainError(f"Glaisher identities cover k = 5, 6; got {k}")


def verify_glaisher(k, M, include_cusp=True):
    """Coefficient-wise check of the 10- or 12-squares identity."""
    if M > 200:
        raise BoundsError("identity checks are limited to order 200")
    lhs = theta_alternating(M) ** (2 * k)
    if k == 5:
        lhs = 5 * lhs
    return lhs == glaisher_rhs(k, M, include_cusp)


@dataclass(frozen=True)
class CuspCoefficients:
    """e12(n) and e10(n) for n = 1..order (index 0 holds the q^0 term, 0)."""

    order: int
    e12: tuple
    e10: tuple


_E12_LOCK = threading.Lock()
_E12_TABLE = [0, 1]


def _e12_table(M):
    global _E12_TABLE
    with _E12_LOCK:
        if len(_E12_TABLE) <= M:
            order = max(M, 2 * (len(_E12_TABLE) - 1))
            _E12_TABLE = e12_series(order).coeffs
        return _E12_TABLE


def e12(n, order=None):
    """Coefficient of q^n in E_12(q).

    With ``order`` given, n beyond it raises BoundsError; otherwise the
    table grows as needed.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if order is not None and n > order:
        raise BoundsError(f"n={n} beyond table order {order}")
    return _e12_table(n)[n]


def cusp_coefficients(M):
    return CuspCoefficients(M, tuple(_e12_table(M)[: M + 1]), tuple(e10_series(M).coeffs))


# --- M_12 ---------------------------------------------------------------------

M12_TOL = 1e-14


def m12_dirichlet_partial(s, n_max):
    """-8 eta(s-5) eta(s) - 16 sum_{n<=n_max} e12(n) n^-s, the plain partial sum."""
    table = _e12_table(n_max)
    d = math.fsum(table[n] * n ** (-s) for n in range(1, n_max + 1) if table[n])
    return -8.0 * eta(s - 5.0) * eta(s) - 16.0 * d


@lru_cache(maxsize=4096)
def _smoothed_weight(s, n):
    # n^-s Q(s, n pi) + pi^(2s-6) n^(s-6) Gamma(6-s, n pi) / Gamma(s)
    s = mpmath.mpf(s)
    x = n * mpmath.pi
    w = n ** (-s) * mpmath.gammainc(s, x, regularized=True)
    w += mpmath.pi ** (2 * s - 6) * n ** (s - 6) * mpmath.gammainc(6 - s, x) / mpmath.gamma(s)
    return float(w)


def m12_cusp(s):
    """M_12(s) = -8 eta(s-5) eta(s) - 16 sum_n e12(n) n^-s for s > 7/2.

    E_12(e^-u) satisfies E_12(e^(-pi^2/u)) = (u/pi)^6 E_12(e^-u).  Splitting
    the Mellin integral of the Dirichlet series at the fixed point u = pi
    gives the same value as

        sum_n e12(n) [n^-s Q(s, n pi) + pi^(2s-6) n^(s-6) Gamma(6-s, n pi) / Gamma(s)]

    whose weights fall off like exp(-pi n).  Terms are added until the
    Deligne bound |e12(n)| <= n^(5/2) d(n) puts the rest below 1e-14.
    """
    if not s > 3.5:
        raise DomainError(f"m12_cusp needs s > 7/2, got {s!r}")
    s = float(s)
    decay = 1.0 - math.exp(-math.pi)
    total = []
    n = 1
    while True:
        c = e12(n)
        if c:
            total.append(c * _smoothed_weight(s, n))
        n += 1
        if n > s / math.pi:
            # weights past the peak shrink at least geometrically
            bound = 16.0 * n**2.5 * divisor_count(n) * abs(_smoothed_weight(s, n)) / decay
            if bound < M12_TOL:
                break
    return -8.0 * eta(s - 5.0) * eta(s) - 16.0 * math.fsum(total)


def write_e12_csv(fh, M):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "e12(n)"])
    table = _e12_table(M)
    for n in range(1, M + 1):
        w.writerow([n, table[n]])
