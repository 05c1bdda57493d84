"""Reference values for Madelung constants from closed formulas.

These are independent of the Bessel expansions in :mod:`madelung.core` and
serve as oracles for them.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import (
    _zeta_1p,
    beta,
    eta,
    gamma,
    is_nonpositive_integer,
    zeta,
)
from .squares import squares_row

__all__ = [
    "ClosedFormResult",
    "FORMULA_IDS",
    "zucker",
    "tyagi_m3",
    "benson_mackenzie_m3",
    "hautot_m3",
    "neighbor_limit",
    "critical_value",
    "closed_form",
]

FORMULA_IDS = (
    "zucker1",
    "zucker2",
    "zucker4",
    "zucker6",
    "zucker8",
    "tyagi",
    "benson",
    "hautot",
    "limit",
    "critical",
)

TERM_CUTOFF = 1e-18
SHELL_CUTOFF = 1e-16
M8_LIMIT_STEP = 1e-6
# below this distance from s = 1 the M_8 product is formed from s - 1 directly
M8_NEAR_ONE = 1e-3


@dataclass(frozen=True)
class ClosedFormResult:
    value: float
    formula_id: str

    def __post_init__(self):
        if self.formula_id not in FORMULA_IDS:
            raise DomainError(f"unknown formula id {self.formula_id!r}")


def _m8_offset(u):
    # -16 eta(-2 + u) zeta(1 + u), built from u so the zero of eta and the
    # pole of zeta are resolved without rounding s - 3 or s - 1.
    v = 2.0 - u
    eta_shifted = (
        (2.0 - 2.0 ** (-v))
        * math.pi ** (-v - 1.0)
        * math.sin(math.pi * u / 2.0)
        * math.gamma(v + 1.0)
        * zeta(v + 1.0)
    )
    return -16.0 * eta_shifted * _zeta_1p(u)


def _m8_at_one():
    def sym(h):
        return 0.5 * (_m8_offset(h) + _m8_offset(-h))

    h = M8_LIMIT_STEP
    return (4.0 * sym(h) - sym(2.0 * h)) / 3.0


def zucker(N, s):
    """Closed form of M_N(s) for N in {1, 2, 4, 6, 8}.

    M_1 = -2 eta(2s)
    M_2 = -4 beta(s) eta(s)
    M_4 = -8 eta(s-1) eta(s)
    M_6 = -16 eta(s-2) beta(s) + 4 eta(s) beta(s-2)
    M_8 = -16 eta(s-3) zeta(s)

    M_8 is finite at s = 1, where it is taken as a symmetric limit.
    """
    if N == 1:
        return -2.0 * eta(2.0 * s)
    if N == 2:
        return -4.0 * beta(s) * eta(s)
    if N == 4:
        return -8.0 * eta(s - 1.0) * eta(s)
    if N == 6:
        return -16.0 * eta(s - 2.0) * beta(s) + 4.0 * eta(s) * beta(s - 2.0)
    if N == 8:
        u = s - 1.0
        if u == 0.0:
            return _m8_at_one()
        if abs(u) < M8_NEAR_ONE:
            return _m8_offset(u)
        return -16.0 * eta(s - 3.0) * zeta(s)
    raise DomainError(f"no closed form for N={N}; supported: 1, 2, 4, 6, 8")


def tyagi_m3(include_tail=True):
    """M_3(1/2) from Tyagi's formula.

    The exponentially small lattice sum at the end changes only the 11th
    significant digit; ``include_tail=False`` drops it.
    """
    head = (
        -1.0 / 8.0
        - math.log(2.0) / (4.0 * math.pi)
        - 4.0 * math.pi / 3.0
        + 1.0 / (2.0 * math.sqrt(2.0))
        + gamma(1.0 / 8.0) * gamma(3.0 / 8.0) / (math.pi**1.5 * math.sqrt(2.0))
    )
    if not include_tail:
        return head
    tail = 0.0
    k_hi = 16
    r3 = squares_row(3, k_hi)
    for k in range(1, k_hi + 1):
        term = (-1) ** k * r3[k] / (math.sqrt(k) * math.expm1(8.0 * math.pi * math.sqrt(k)))
        tail += term
        if r3[k] and abs(term) < TERM_CUTOFF:
            break
    return head - 2.0 * tail


def _sech2(x):
    # sech^2 x = 4 e^{-2x} / (1 + e^{-2x})^2, safe for large x
    e = math.exp(-2.0 * x)
    return 4.0 * e / (1.0 + e) ** 2


def benson_mackenzie_m3():
    """M_3(1/2) = -12 pi sum_{i,j>=1} sech^2(pi/2 sqrt((2i-1)^2 + (2j-1)^2))."""
    total = 0.0
    n = 1
    while True:
        # shell: pairs of odd numbers with max(a, b) = a_n
        a = 2 * n - 1
        shell = 0.0
        for j in range(1, n + 1):
            b = 2 * j - 1
            t = _sech2(0.5 * math.pi * math.hypot(a, b))
            shell += t if b == a else 2.0 * t
        total += shell
        if shell < TERM_CUTOFF:
            break
        n += 1
    return -12.0 * math.pi * total


def hautot_m3():
    """M_3(1/2) = -pi/2 + 3 sum'_{i,j} (-1)^i cosech(pi sqrt(i^2+j^2)) / sqrt(i^2+j^2)."""

    def term(i, j):
        r = math.hypot(i, j)
        return (-1) ** (i & 1) / (math.sinh(math.pi * r) * r)

    total = 0.0
    J = 1
    while True:
        shell = 0.0
        for t in range(-J, J + 1):
            shell += term(J, t) + term(-J, t)
        for t in range(-J + 1, J):
            shell += term(t, J) + term(t, -J)
        total += shell
        if abs(shell) < SHELL_CUTOFF:
            break
        J += 1
    return -math.pi / 2.0 + 3.0 * total


def neighbor_limit(N):
    """lim_{s->inf} M_N(s) = -2N: the 2N nearest neighbours, all of opposite sign."""
    if N < 1:
        raise DomainError(f"dimension must be >= 1, got {N}")
    return float(-2 * N)


def critical_value(s):
    """M_N(s) at s = 0, -1, -2, ..., where it equals -2 eta(2s) for every N."""
    if not is_nonpositive_integer(s):
        raise DomainError(f"critical values exist only at s = 0, -1, -2, ...; got {s!r}")
    return -2.0 * eta(2.0 * round(s))


def closed_form(formula_id, N=None, s=None):
    """Evaluate one formula by id and tag the result."""
    if formula_id.startswith("zucker"):
        dim = int(formula_id[len("zucker") :])
        value = zucker(dim, s)
    elif formula_id == "tyagi":
        value = tyagi_m3()
    elif formula_id == "benson":
        value = benson_mackenzie_m3()
    elif formula_id == "hautot":
        value = hautot_m3()
    elif formula_id == "limit":
        value = neighbor_limit(N)
    elif formula_id == "critical":
        value = critical_value(s)
    else:
        raise DomainError(f"unknown formula id {formula_id!r}")
    return ClosedFormResult(value, formula_id)
