"""Exact representation counts for sums of squares.

r_N(m) counts integer vectors i in Z^N with |i|^2 = m, signs and order
included; r_N^odd(m) restricts every coordinate to be odd.  Both are built
one dimension at a time:

    r_{N+1}(m)     = r_N(m) + 2 sum_{i>=1} r_N(m - i^2)
    r^odd_{N+1}(m) = 2 sum_{i>=1} r^odd_N(m - (2i-1)^2)

Counts are Python ints (unbounded).  Tables are memoized per kind and grown
on demand; a lock serialises growth so concurrent readers always see
complete rows.
"""

import csv
import itertools
import math
import threading

import numpy as np

from .errors import BoundsError, DomainError

__all__ = [
    "RepTable",
    "r_squares",
    "r_odd_squares",
    "r_even_squares",
    "squares_row",
    "odd_squares_row",
    "brute_force_r",
    "brute_force_counts",
    "write_squares_csv",
]

BRUTE_FORCE_BUDGET = 10**9


class RepTable:
    """Rows r_n(0..order) for n = first_dim..max_dim of one kind of count.

    ``kind`` is ``"any"`` (ordinary squares, anchored at r_0) or ``"odd"``
    (odd squares, anchored at r_1^odd).
    """

    def __init__(self, kind):
        if kind not in ("any", "odd"):
            raise DomainError(f"unknown kind {kind!r}")
        self.kind = kind
        self.first_dim = 0 if kind == "any" else 1
        self.order = -1
        self._rows = []
        self._lock = threading.Lock()

    def _base_row(self, order):
        row = np.zeros(order + 1, dtype=object)
        row[:] = 0
        if self.kind == "any":
            row[0] = 1
        else:
            j = 1
            while j * j <= order:
                row[j * j] = 2
                j += 2
        return row

    def _next_row(self, prev):
        order = len(prev) - 1
        if self.kind == "any":
            new = prev.copy()
            step, start = 1, 1
        else:
            new = np.zeros(order + 1, dtype=object)
            new[:] = 0
            step, start = 2, 1
        twice = 2 * prev
        i = start
        while i * i <= order:
            q = i * i
            new[q:] += twice[: order + 1 - q]
            i += step
        return new

    def _rebuild(self, order):
        rows = [self._base_row(order)]
        for _ in range(len(self._rows) - 1):
            rows.append(self._next_row(rows[-1]))
        self._rows = rows
        self.order = order

    def row(self, n, order):
        """Counts for dimension n at m = 0..order, as a tuple of ints."""
        if n < self.first_dim:
            raise DomainError(f"dimension must be >= {self.first_dim}, got {n}")
        if order < 0:
            raise DomainError("order must be non-negative")
        with self._lock:
            if order > self.order:
                # grow geometrically so repeated small extensions stay cheap
                new_order = max(order, 2 * self.order, 64)
                if not self._rows:
                    self._rows = [None]
                self._rebuild(new_order)
            while len(self._rows) <= n - self.first_dim:
                self._rows.append(self._next_row(self._rows[-1]))
            r = self._rows[n - self.first_dim]
        return tuple(r[: order + 1])


_ANY = RepTable("any")
_ODD = RepTable("odd")


def _check_nm(N, m, min_dim):
    if N < min_dim:
        raise DomainError(f"dimension must be >= {min_dim}, got {N}")
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")


def squares_row(N, order):
    """(r_N(0), ..., r_N(order)) as exact integers."""
    return _ANY.row(N, order)


def odd_squares_row(N, order):
    """(r_N^odd(0), ..., r_N^odd(order)) as exact integers."""
    return _ODD.row(N, order)


def r_squares(N, m):
    """Number of integer solutions of i_1^2 + ... + i_N^2 = m."""
    _check_nm(N, m, 0)
    return squares_row(N, m)[m]


def r_odd_squares(N, m):
    """Number of solutions of (2j_1+1)^2 + ... + (2j_N+1)^2 = m."""
    _check_nm(N, m, 1)
    return odd_squares_row(N, m)[m]


def r_even_squares(N, m):
    """Representations of m as a sum of N even squares: r_N(m/4) or 0."""
    _check_nm(N, m, 1)
    if m % 4:
        return 0
    return r_squares(N, m // 4)


def brute_force_counts(N, M, parity="any"):
    """Counts for every m <= M by enumerating all lattice points directly.

    Every tuple with coordinates in [-isqrt(M), isqrt(M)] (odd coordinates
    only when ``parity == "odd"``) has its squared norm computed; norms up
    to M are histogrammed.  Independent of the recursions above, which makes
    it a test oracle.  Returns an int64 array of length M + 1.
    """
    if parity not in ("any", "odd"):
        raise DomainError(f"unknown parity {parity!r}")
    if not 1 <= N <= 8 or not 0 <= M <= 400:
        raise BoundsError(f"brute force limited to 1 <= N <= 8, m <= 400; got N={N}, m={M}")
    L = math.isqrt(M)
    coords = [c for c in range(-L, L + 1) if parity == "any" or c % 2]
    if len(coords) ** N > BRUTE_FORCE_BUDGET:
        raise BoundsError(f"{len(coords)}**{N} tuples exceed the enumeration budget")
    counts = np.zeros(M + 1, dtype=np.int64)
    if not coords:
        return counts
    sq = np.array([c * c for c in coords], dtype=np.int64)

    # inner block: all norms over the last k coordinates, held in memory
    k = min(N, 4)
    inner = sq
    for _ in range(k - 1):
        inner = np.add.outer(inner, sq).ravel()
    for head in itertools.product(sq.tolist(), repeat=N - k):
        norms = inner + sum(head)
        counts += np.bincount(norms[norms <= M], minlength=M + 1)
    return counts


def brute_force_r(N, m, parity="any"):
    """r_N(m) or r_N^odd(m) by direct enumeration (small N and m only)."""
    return int(brute_force_counts(N, m, parity)[m])


def write_squares_csv(fh, N, M, parity="any"):
    """Write ``m,r_N(m)`` rows for m = 0..M to an open text file."""
    row = squares_row(N, M) if parity == "any" else odd_squares_row(N, M)
    label = f"r_{N}(m)" if parity == "any" else f"r_{N}^odd(m)"
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["m", label])
    for m, r in enumerate(row):
        w.writerow([m, r])
