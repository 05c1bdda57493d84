"""Cross-module consistency checks, grouped into named suites.

Each suite returns a list of :class:`Check`.  The command line runs them
with ``madelung verify``; they are cheap enough to run on every install.
"""

import math
from dataclasses import dataclass

from .closed_forms import critical_value, zucker
from .core import madelung, madelung_ladder
from .cusp import divisor_count, e12, m12_cusp, verify_glaisher, verify_jacobi
from .squares import brute_force_counts, odd_squares_row, squares_row

__all__ = ["Check", "SUITES", "run_suite"]

EXPONENTS = (0.5, 1.5, 3.0, 6.0)

# r_N(m) at a few published points: m -> (r_2, r_3, r_4, r_6, r_8, r_10)
KNOWN_COUNTS = {
    5: (8, 24, 48, 312, 2016, 8424),
    20: (8, 24, 144, 6552, 143136, 2050344),
    100: (12, 30, 744, 164052, 17893136, 1282320348),
    200: (12, 84, 744, 664020, 146925328, 20513309148),
}
KNOWN_DIMS = (2, 3, 4, 6, 8, 10)

E12_AT_PRIMES = {3: -12, 5: 54, 7: -88, 11: 540, 13: -418, 17: 594, 19: 836, 23: -4104, 29: -594}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _squares():
    out = []
    for m, row in KNOWN_COUNTS.items():
        got = tuple(squares_row(N, m)[m] for N in KNOWN_DIMS)
        out.append(Check("squares", f"known r_N({m})", got == row, str(got)))
    for N in range(1, 7):
        for parity, fast in (("any", squares_row), ("odd", odd_squares_row)):
            brute = [int(x) for x in brute_force_counts(N, 100, parity)]
            ok = brute == list(fast(N, 100))
            out.append(Check("squares", f"brute force N={N} {parity}", ok))
    return out


def _zucker():
    out = []
    for N in (1, 2, 4, 6, 8):
        for s in EXPONENTS:
            diff = abs(zucker(N, s) - madelung(N, s).value)
            out.append(Check("zucker", f"N={N} s={s}", diff < 1e-12, f"{diff:.3g}"))
    return out


def _cusp():
    out = []
    for p, v in E12_AT_PRIMES.items():
        got = e12(p, 200)
        out.append(Check("cusp", f"e12({p})", got == v, str(got)))
    bad = [
        (a, b)
        for a in range(2, 15)
        for b in range(2, 200 // a + 1)
        if math.gcd(a, b) == 1 and e12(a * b, 200) != e12(a, 200) * e12(b, 200)
    ]
    out.append(Check("cusp", "multiplicativity n <= 200", not bad, str(bad[:3])))
    over = [n for n in range(1, 201) if abs(e12(n, 200)) > divisor_count(n) * n**2.5]
    out.append(Check("cusp", "Deligne bound n <= 200", not over, str(over[:3])))
    for k in (1, 2, 3, 4):
        out.append(Check("cusp", f"Jacobi {2 * k} squares", verify_jacobi(k, 200)))
    for k in (5, 6):
        out.append(Check("cusp", f"Glaisher {2 * k} squares", verify_glaisher(k, 200)))
    for s in (4.0, 6.0):
        diff = abs(m12_cusp(s) - madelung(12, s).value)
        out.append(Check("cusp", f"M_12({s:g}) cusp vs recursion", diff < 1e-12, f"{diff:.3g}"))
    return out


def _continuation():
    out = []
    for N in range(1, 7):
        v0 = madelung(N, 0.0).value
        v1 = madelung(N, -1.0).value
        out.append(Check("continuation", f"M_{N}(0) = -1", abs(v0 + 1.0) < 1e-10, f"{v0:.15g}"))
        out.append(Check("continuation", f"M_{N}(-1) = 0", abs(v1) < 1e-10, f"{v1:.15g}"))
    for s in (0.0, -1.0, -2.0):
        ref = critical_value(s)
        vals = [m.value for m in madelung_ladder(8, s)]
        spread = max(abs(v - ref) for v in vals)
        out.append(Check("continuation", f"all N cross at s={s:g}", spread < 1e-10, f"{spread:.3g}"))
    return out


SUITES = {
    "squares": _squares,
    "zucker": _zucker,
    "cusp": _cusp,
    "continuation": _continuation,
}


def run_suite(name):
    """Run one suite, or every suite for ``"all"``."""
    if name == "all":
        return [c for key in SUITES for c in SUITES[key]()]
    return SUITES[name]()
