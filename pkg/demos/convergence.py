"""How the two expansions converge at N = 16, s = 1/2."""

import math

from madelung import MadelungQuery, convergence_trace, madelung

tr = convergence_trace(MadelungQuery(16, 0.5))
print(" m   a(m)                 paired")
for m, a in enumerate(tr.terms_a[:24], start=1):
    b = tr.terms_paired[m // 2 - 1] if m % 2 == 0 else None
    print(f"{m:3d} {a:+.6e}  " + (f"{b:+.6e}" if b is not None else ""))

# the direct terms climb to almost 1000 before cancelling down to O(1)
peak = max(range(len(tr.terms_a)), key=lambda i: abs(tr.terms_a[i])) + 1
print("largest direct term at m =", peak)

part = {method: madelung(16, 0.5, method=method).value + 2 * math.log(2) for method in ("direct", "recursive")}
print("Bessel part, direct:   ", repr(part["direct"]))
print("Bessel part, recursive:", repr(part["recursive"]))
