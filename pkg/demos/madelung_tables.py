"""Madelung constants across dimensions and exponents."""

from madelung import madelung, madelung_ladder, zucker

exponents = (0.5, 1.5, 3.0, 6.0)
ladders = [madelung_ladder(20, s) for s in exponents]
print(" N " + "".join(f"{f's={s:g}':>22}" for s in exponents))
for N in range(1, 21):
    print(f"{N:2d} " + "".join(f"{lad[N - 1].value:22.14f}" for lad in ladders))

# the rock-salt constant by both expansions
print()
for method in ("direct", "recursive"):
    v = madelung(3, 0.5, method=method)
    print(f"M_3(1/2) {method:9s} {v.value:.15f}  m_max {v.m_max_used}")

# closed forms exist for N = 1, 2, 4, 6, 8
print()
for N in (2, 4, 8):
    print(f"M_{N}(3/2): series {madelung(N, 1.5).value:.15f}  closed form {zucker(N, 1.5):.15f}")

# the value at s = 1/2 keeps falling with N
big = madelung_ladder(100, 0.5, tol=1e-12)
print("\nM_N(1/2) for N = 25, 50, 75, 100:", [round(big[N - 1].value, 10) for N in (25, 50, 75, 100)])
