"""Exact representation counts r_N(m) and their odd-square variant."""

from madelung.squares import brute_force_counts, odd_squares_row, squares_row

print("m    r_2  r_4    r_8        r_10")
rows = {N: squares_row(N, 200) for N in (2, 4, 8, 10)}
for m in (1, 5, 25, 100, 200):
    print(f"{m:<4} {rows[2][m]:<4} {rows[4][m]:<6} {rows[8][m]:<10} {rows[10][m]}")

# every count is an exact Python int; cross-check a small case by enumeration
brute = [int(x) for x in brute_force_counts(4, 30)]
print("\nr_4 matches enumeration up to 30:", brute == list(squares_row(4, 30)))

# sums of N odd squares are always N mod 8
odd = odd_squares_row(3, 60)
print("nonzero r_3^odd(m):", [(m, c) for m, c in enumerate(odd) if c])
