"""The weight-6 cusp form behind the 12-squares formula."""

from madelung import e12, m12_cusp, madelung
from madelung.cusp import verify_glaisher, verify_jacobi

print("e12(n), n = 1..15:", [e12(n) for n in range(1, 16)])
print("e12(3) e12(5) =", e12(3) * e12(5), " e12(15) =", e12(15))

print("Jacobi 2,4,6,8 squares to q^200:", all(verify_jacobi(k, 200) for k in (1, 2, 3, 4)))
print("Glaisher 10,12 squares to q^200:", all(verify_glaisher(k, 200) for k in (5, 6)))
print("10 squares without the cusp term:", verify_glaisher(5, 200, include_cusp=False))

for s in (4.0, 6.0, 10.0):
    print(f"M_12({s:g}): cusp form {m12_cusp(s):.15f}  series {madelung(12, s).value:.15f}")
