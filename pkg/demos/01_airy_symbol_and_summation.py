"""The Airy WKB symbol: exact coefficients, divergence, and Borel summation.

The formal solution of u'' = (z/eps^2) u recessive along the positive
real axis is exp(-(2/3) z^{3/2}/eps) z^{-1/4} (1 + sum alpha_n eps^n)
with exact rational alpha_n.  The series diverges factorially in eps,
yet its Borel-Pade-Laplace sum reproduces the scaled Airy function to
near machine precision, as does direct steepest-descent quadrature of
the integral representation.
"""

from exactwkb import airy_alpha, airy_borel_sum, airy_contour, airy_oracle

print("exact symbol coefficients alpha_n (times z^{-3n/2}):")
for n in range(1, 9):
    print(f"  n={n}: {airy_alpha(n)}")

print("\nfactorial divergence: |alpha_n| ratios")
prev = None
for n in (5, 10, 20, 30):
    val = abs(float(airy_alpha(n)))
    if prev:
        print(f"  |alpha_{n}|/|alpha_{n - 5}| = {val / prev:.3e}")
    prev = val

z = 1.0
print(f"\nBorel-Pade-Laplace summation at z = {z}:")
print(f"{'eps':>6} {'borel sum':>24} {'rel err vs Ai':>14} {'rel err contour':>16}")
for eps in (0.2, 0.1, 0.05, 0.02):
    b = airy_borel_sum(z, eps, 24)
    c = airy_contour(z, eps)
    o = airy_oracle(z, eps)
    print(f"{eps:>6} {b.value.real:>24.15e} "
          f"{abs(b.value - o) / abs(o):>14.2e} "
          f"{abs(c.value - o) / abs(o):>16.2e}")

print("\nplain truncated summation for comparison (optimal order ~ 1/eps):")
from exactwkb import airy_symbol

sym = airy_symbol(30)
for orders in (4, 8, 16, 30):
    v = sym.truncated_sum(z, 0.1, orders=orders)
    o = airy_oracle(z, 0.1)
    print(f"  {orders:>2} orders: rel err {abs(v - o) / abs(o):.2e}")
