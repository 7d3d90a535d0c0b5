"""Binomial, Gaussian and Stirling numbers on the whole integer plane.

Run: python3 demos/03_six_regions.py
"""

from hybridset import Region, region, stirling1, table

print("Extended binomial coefficients, n from 6 down to -5:")
print(table("binomial", range(-5, 7), range(-4, 7)).to_text())

print("Pascal's rule holds everywhere but the origin:")
print("  binomial(-1,-1) + binomial(-1,0) = 2, binomial(0,0) = 1\n")

print("Gaussian coefficients in region 3 are Laurent polynomials in q:")
print(table("gaussian", range(-4, 0), range(-4, 0)).to_text())

print("Stirling numbers of the first kind in region 2 are rationals:")
for n, k in [(-5, 1), (-2, 3), (-1, 4)]:
    assert region(n, k) is Region.R2
    print(f"  s({n},{k}) = {stirling1(n, k)}")

print("\np,q-Stirling numbers of the second kind, region 3:")
print(table("stirling2_pq", range(-3, 0), range(-3, 0)).to_text())
