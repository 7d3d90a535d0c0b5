"""comp_n and expansions of rational functions in persistant-root bases.

Run: python3 demos/02_connection_constants.py
"""

from fractions import Fraction

from hybridset import HybridSet, LaurentPoly, PersistantSequence, comp, expand, parse_rational_fn, verify_expansion
from hybridset.numbers import render_value

print("comp_n over a hybrid set mixes elementary and complete symmetric functions.")
a, b, x = (LaurentPoly.var(n) for n in "abx")
V = HybridSet.from_sides([a, b], [x])
for n in range(3):
    print(f"  comp_{n}({{a,b|x}}) = {render_value(comp(V, n))}")

print("\nExpanding 1/x in q_n(x) = x(x-1)...(x-n+1), extended to negative n:")
print("the coefficient of q_{-k} = 1/((x+1)...(x+k)) is (k-1)!.")
lower = PersistantSequence(lambda i: i - 1, "b_i = i - 1")
f = parse_rational_fn("1/(x-0)")
coeffs = expand(f, lower, 20)
print("  " + ", ".join(f"{c}" for _, c in coeffs[:8]))

print("\nThe partial sums at x = 1 close in on 1 from below, slowly:")
for K in (5, 10, 20):
    s = sum(c * lower.q(idx)(1) for idx, c in coeffs[:K])
    print(f"  {K:2} terms: 1 - sum = {1 - s} ~ {float(1 - s):.3e}")
print(f"  verify_expansion: {verify_expansion(f, lower, coeffs, [1, 2, Fraction(1, 2)])}")

print("\nA polynomial expands into finitely many terms; the rest vanish.")
g = parse_rational_fn("(x-1)(x-2)(x+3)")
print("  " + ", ".join(f"q_{idx}:{c}" for idx, c in expand(g, lower, 5)))
