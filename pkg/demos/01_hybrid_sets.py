"""Hybrid sets: signed multiplicities, the ellipsis, and subsets of negative sets.

Run: python3 demos/01_hybrid_sets.py
"""

from hybridset import HybridSet, binomial, ellipsis, enumerate_subsets

print("A hybrid set lists positive multiplicities left of the bar, negative ones right.")
f = HybridSet.parse("{a,b,c,b|d,e,e}")
print(f"  f = {f.render()}  f(b) = {f['b']}  f(e) = {f['e']}  #f = {f.cardinality}")

print("\nThe ellipsis {a_i..a_j} runs backwards, with negative multiplicity, once j < i - 1.")
for i, j in [(1, 4), (1, 0), (1, -3)]:
    print(f"  {{{i}..{j}}} = {ellipsis(lambda n: n, i, j).render()}")

print("\nSubsets of the negative set {|a,b,c} behave like multisets, so their count")
print("matches the extended binomial coefficient of (-3, k) in absolute value.")
neg = HybridSet.parse("{|a,b,c}")
for k in (2, -4):
    subs = enumerate_subsets(neg, k)
    print(f"  k = {k:2}: {len(subs)} subsets, binomial(-3,{k}) = {binomial(-3, k)}")
    print("        " + " ".join(s.render() for s in subs))
