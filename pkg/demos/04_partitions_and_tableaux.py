"""d-partitions count Gaussian coefficients; 0-1 tableaux sum to p,q-Stirling numbers.

Run: python3 demos/04_partitions_and_tableaux.py
"""

from collections import Counter

from hybridset import enumerate_partitions, enumerate_tableaux, ferrers, gaussian, inv, nin
from hybridset import stirling1_pq, tableau_sum

print("With negative width the strict chain runs over negative parts, and repeats are allowed.")
for lam in enumerate_partitions("d", -3, 2):
    print(f"  {lam.parts}  size {lam.size}")

print("\nSigned counts of d-partitions of width -3, length 2, by size, against [-3,-5]_q:")
print(f"  counts  {dict(sorted(Counter(l.size for l in enumerate_partitions('d', -3, 2)).items()))}")
print(f"  [-3,-5] {gaussian(-3, -5).render()}")

print("\nA negative part gives a row of negative cells in the Ferrers diagram:")
print(f"  ferrers((-3,-2)) = {ferrers((-3, -2)).render()}")

print("\nThe 0-1 tableaux on d-partitions of width 3, length 2, with (inv, nin):")
for lam in enumerate_partitions("d", 3, 2):
    for t in enumerate_tableaux(lam):
        print(f"  {t.render():24} ({inv(t)}, {nin(t)})")
print(f"  sum q^inv p^nin = {tableau_sum('first', 3, 1).render()}")
print(f"  s_pq(3,1)       = {stirling1_pq(3, 1).render()}")

print("\nThe same identity in region 3, with the sign (-1)^(n-k):")
print(f"  tableau sum (-2,-3) = {tableau_sum('first', -2, -3).render()}")
print(f"  s_pq(-2,-3)         = {stirling1_pq(-2, -3).render()}")
