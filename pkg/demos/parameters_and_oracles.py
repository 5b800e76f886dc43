"""Walk through the closed-form [n, k, d] parameters of projective
Reed-Muller codes and check them against brute-force oracles.

The dimension comes from an inclusion-exclusion sum, the distance from
d = (q - s) q^(m-r-1) with nu - 1 = r(q-1) + s.  Neither needs to be taken
on faith: the rank of the evaluation matrix and an exhaustive minimum-weight
search recompute both from scratch.
"""

from prmcodes import (
    distance_formula,
    generator_matrix,
    min_weight_exhaustive,
    rank_gf,
)
from prmcodes.errors import BudgetExceeded

print("q  m  nu |  n   k(formula) k(rank)  d(formula) d(search)")
print("-" * 58)
for q in (2, 3, 4):
    for m in (1, 2):
        for nu in range(1, m * (q - 1) + 1):
            cp = distance_formula(q, m, nu)
            G = generator_matrix(q, m, nu)
            k_rank = rank_gf(G.entries, G.field)
            try:
                d_search = str(min_weight_exhaustive(q, m, nu, budget=200_000))
            except BudgetExceeded:
                d_search = "(skipped)"
            print(f"{q}  {m}  {nu:2d} | {cp.n:3d}  {cp.k:6d} {k_rank:8d} "
                  f"{cp.d:9d} {d_search:>9s}")

print()
print("The [7,3,4] simplex code is the smallest interesting instance:")
cp = distance_formula(2, 2, 1)
print(f"  q=2, m=2, nu=1  ->  n={cp.n}, k={cp.k}, d={cp.d} (r={cp.r}, s={cp.s})")
G = generator_matrix(2, 2, 1)
print("  generator matrix (rows = coordinate functions, columns = points):")
for row in G.entries:
    print("   ", " ".join(str(x) for x in row))
