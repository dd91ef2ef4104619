"""
The exact minimum, by minimax
=============================

For small n the best possible comparison strategy can be found by brute
force: keep the set of orders still possible and pick, at every step,
the comparison whose worse outcome is cheapest. The result is squeezed
between the entropy floor and merge sort.
"""

import math

from infobound.comparisons import worst_case_exhaustive
from infobound.oracle import min_comparisons_max, min_comparisons_sort, optimal_strategy

print(" n  ceil(log2 n!)  optimum  merge sort   max: optimum  n-1")
for n in range(1, 6):
    floor = math.ceil(math.log2(math.factorial(n)))
    sort = min_comparisons_sort(n)
    merge = worst_case_exhaustive("merge", n).worst_case
    mx = min_comparisons_max(n)
    print(f"{n:2d}  {floor:13d}  {sort.min_worst_case:7d}  {merge:10d}"
          f"   {mx.min_worst_case:12d}  {n - 1:3d}")

print("\nAn optimal decision tree for sorting three items")
print("(Greater branch first, then Not-greater):")
print(optimal_strategy("sort", 3).render(), end="")
