"""
Counting comparisons
====================

Each algorithm sees the data only through a counting comparator. Running
it over every permutation gives its exact worst case, which can be set
against the ceil(log2 n!) floor.
"""

import math

from infobound.comparisons import (
    ComparisonTally,
    binary_search,
    merge_sort,
    search_worst_case,
    worst_case_exhaustive,
)

tally = ComparisonTally.traced()
out, _ = merge_sort([30, 10, 40, 20], tally)
print("merge_sort([30, 10, 40, 20]) ->", out, f"in {tally.count} comparisons")
print(tally.dump_trace(), end="")

print("\n n  floor  max_scan  bubble  insertion  merge")
for n in range(2, 9):
    floor = math.ceil(math.log2(math.factorial(n)))
    worst = [worst_case_exhaustive(a, n).worst_case
             for a in ("max_scan", "bubble", "insertion", "merge")]
    print(f"{n:2d}  {floor:5d}  {worst[0]:8d}  {worst[1]:6d}  {worst[2]:9d}  {worst[3]:5d}")

print("\nbinary search worst case vs floor(log2 n) + 1:")
for n in (1, 7, 8, 100, 1024):
    print(f"  n={n:5d}: {search_worst_case(n):2d} probes, formula {math.floor(math.log2(n)) + 1}")

pos, t = binary_search(list(range(0, 200, 2)), 86)
print(f"position of 86: {pos} after {t.count} probes")
