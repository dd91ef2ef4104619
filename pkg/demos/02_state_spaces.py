"""
Key sequences and the collapse to n!
====================================

Describing an order of n items by one Greater/Not-greater key per pair
gives 2**(n(n-1)/2) candidate sequences, but most of them contain a
cyclic triple (a > b > c > a) and cannot happen. Filtering them leaves
exactly n! states.
"""

import math

from infobound.states import (
    ModelKind,
    build_model,
    check_consistency,
    count_consistent_orderings,
    enumerate_pairwise,
    equiprobability_check,
    residual_entropy,
    result_as_state_entropy,
    zero_type_check,
)

print("All eight key sequences on three elements (bits: AB BC AC):")
for a in enumerate_pairwise(3):
    v = check_consistency(a)
    note = "ok" if v.consistent else f"contradiction, cycle {v.witness}"
    print(f"  {a.to_line()}  {note}")

print("\n n  all sequences  consistent  n!")
for n in range(2, 7):
    total = build_model(ModelKind.SORT_PAIRWISE, n).state_count
    print(f"{n:2d}  {total:13d}  {count_consistent_orderings(n):10d}  {math.factorial(n)}")

# Max-finding: the n - 1 keys from the top element make a 0-type model.
m = build_model(ModelKind.MAX_FIND, 8)
print(f"\nmax-key model n=8: {m.state_count} states, {m.entropy_bits} bits,"
      f" 0-type={zero_type_check(m)}, equiprobable={equiprobability_check(m)}")

# Taking the answer itself as the state undercounts for max-finding.
print("answer-as-state for max, n=8:", result_as_state_entropy(m))

# The pairwise model asked only for the maximum leaves keys unresolved.
pw = build_model(ModelKind.SORT_PAIRWISE, 5)
print("pairwise model queried for max is 0-type:", zero_type_check(pw, ModelKind.MAX_FIND))
for n in range(2, 7):
    print(f"  residual bits once the max of {n} is known: {residual_entropy(n, 0):.4f}"
          f"  (log2 {n - 1}! = {math.log2(math.factorial(n - 1)):.4f})")
