"""
Entropy of a problem, in bits
=============================

A problem with N equally likely answers starts at log2(N) bits and ends
at 0 bits once solved. The entropy removed is a floor on the number of
yes/no comparisons any program needs.
"""

import math

import numpy as np

from infobound.entropy import (
    e_partial_sum,
    entropy_change,
    generalized_entropy,
    shannon_entropy,
    uniform_entropy,
)

# A skewed three-way outcome carries less than log2(3) bits.
print("H([0.5, 0.25, 0.25]) =", shannon_entropy([0.5, 0.25, 0.25]))
print("log2(3)              =", uniform_entropy(3))

# Uniform distributions over 2**k outcomes hold exactly k bits.
for k in (0, 1, 5, 10):
    probs = np.full(2 ** k, 2.0 ** -k)
    print(f"uniform over 2**{k:<2d}: {shannon_entropy(probs)} bits")

# Finding the maximum of n items: n - 1 bits in, 0 bits out.
n = 10
print(f"\nmax of {n}: entropy change = {entropy_change(n - 1, 0.0)} comparisons")

# The same six orderings measured in bits, nats and base-6 digits.
six = [1 / 6] * 6
for base, unit in ((2, "bits"), (math.e, "nats"), (6, "base-6 digits")):
    print(f"6 orderings = {generalized_entropy(six, base):.6f} {unit}")

# Partial sums of 1/k!: two terms give the binary base 2, all of them give e.
for terms in (0, 1, 2, 5, 10):
    print(f"sum_{{k<={terms}}} 1/k! = {e_partial_sum(terms):.9f}")
print("e                 =", f"{math.e:.9f}")
