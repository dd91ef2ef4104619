"""
The side-by-side report
=======================

Everything at once: state counts, exact and Stirling entropies, the
oracle minimum and the measured worst cases, one row per problem and n.
The same table is available from the command line as
``infobound report --n-range 1..8``.
"""

import math

import numpy as np

from infobound.entropy import log2_factorial_exact, stirling_log2_factorial
from infobound.report import build_report

report = build_report(1, 8)
print(report.to_markdown())
problems = report.violations()
print("self-check:", "clean" if not problems else problems)

# The two-term Stirling estimate always undershoots, but its relative
# error fades as n grows.
ns = np.array([10, 100, 1000, 10_000, 100_000])
exact = np.array([log2_factorial_exact(int(n)) for n in ns])
approx = np.array([stirling_log2_factorial(int(n)) for n in ns])
for n, e, a, r in zip(ns, exact, approx, (exact - approx) / exact):
    print(f"n={n:>6d}  log2 n! = {e:14.3f}  stirling = {a:14.3f}  rel. error = {r:.2e}")
print("gap tracks 0.5*log2(2*pi*n):",
      np.allclose(exact - approx, 0.5 * np.log2(2 * math.pi * ns), atol=0.02))
