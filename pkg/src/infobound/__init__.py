"""Information-entropy lower bounds for comparison problems, checked three ways:
brute-force state enumeration, instrumented algorithms, and an exact minimax oracle."""

from .entropy import (
    ProbabilityDistribution,
    e_partial_sum,
    entropy_change,
    generalized_entropy,
    log2_factorial_exact,
    shannon_entropy,
    stirling_log2_factorial,
    uniform_entropy,
)
from .states import ModelKind, build_model, count_consistent_orderings
from .comparisons import worst_case_exhaustive
from .oracle import min_comparisons_max, min_comparisons_sort

__version__ = "0.1.0"
