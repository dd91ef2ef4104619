"""Entropy arithmetic in bits.

Shannon entropy of finite distributions, entropy change between an
initial and a final model, exact and Stirling-approximated log2(n!),
entropy in an arbitrary logarithm base, and partial sums of the Taylor
series of e.

All functions are pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

#: Tolerance on the sum of a probability vector and on entropy equality.
TOL = 1e-9

LOG2_E = math.log2(math.e)


@dataclass(frozen=True)
class ProbabilityDistribution:
    """A validated, non-empty vector of outcome probabilities."""

    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        _validate(probs)
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return len(self.probs)

    @classmethod
    def uniform(cls, n: int) -> "ProbabilityDistribution":
        if n < 1:
            raise ValueError(f"uniform distribution needs n >= 1, got {n}")
        return cls((1.0 / n,) * n)


DistLike = Union[ProbabilityDistribution, Sequence[float], np.ndarray]


def _validate(probs) -> None:
    if len(probs) == 0:
        raise ValueError("probability distribution is empty")
    arr = np.asarray(probs, dtype=float)
    if arr.ndim != 1:
        raise ValueError("probability distribution must be one-dimensional")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    total = math.fsum(arr.tolist())
    if abs(total - 1.0) > TOL:
        raise ValueError(f"probabilities sum to {total!r}, not 1")


def _as_array(dist: DistLike) -> np.ndarray:
    if isinstance(dist, ProbabilityDistribution):
        return np.asarray(dist.probs, dtype=float)
    _validate(dist)
    return np.asarray(dist, dtype=float)


def _entropy(p: np.ndarray, log) -> float:
    # 0 * log(0) contributes nothing
    p = p[p > 0.0]
    return float(max(0.0, -np.sum(p * log(p))))


def shannon_entropy(dist: DistLike) -> float:
    """Return ``-sum(p * log2(p))`` in bits.

    Raises ValueError for an empty vector, entries outside [0, 1], or a
    sum further than 1e-9 from 1.

    >>> shannon_entropy([0.5, 0.25, 0.25])
    1.5
    """
    return _entropy(_as_array(dist), np.log2)


def generalized_entropy(dist: DistLike, base: float) -> float:
    """Entropy of `dist` measured in base-`base` units (base 2 gives bits)."""
    if not base > 1:
        raise ValueError(f"logarithm base must exceed 1, got {base!r}")
    p = _as_array(dist)
    if base == 2:
        return _entropy(p, np.log2)
    ln_base = math.log(base)
    return _entropy(p, lambda x: np.log(x) / ln_base)


def entropy_change(initial: float, final: float = 0.0) -> float:
    """Entropy removed going from `initial` to `final` bits.

    A final entropy above the initial one means the model is inverted and
    raises ValueError.
    """
    if initial < 0 or final < 0:
        raise ValueError("entropies must be non-negative")
    if final > initial + TOL:
        raise ValueError(
            f"final entropy {final!r} exceeds initial entropy {initial!r}")
    return max(0.0, initial - final)


def uniform_entropy(n: int) -> float:
    """log2(n): the entropy of n equiprobable states."""
    if n < 1:
        raise ValueError(f"state count must be >= 1, got {n}")
    return math.log2(n)


def log2_factorial_exact(n: int) -> float:
    """log2(n!) summed term by term, so n! is never formed."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return math.fsum(math.log2(k) for k in range(2, n + 1))


def stirling_log2_factorial(n: int) -> float:
    """Two-term Stirling estimate ``n*log2(n) - n*log2(e)``.

    Deliberately omits the ``0.5*log2(2*pi*n)`` correction, so it always
    undershoots log2(n!) and is negative at n = 1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n * math.log2(n) - n * LOG2_E


def ceil_log2(count: int) -> int:
    """Exact ceil(log2(count)) for a positive integer, without rounding error."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return (count - 1).bit_length()


def e_partial_sum(terms: int) -> float:
    """Sum of 1/k! for k = 0..terms.

    Term k is the chance of guessing the right order of k equiprobable
    elements; ``e_partial_sum(1) == 2``.
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    return math.fsum(1.0 / math.factorial(k) for k in range(terms + 1))
