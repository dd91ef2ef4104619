"""Comparison-counting algorithms.

Every algorithm here touches the data only through
:meth:`ComparisonTally.greater`, which answers "is item i Greater than
item j?" and counts one comparison per call. Moves, swaps and index
arithmetic are free. Trace entries use indices into the *input*
sequence, so a trace can be replayed against the original data.
"""
from __future__ import annotations

import enum
import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .states import CapExceededError

EXHAUSTIVE_CAP = 8

#: Trace marker for the search target, which has no index in the input.
TARGET = None


class Outcome(enum.Enum):
    GREATER = "G"
    NOT_GREATER = "N"


@dataclass
class ComparisonTally:
    count: int = 0
    trace: Optional[list] = None
    _target: object = field(default=None, repr=False, compare=False)

    @classmethod
    def traced(cls) -> "ComparisonTally":
        return cls(trace=[])

    def greater(self, items: Sequence, i, j) -> bool:
        """Compare ``items[i] > items[j]``; an index of None means the search target."""
        left = self._target if i is TARGET else items[i]
        right = self._target if j is TARGET else items[j]
        result = left > right
        self.count += 1
        if self.trace is not None:
            self.trace.append((i, j, Outcome.GREATER if result else Outcome.NOT_GREATER))
        return result

    def dump_trace(self) -> str:
        """One line per comparison: ``"i j G|N"``; the search target prints as ``t``."""
        if self.trace is None:
            raise ValueError("tally was created without a trace")
        fmt = lambda k: "t" if k is TARGET else str(k)
        return "".join(f"{fmt(i)} {fmt(j)} {o.value}\n" for i, j, o in self.trace)


def _check_distinct(items: Sequence) -> None:
    if len(set(items)) != len(items):
        raise ValueError("items must be pairwise distinct")


def max_scan(items: Sequence, tally: Optional[ComparisonTally] = None):
    """Left-to-right scan for the maximum; always n - 1 comparisons."""
    tally = ComparisonTally() if tally is None else tally
    if len(items) == 0:
        raise ValueError("max of an empty sequence")
    best = 0
    for k in range(1, len(items)):
        if tally.greater(items, k, best):
            best = k
    return items[best], tally


def bubble_sort(items: Sequence, tally: Optional[ComparisonTally] = None,
                early_exit: bool = False):
    """Bubble sort. Without `early_exit` it always makes n(n-1)/2 comparisons."""
    tally = ComparisonTally() if tally is None else tally
    _check_distinct(items)
    idx = list(range(len(items)))
    for end in range(len(idx) - 1, 0, -1):
        swapped = False
        for k in range(end):
            if tally.greater(items, idx[k], idx[k + 1]):
                idx[k], idx[k + 1] = idx[k + 1], idx[k]
                swapped = True
        if early_exit and not swapped:
            break
    return [items[k] for k in idx], tally


def insertion_sort(items: Sequence, tally: Optional[ComparisonTally] = None):
    tally = ComparisonTally() if tally is None else tally
    _check_distinct(items)
    idx: list[int] = []
    for k in range(len(items)):
        pos = len(idx)
        while pos > 0 and tally.greater(items, idx[pos - 1], k):
            pos -= 1
        idx.insert(pos, k)
    return [items[k] for k in idx], tally


def merge_sort(items: Sequence, tally: Optional[ComparisonTally] = None):
    """Top-down merge sort, left half of size n // 2."""
    tally = ComparisonTally() if tally is None else tally
    _check_distinct(items)

    def sort(idx: list[int]) -> list[int]:
        if len(idx) < 2:
            return idx
        mid = len(idx) // 2
        left, right = sort(idx[:mid]), sort(idx[mid:])
        out = []
        a = b = 0
        while a < len(left) and b < len(right):
            if tally.greater(items, left[a], right[b]):
                out.append(right[b])
                b += 1
            else:
                out.append(left[a])
                a += 1
        out.extend(left[a:])
        out.extend(right[b:])
        return out

    return [items[k] for k in sort(list(range(len(items))))], tally


def binary_search(items: Sequence, target, tally: Optional[ComparisonTally] = None):
    """Position of `target` in ascending `items`, or None.

    One two-way comparison per probe narrows the n + 1 insertion slots, so
    the worst case is ceil(log2(n + 1)) = floor(log2 n) + 1 probes. The
    final membership test is an equality check and is not counted.
    """
    tally = ComparisonTally() if tally is None else tally
    tally._target = target
    lo, hi = 0, len(items)
    while lo < hi:
        mid = (lo + hi) // 2
        if tally.greater(items, mid, TARGET):
            hi = mid
        else:
            lo = mid + 1
    if lo > 0 and items[lo - 1] == target:
        return lo - 1, tally
    return None, tally


SORTS: dict[str, Callable] = {
    "bubble": bubble_sort,
    "insertion": insertion_sort,
    "merge": merge_sort,
}

ALGORITHMS: dict[str, Callable] = {"max_scan": max_scan, **SORTS}


@dataclass(frozen=True)
class MeasurementResult:
    algorithm: str
    n: int
    worst_case: int
    best_case: int
    exhaustive: bool
    trials: int
    seed: Optional[int] = None


def _resolve(algorithm) -> tuple[str, Callable]:
    if callable(algorithm):
        for name, func in ALGORITHMS.items():
            if func is algorithm:
                return name, func
        return algorithm.__name__, algorithm
    try:
        return algorithm, ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {sorted(ALGORITHMS)}") from None


def _run_checked(name: str, func: Callable, perm: tuple) -> int:
    result, tally = func(perm)
    expected = max(perm) if name == "max_scan" else sorted(perm)
    if result != expected:
        raise AssertionError(f"{name} returned {result!r} for input {perm!r}")
    return tally.count


def _sweep_prefix(name: str, n: int, first: Optional[int]) -> tuple[int, int, int]:
    func = ALGORITHMS[name]
    if first is None:
        perms = itertools.permutations(range(1, n + 1))
    else:
        rest = [v for v in range(1, n + 1) if v != first]
        perms = ((first, *p) for p in itertools.permutations(rest))
    worst, best, trials = 0, math.inf, 0
    for perm in perms:
        c = _run_checked(name, func, perm)
        worst, best, trials = max(worst, c), min(best, c), trials + 1
    return worst, int(best), trials


def worst_case_exhaustive(algorithm, n: int, *, workers: int = 1,
                          cap: int = EXHAUSTIVE_CAP) -> MeasurementResult:
    """Run `algorithm` on all n! permutations of 1..n and report max/min counts.

    Every output is checked for correctness. With ``workers > 1`` the
    permutations are split by leading element across processes; the
    result is the same for any worker count.
    """
    name, func = _resolve(algorithm)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"exhaustive {name}", n, cap)
    if workers > 1 and name in ALGORITHMS and n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_prefix, [name] * n, [n] * n, range(1, n + 1)))
    elif name in ALGORITHMS:
        parts = [_sweep_prefix(name, n, None)]
    else:
        counts = [_run_checked(name, func, p)
                  for p in itertools.permutations(range(1, n + 1))]
        parts = [(max(counts), min(counts), len(counts))]
    return MeasurementResult(
        algorithm=name,
        n=n,
        worst_case=max(p[0] for p in parts),
        best_case=min(p[1] for p in parts),
        exhaustive=True,
        trials=sum(p[2] for p in parts),
    )


def worst_case_sampled(algorithm, n: int, trials: int, seed: int) -> MeasurementResult:
    """Max/min comparison counts over `trials` random permutations drawn with `seed`."""
    name, func = _resolve(algorithm)
    if seed is None:
        raise ValueError("sampled mode requires an explicit seed")
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be >= 1")
    rng = random.Random(seed)
    perm = list(range(1, n + 1))
    worst, best = 0, math.inf
    for _ in range(trials):
        rng.shuffle(perm)
        c = _run_checked(name, func, tuple(perm))
        worst, best = max(worst, c), min(best, c)
    return MeasurementResult(name, n, worst, int(best), False, trials, seed)


def search_worst_case(n: int) -> int:
    """Worst probe count of binary_search over all 2n + 1 present and absent targets."""
    items = list(range(2, 2 * n + 2, 2))
    worst = 0
    for target in range(1, 2 * n + 2):
        pos, tally = binary_search(items, target)
        expected = items.index(target) if target in items else None
        if pos != expected:
            raise AssertionError(f"binary_search({target}) returned {pos}, expected {expected}")
        worst = max(worst, tally.count)
    return worst
