"""State spaces built from binary "keys".

A key records whether one element is Greater than another. Two key
models are enumerated here:

* the max-key model: n - 1 keys between a designated top element
  (index 0) and every other element;
* the pairwise model: one key per unordered pair, n(n-1)/2 keys, i.e. a
  tournament on n vertices.

Pair (i, j) with i < j maps to bit ``i*n - i*(i+1)//2 + (j - i - 1)`` and
a set bit means element i is Greater than element j. In the max-key
model, bit k is set when element 0 is Greater than element k + 1.
Assignments are enumerated in increasing integer-mask order, with bit 0
printed first.
"""
from __future__ import annotations

import enum
import graphlib
import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .entropy import (
    log2_factorial_exact,
    stirling_log2_factorial,
    uniform_entropy,
)

#: Default enumeration caps (largest n enumerated exhaustively).
PAIRWISE_CAP = 6
MAX_KEYS_CAP = 20
SEARCH_CAP = 1 << 16


class CapExceededError(ValueError):
    """An exhaustive enumeration was requested beyond its size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds enumeration cap {cap}")
        self.n = n
        self.cap = cap


class ModelKind(enum.Enum):
    MAX_FIND = "max"
    SORT_PAIRWISE = "pairwise"
    SORT_PERMUTATION = "sort"
    SEARCH = "search"


class KeyModel(enum.Enum):
    """Which key layout a KeyAssignment uses; the value is its serialized tag."""

    MAX_KEYS = "maxkeys"
    PAIRWISE = "pairwise"


def num_keys(model: KeyModel, n: int) -> int:
    if model is KeyModel.MAX_KEYS:
        return max(n - 1, 0)
    return n * (n - 1) // 2


def pair_index(i: int, j: int, n: int) -> int:
    """Bit index of the key between elements i < j."""
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class KeyAssignment:
    n: int
    model: KeyModel
    mask: int

    def __post_init__(self):
        k = num_keys(self.model, self.n)
        if self.mask < 0 or self.mask >> k:
            raise ValueError(
                f"mask {self.mask} does not fit {k} keys of a {self.model.value} model")

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> k) & 1 for k in range(num_keys(self.model, self.n)))

    @classmethod
    def from_bits(cls, n: int, model: KeyModel, bits) -> "KeyAssignment":
        bits = list(bits)
        if len(bits) != num_keys(model, n):
            raise ValueError(
                f"{model.value} model with n={n} needs {num_keys(model, n)} bits, got {len(bits)}")
        mask = 0
        for k, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {k} is {b!r}, expected 0 or 1")
            mask |= b << k
        return cls(n, model, mask)

    @classmethod
    def from_order(cls, order) -> "KeyAssignment":
        """Pairwise assignment induced by ranks: ``order[i]`` is the rank of element i."""
        n = len(order)
        mask = 0
        for i, j in itertools.combinations(range(n), 2):
            if order[i] > order[j]:
                mask |= 1 << pair_index(i, j, n)
        return cls(n, KeyModel.PAIRWISE, mask)

    def greater(self, i: int, j: int) -> bool:
        """Whether this assignment says element i is Greater than element j."""
        if self.model is KeyModel.MAX_KEYS:
            if i == 0 and j > 0:
                return bool(self.mask >> (j - 1) & 1)
            if j == 0 and i > 0:
                return not self.mask >> (i - 1) & 1
            raise ValueError("max-key model only relates element 0 to the others")
        if i < j:
            return bool(self.mask >> pair_index(i, j, self.n) & 1)
        return not self.mask >> pair_index(j, i, self.n) & 1

    def to_line(self) -> str:
        """``"<n> <model> <bits>"``, bits in canonical key order."""
        bits = "".join(str(b) for b in self.bits)
        return f"{self.n} {self.model.value} {bits}"

    @classmethod
    def from_line(cls, line: str) -> "KeyAssignment":
        parts = line.split()
        if len(parts) == 2:  # no keys at all (n <= 1)
            parts.append("")
        if len(parts) != 3:
            raise ValueError(f"malformed assignment line: {line!r}")
        n, model, bits = int(parts[0]), KeyModel(parts[1]), parts[2]
        return cls.from_bits(n, model, (int(c) for c in bits))


@dataclass(frozen=True)
class ProblemModel:
    kind: ModelKind
    n: int
    state_count: int
    entropy_bits: float
    information_independent: bool
    zero_type: bool


@dataclass(frozen=True)
class ConsistencyVerdict:
    assignment: KeyAssignment
    consistent: bool
    # (a, b, c) with a > b, b > c and c > a; rotated so a is the smallest index
    witness: Optional[tuple[int, int, int]] = None


def build_model(kind: ModelKind, n: int, *, cap: Optional[int] = None) -> ProblemModel:
    """Exact state count and entropy for one of the built-in problem models.

    Passing `cap` asserts that the model will be enumerated downstream and
    rejects n beyond it.
    """
    kind = ModelKind(kind)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if cap is not None and n > cap:
        raise CapExceededError(f"{kind.value} model", n, cap)
    if kind is ModelKind.MAX_FIND:
        count, entropy = 2 ** (n - 1), float(n - 1)
    elif kind is ModelKind.SORT_PAIRWISE:
        k = n * (n - 1) // 2
        count, entropy = 2 ** k, float(k)
    elif kind is ModelKind.SORT_PERMUTATION:
        count, entropy = math.factorial(n), log2_factorial_exact(n)
    else:
        count, entropy = n, uniform_entropy(n)
    return ProblemModel(
        kind=kind,
        n=n,
        state_count=count,
        entropy_bits=entropy,
        information_independent=kind is not ModelKind.MAX_FIND,
        # every built-in model is pinned down completely by its own answer
        zero_type=True,
    )


def enumerate_max_keys(n: int, *, cap: int = MAX_KEYS_CAP) -> Iterator[KeyAssignment]:
    if n < 2:
        raise ValueError(f"max-key model needs n >= 2, got {n}")
    if n > cap:
        raise CapExceededError("max-key enumeration", n, cap)
    for mask in range(1 << (n - 1)):
        yield KeyAssignment(n, KeyModel.MAX_KEYS, mask)


def enumerate_pairwise(n: int, *, cap: int = PAIRWISE_CAP) -> Iterator[KeyAssignment]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError("pairwise enumeration", n, cap)
    for mask in range(1 << num_keys(KeyModel.PAIRWISE, n)):
        yield KeyAssignment(n, KeyModel.PAIRWISE, mask)


def _triple_bits(n: int) -> list[tuple[int, int, int, int, int, int]]:
    # (a, b, c, bit_ab, bit_bc, bit_ac) for every a < b < c
    return [
        (a, b, c, pair_index(a, b, n), pair_index(b, c, n), pair_index(a, c, n))
        for a, b, c in itertools.combinations(range(n), 3)
    ]


def _find_cycle(mask: int, triples) -> Optional[tuple[int, int, int]]:
    for a, b, c, ab, bc, ac in triples:
        x, y, z = mask >> ab & 1, mask >> bc & 1, mask >> ac & 1
        if x == y != z:
            # x == 1: a > b > c > a;  x == 0: a > c > b > a
            return (a, b, c) if x else (a, c, b)
    return None


def check_consistency(assignment: KeyAssignment) -> ConsistencyVerdict:
    """A pairwise assignment is consistent iff no triple dominates cyclically."""
    if assignment.model is not KeyModel.PAIRWISE:
        raise ValueError("consistency is defined for pairwise assignments only")
    witness = _find_cycle(assignment.mask, _triple_bits(assignment.n))
    return ConsistencyVerdict(assignment, witness is None, witness)


def is_acyclic(assignment: KeyAssignment) -> bool:
    """Full cycle detection on the dominance digraph (independent of the triple scan)."""
    n = assignment.n
    graph: dict[int, set[int]] = {i: set() for i in range(n)}
    for i, j in itertools.combinations(range(n), 2):
        if assignment.greater(i, j):
            graph[j].add(i)
        else:
            graph[i].add(j)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError:
        return False
    return True


def count_consistent_range(n: int, start: int, stop: int) -> int:
    """Number of consistent pairwise masks in ``range(start, stop)``."""
    triples = _triple_bits(n)
    return sum(1 for mask in range(start, stop) if _find_cycle(mask, triples) is None)


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def count_consistent_orderings(n: int, *, cap: int = PAIRWISE_CAP, workers: int = 1) -> int:
    """Brute-force count of the pairwise assignments that are total orders.

    The 2**(n(n-1)/2) masks are split into `workers` disjoint ranges; the
    count does not depend on the split.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError("pairwise enumeration", n, cap)
    total = 1 << num_keys(KeyModel.PAIRWISE, n)
    chunks = _split(total, max(1, workers))
    if workers <= 1:
        return sum(count_consistent_range(n, lo, hi) for lo, hi in chunks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(count_consistent_range, n, lo, hi) for lo, hi in chunks]
        return sum(f.result() for f in futures)


def sorting_entropy(n: int, mode: str = "exact") -> float:
    if mode == "exact":
        return log2_factorial_exact(n)
    if mode == "stirling":
        return stirling_log2_factorial(n)
    raise ValueError(f"mode must be 'exact' or 'stirling', got {mode!r}")


def result_as_state_entropy(model: ProblemModel) -> tuple[float, bool]:
    """Entropy obtained by taking the final answer itself as the state.

    The answer is a valid state only for information-independent problems.
    For max-finding the answer is one of n elements, giving log2(n), which
    is flagged invalid.
    """
    if model.kind in (ModelKind.SORT_PERMUTATION, ModelKind.SORT_PAIRWISE):
        value = log2_factorial_exact(model.n)
    else:
        value = uniform_entropy(model.n)
    return value, model.information_independent


def count_dominant_completions(n: int, fixed_max: int, *, cap: int = PAIRWISE_CAP) -> int:
    """Consistent pairwise assignments in which `fixed_max` beats every other element."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0 <= fixed_max < n:
        raise ValueError(f"fixed_max must be in [0, {n}), got {fixed_max}")
    if n > cap:
        raise CapExceededError("pairwise enumeration", n, cap)
    # keys fixed by knowing the maximum
    need_set = need_clear = 0
    for other in range(n):
        if other < fixed_max:
            need_clear |= 1 << pair_index(other, fixed_max, n)
        elif other > fixed_max:
            need_set |= 1 << pair_index(fixed_max, other, n)
    triples = _triple_bits(n)
    return sum(
        1
        for mask in range(1 << num_keys(KeyModel.PAIRWISE, n))
        if mask & need_set == need_set and not mask & need_clear
        and _find_cycle(mask, triples) is None
    )


def residual_entropy(n: int, fixed_max: int, *, cap: int = PAIRWISE_CAP) -> float:
    """Bits left unknown in the pairwise model once the maximum is known."""
    return math.log2(count_dominant_completions(n, fixed_max, cap=cap))


def state_distribution(model: ProblemModel, *, cap: Optional[int] = None) -> dict:
    """Exact probability of every state of `model` under its generating process.

    Pairwise and permutation states are induced by a uniformly random
    input order (one state per order, inconsistent tournaments never
    arise). Search states are the n equally likely target positions.
    Max-key states follow the model's own premise of independent keys,
    each Greater with probability 1/2.
    """
    n = model.n
    if model.kind is ModelKind.MAX_FIND:
        cap = MAX_KEYS_CAP if cap is None else cap
        if n > cap:
            raise CapExceededError("max-key enumeration", n, cap)
        k = n - 1
        return {
            KeyAssignment(n, KeyModel.MAX_KEYS, mask): Fraction(1, 2) ** k
            for mask in range(1 << k)
        }
    if model.kind is ModelKind.SEARCH:
        cap = SEARCH_CAP if cap is None else cap
        if n > cap:
            raise CapExceededError("search states", n, cap)
        return {pos: Fraction(1, n) for pos in range(n)}
    cap = PAIRWISE_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError(f"{model.kind.value} states", n, cap)
    tally: Counter = Counter()
    for order in itertools.permutations(range(n)):
        if model.kind is ModelKind.SORT_PAIRWISE:
            tally[KeyAssignment.from_order(order)] += 1
        else:
            tally[order] += 1
    total = sum(tally.values())
    return {state: Fraction(c, total) for state, c in tally.items()}


def equiprobability_check(model: ProblemModel, *, cap: Optional[int] = None) -> bool:
    """True iff every reachable state has the same probability."""
    dist = state_distribution(model, cap=cap)
    if sum(dist.values()) != 1:
        return False
    return all(p == Fraction(1, len(dist)) for p in dist.values())


def zero_type_check(model: ProblemModel, query: Optional[ModelKind] = None) -> bool:
    """Whether knowing the answer to `query` fixes every key of `model`.

    `query` defaults to the model's own problem. The interesting case is
    the pairwise model queried for the maximum, which leaves
    log2((n-1)!) bits unresolved.
    """
    query = model.kind if query is None else ModelKind(query)
    if query is model.kind or (
        model.kind is ModelKind.SORT_PAIRWISE and query is ModelKind.SORT_PERMUTATION
    ):
        return True
    if model.kind is ModelKind.SORT_PAIRWISE and query is ModelKind.MAX_FIND:
        if model.n <= PAIRWISE_CAP and model.n >= 2:
            return residual_entropy(model.n, 0) == 0.0
        return model.n < 3
    raise ValueError(f"no residual model for {model.kind.value} queried as {query.value}")
