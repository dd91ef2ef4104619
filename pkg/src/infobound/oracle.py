"""Exact minimum worst-case comparison counts by minimax search.

A knowledge state is the set of total orders of n elements that are
still consistent with the comparisons made so far. Comparing elements
i < j splits it into the orders where i is Greater than j and the rest.
The minimax cost of a state is 0 once the question is answered, and
otherwise the best over informative comparisons of one plus the cost
of the worse branch.

Orders are rank vectors: ``order[i]`` is the rank of element i. Inside
the search a state is an integer bitmask over the n! orders in
lexicographic position, which doubles as its canonical encoding.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .entropy import ceil_log2
from .states import CapExceededError

ORACLE_CAP = 5


class Problem(enum.Enum):
    SORT = "sort"
    MAX = "max"


@lru_cache(maxsize=None)
def _orders(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def _order_index(n: int) -> dict:
    return {order: k for k, order in enumerate(_orders(n))}


@lru_cache(maxsize=None)
def _greater_masks(n: int) -> dict:
    masks = {}
    for i, j in itertools.combinations(range(n), 2):
        masks[i, j] = sum(1 << k for k, o in enumerate(_orders(n)) if o[i] > o[j])
    return masks


@lru_cache(maxsize=None)
def _argmax_masks(n: int) -> tuple[int, ...]:
    return tuple(
        sum(1 << k for k, o in enumerate(_orders(n)) if o[e] == n - 1)
        for e in range(n)
    )


@dataclass(frozen=True)
class KnowledgeState:
    n: int
    alive: frozenset

    def __post_init__(self):
        if not self.alive:
            raise ValueError("knowledge state must contain at least one order")

    @classmethod
    def initial(cls, n: int) -> "KnowledgeState":
        return cls(n, frozenset(_orders(n)))

    def split(self, i: int, j: int) -> tuple[frozenset, frozenset]:
        """(orders with i Greater than j, orders with i not Greater than j)."""
        greater = frozenset(o for o in self.alive if o[i] > o[j])
        return greater, self.alive - greater

    def after(self, i: int, j: int, greater: bool) -> "KnowledgeState":
        branch = self.split(i, j)[0 if greater else 1]
        return KnowledgeState(self.n, branch)


def canonical_encoding(state: KnowledgeState) -> int:
    """Bitmask of the alive orders; independent of how the set was built."""
    index = _order_index(state.n)
    return sum(1 << index[o] for o in state.alive)


@dataclass(frozen=True)
class OracleResult:
    problem: Problem
    n: int
    min_worst_case: int
    entropy_floor: int
    optimal_first_comparison: Optional[tuple[int, int]]

    @property
    def bound_met(self) -> bool:
        return self.min_worst_case == self.entropy_floor


class _Search:
    def __init__(self, problem: Problem, n: int, memoize: bool = True):
        self.problem = problem
        self.n = n
        self.pairs = list(itertools.combinations(range(n), 2))
        self.greater = _greater_masks(n)
        self.full = (1 << math.factorial(n)) - 1
        self.argmax = _argmax_masks(n)
        self.depth_cap = n * n
        self.memo: Optional[dict] = {} if memoize else None

    def solved(self, mask: int) -> bool:
        if self.problem is Problem.SORT:
            return mask & (mask - 1) == 0
        return any(mask & ~m == 0 for m in self.argmax)

    def best(self, mask: int, depth: int = 0) -> tuple[int, Optional[tuple[int, int]]]:
        if self.memo is not None and mask in self.memo:
            return self.memo[mask]
        if self.solved(mask):
            return 0, None
        if depth >= self.depth_cap:
            raise RuntimeError(f"minimax exceeded depth cap {self.depth_cap}")
        value, move = math.inf, None
        for pair in self.pairs:
            g = mask & self.greater[pair]
            ng = mask & ~g
            if not g or not ng:
                continue  # outcome already known
            cost = 1 + max(self.best(g, depth + 1)[0], self.best(ng, depth + 1)[0])
            if cost < value:  # strict: ties keep the lowest pair
                value, move = cost, pair
        result = (int(value), move)
        if self.memo is not None:
            self.memo[mask] = result
        return result


def _check_n(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError("minimax oracle", n, cap)


def _solve(problem: Problem, n: int, memoize: bool, cap: int) -> OracleResult:
    _check_n(n, cap)
    search = _Search(problem, n, memoize)
    value, move = search.best(search.full)
    if problem is Problem.SORT:
        floor = ceil_log2(math.factorial(n))
    else:
        floor = n - 1
    return OracleResult(problem, n, value, floor, move)


def min_comparisons_sort(n: int, *, memoize: bool = True, cap: int = ORACLE_CAP) -> OracleResult:
    """Fewest comparisons that sort any input of n distinct items in the worst case."""
    return _solve(Problem.SORT, n, memoize, cap)


def min_comparisons_max(n: int, *, memoize: bool = True, cap: int = ORACLE_CAP) -> OracleResult:
    """Fewest comparisons that identify the maximum of n distinct items in the worst case."""
    return _solve(Problem.MAX, n, memoize, cap)


@dataclass
class Strategy:
    """Decision tree: an inner node compares ``pair``; leaves carry the answer."""

    pair: Optional[tuple[int, int]] = None
    if_greater: Optional["Strategy"] = None
    if_not_greater: Optional["Strategy"] = None
    answer: Union[tuple[int, ...], int, None] = None

    @property
    def is_leaf(self) -> bool:
        return self.pair is None

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.if_greater.depth(), self.if_not_greater.depth())

    def decide(self, items) -> tuple[Union[tuple[int, ...], int], int]:
        """Walk the tree on concrete `items`; returns (answer, comparisons used)."""
        node, used = self, 0
        while not node.is_leaf:
            i, j = node.pair
            node = node.if_greater if items[i] > items[j] else node.if_not_greater
            used += 1
        return node.answer, used

    def render(self) -> str:
        """Indented text; every ``cmp i j`` line is followed by its Greater
        subtree, then its Not-greater subtree, each indented two spaces."""
        lines: list[str] = []
        self._render(lines, 0)
        return "\n".join(lines) + "\n"

    def _render(self, lines: list, indent: int) -> None:
        pad = "  " * indent
        if self.is_leaf:
            if isinstance(self.answer, tuple):
                lines.append(f"{pad}order: {' '.join(map(str, self.answer))}")
            else:
                lines.append(f"{pad}max: {self.answer}")
            return
        lines.append(f"{pad}cmp {self.pair[0]} {self.pair[1]}")
        self.if_greater._render(lines, indent + 1)
        self.if_not_greater._render(lines, indent + 1)


def parse_strategy(text: str) -> Strategy:
    """Inverse of :meth:`Strategy.render`."""
    lines = iter([ln for ln in text.splitlines() if ln.strip()])

    def node(expected_indent: int) -> Strategy:
        try:
            line = next(lines)
        except StopIteration:
            raise ValueError("strategy text ended early") from None
        indent = (len(line) - len(line.lstrip(" "))) // 2
        if indent != expected_indent:
            raise ValueError(f"bad indentation in line {line!r}")
        head, _, rest = line.strip().partition(" ")
        if head == "cmp":
            i, j = map(int, rest.split())
            return Strategy((i, j), node(indent + 1), node(indent + 1))
        if head == "order:":
            return Strategy(answer=tuple(map(int, rest.split())))
        if head == "max:":
            return Strategy(answer=int(rest))
        raise ValueError(f"unrecognised strategy line {line!r}")

    tree = node(0)
    if next(lines, None) is not None:
        raise ValueError("trailing lines after strategy tree")
    return tree


def optimal_strategy(problem: Union[Problem, str], n: int, *, cap: int = ORACLE_CAP) -> Strategy:
    """An optimal decision tree, using the same tie-breaking as the oracle."""
    problem = Problem(problem)
    _check_n(n, cap)
    search = _Search(problem, n)
    orders = _orders(n)

    def answer(mask: int):
        order = orders[(mask & -mask).bit_length() - 1]
        if problem is Problem.SORT:
            return tuple(sorted(range(n), key=order.__getitem__))
        return order.index(n - 1)

    def build(mask: int) -> Strategy:
        if search.solved(mask):
            return Strategy(answer=answer(mask))
        _, pair = search.best(mask)
        g = mask & search.greater[pair]
        return Strategy(pair, build(g), build(mask & ~g))

    return build(search.full)

