import itertools
import math
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from infobound.comparisons import (
    ComparisonTally,
    MeasurementResult,
    Outcome,
    SORTS,
    binary_search,
    bubble_sort,
    insertion_sort,
    max_scan,
    merge_sort,
    search_worst_case,
    worst_case_exhaustive,
    worst_case_sampled,
)
from infobound.entropy import ceil_log2
from infobound.states import CapExceededError

distinct_lists = st.lists(st.integers(-1000, 1000), max_size=40, unique=True)


@lru_cache(maxsize=None)
def merge_worst(n):
    """Worst case of top-down merge sort: both halves worst, then a full merge."""
    if n < 2:
        return 0
    return merge_worst(n // 2) + merge_worst(n - n // 2) + n - 1


def test_max_scan_examples():
    assert max_scan([5])[0] == 5 and max_scan([5])[1].count == 0
    value, tally = max_scan([3, 1, 2], ComparisonTally.traced())
    assert (value, tally.count) == (3, 2)
    assert tally.trace == [(1, 0, Outcome.NOT_GREATER), (2, 0, Outcome.NOT_GREATER)]
    with pytest.raises(ValueError):
        max_scan([])


@pytest.mark.parametrize("n", range(1, 9))
def test_max_scan_always_n_minus_one(n):
    for perm in itertools.permutations(range(n)):
        value, tally = max_scan(perm)
        assert value == n - 1 and tally.count == n - 1


def test_bubble_examples():
    assert bubble_sort([4, 3, 2, 1])[1].count == 6
    assert bubble_sort([])[1].count == 0
    assert bubble_sort(["x"])[1].count == 0
    assert bubble_sort([1, 2, 3, 4], early_exit=True)[1].count == 3
    assert bubble_sort([1, 2, 3, 4])[1].count == 6


def test_insertion_examples():
    assert insertion_sort([5, 4, 3, 2, 1])[1].count == 10
    assert insertion_sort([1, 2, 3, 4, 5])[1].count == 4
    assert insertion_sort([7])[1].count == 0


def test_merge_examples():
    for pair in ([1, 2], [2, 1]):
        assert merge_sort(pair)[1].count == 1
    assert worst_case_exhaustive("merge", 4).worst_case == 5


@pytest.mark.parametrize("sort", list(SORTS.values()))
@given(items=distinct_lists)
def test_sorts_are_correct(sort, items):
    out, tally = sort(items)
    assert out == sorted(items)


@pytest.mark.parametrize("sort", list(SORTS.values()))
def test_sorts_reject_duplicates(sort):
    with pytest.raises(ValueError):
        sort([1, 2, 1])


@pytest.mark.parametrize("sort", list(SORTS.values()))
def test_trace_length_matches_count(sort):
    tally = ComparisonTally.traced()
    sort([5, 2, 8, 1, 9, 3], tally)
    assert len(tally.trace) == tally.count
    again = ComparisonTally.traced()
    sort([5, 2, 8, 1, 9, 3], again)
    assert again.trace == tally.trace


def test_trace_replays_against_input():
    items = [40, 10, 30, 20]
    tally = ComparisonTally.traced()
    merge_sort(items, tally)
    for i, j, outcome in tally.trace:
        assert (items[i] > items[j]) == (outcome is Outcome.GREATER)


def test_trace_dump_format():
    tally = ComparisonTally.traced()
    max_scan([3, 1, 2], tally)
    assert tally.dump_trace() == "1 0 N\n2 0 N\n"
    tally = ComparisonTally.traced()
    binary_search([1, 2, 3], 3, tally)
    assert tally.dump_trace() == "1 t N\n2 t N\n"
    with pytest.raises(ValueError):
        ComparisonTally().dump_trace()


def test_binary_search_examples():
    pos, tally = binary_search([], 4)
    assert pos is None and tally.count == 0
    pos, tally = binary_search([4], 4)
    assert pos == 0 and tally.count == 1
    assert search_worst_case(1) == 1
    assert search_worst_case(7) == 3
    assert search_worst_case(1024) == 11


def test_binary_search_worst_case_formula():
    for n in range(1, 300):
        assert search_worst_case(n) == math.floor(math.log2(n)) + 1 == ceil_log2(n + 1)


@given(distinct_lists, st.integers(-1100, 1100))
def test_binary_search_agrees_with_linear_scan(items, target):
    items = sorted(items)
    expected = next((k for k, v in enumerate(items) if v == target), None)
    pos, tally = binary_search(items, target)
    assert pos == expected
    if items:
        assert tally.count <= math.floor(math.log2(len(items))) + 1


@pytest.mark.parametrize("n", range(2, 8))
def test_quadratic_sorts_hit_pairwise_entropy(n):
    for name in ("bubble", "insertion"):
        assert worst_case_exhaustive(name, n).worst_case == n * (n - 1) // 2


@pytest.mark.parametrize("n", range(1, 9))
def test_merge_worst_case_matches_recurrence(n):
    r = worst_case_exhaustive("merge", n)
    assert r.worst_case == merge_worst(n)
    assert ceil_log2(math.factorial(n)) <= r.worst_case
    if n > 1:
        assert r.worst_case <= n * math.ceil(math.log2(n))


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("name", list(SORTS))
def test_every_sort_respects_entropy_floor(name, n):
    assert worst_case_exhaustive(name, n).worst_case >= ceil_log2(math.factorial(n))


def test_exhaustive_examples():
    r = worst_case_exhaustive("max_scan", 6)
    assert (r.worst_case, r.best_case, r.trials, r.exhaustive) == (5, 5, 720, True)
    r = worst_case_exhaustive("insertion", 2)
    assert (r.worst_case, r.best_case) == (1, 1)
    assert worst_case_exhaustive("merge", 5).worst_case >= 7
    assert worst_case_exhaustive(merge_sort, 5).algorithm == "merge"


def test_exhaustive_cap():
    with pytest.raises(CapExceededError):
        worst_case_exhaustive("merge", 9)


def test_exhaustive_worker_independence():
    for name in ("merge", "insertion", "max_scan"):
        assert worst_case_exhaustive(name, 6, workers=3) == worst_case_exhaustive(name, 6)


def test_exhaustive_catches_wrong_algorithm():
    def broken(items, tally=None):
        tally = ComparisonTally() if tally is None else tally
        return list(items), tally

    with pytest.raises(AssertionError):
        worst_case_exhaustive(broken, 3)


def test_sampled_mode_is_seeded():
    a = worst_case_sampled("merge", 20, 200, seed=2**63 - 1)
    b = worst_case_sampled("merge", 20, 200, seed=2**63 - 1)
    assert a == b
    assert a.seed == 2**63 - 1 and not a.exhaustive and a.trials == 200
    assert a.best_case <= a.worst_case <= merge_worst(20)
    with pytest.raises(ValueError):
        worst_case_sampled("merge", 20, 10, seed=None)


def test_measurement_invariants():
    for name in SORTS:
        r = worst_case_exhaustive(name, 5)
        assert isinstance(r, MeasurementResult)
        assert r.best_case <= r.worst_case
        assert r.trials == math.factorial(5)
