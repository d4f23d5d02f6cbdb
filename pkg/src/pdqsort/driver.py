"""The hybrid sort driver.

Each call on a subrange either runs an insertion sort (small ranges),
falls back to heapsort (exhausted bad-partition budget), or selects a
pivot and partitions. Equal-to-predecessor pivots dispatch to
partition_left, whose left partition needs no recursion; otherwise
partition_right runs (block-based when the ordering is branch-cheap).
A partition leaving either side smaller than 2**-bad_partition_shift of
the range is *bad*: it costs one unit of the log2(n) budget and the pivot
candidates of both children are swapped with quartile elements to break
the pattern. A swapless, non-bad partition triggers an optimistic partial
insertion sort over both sides that finishes nearly-sorted inputs in
linear time. Recursion always descends into the smaller partition and
iterates on the larger, bounding the call depth by about log2(n).

The whole sort is deterministic: identical input and config give an
identical output permutation and identical instrumentation counters.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, replace
from typing import Any, Callable, MutableSequence, Optional

from .partition import (
    BlockBuffers,
    block_partition_right,
    partition_left,
    partition_right,
)
from .small_sorts import (
    heapsort,
    insertion_sort,
    partial_insertion_sort,
    sort3,
    unguarded_insertion_sort,
)

Ordering = Callable[[Any, Any], bool]

# Partitions shorter than this have no quartile positions distinct from
# their pivot-candidate positions, so pattern breaking skips them.
MIN_BREAK_SIZE = 8


@dataclass(frozen=True)
class SortConfig:
    """Tunables and feature toggles for the sort.

    The bad-partition cutoff fraction is exactly 2**-bad_partition_shift
    of the range, evaluated with a right shift.
    """

    insertion_threshold: int = 24
    ninther_threshold: int = 128
    partial_insertion_budget: int = 8
    block_size: int = 64
    bad_partition_shift: int = 3
    use_block_partition: bool = True
    use_partition_left: bool = True
    use_break_patterns: bool = True
    use_partial_insertion: bool = True

    def __post_init__(self):
        if self.insertion_threshold < 3:
            raise ValueError("insertion_threshold must be >= 3 (pivot selection needs three candidates)")
        if self.ninther_threshold < max(8, self.insertion_threshold):
            raise ValueError("ninther_threshold must be >= max(8, insertion_threshold)")
        if self.partial_insertion_budget < 0:
            raise ValueError("partial_insertion_budget must be >= 0")
        if self.block_size < 1:
            raise ValueError("block_size must be >= 1")
        if self.bad_partition_shift < 1:
            raise ValueError("bad_partition_shift must be >= 1")


DEFAULT_CONFIG = SortConfig()


def choose_pivot(
    data: MutableSequence,
    begin: int = 0,
    end: Optional[int] = None,
    lt: Ordering = operator.lt,
    config: SortConfig = DEFAULT_CONFIG,
    metrics=None,
) -> None:
    """Move a pivot estimate to ``data[begin]``.

    Small ranges take the median of (middle, first, last); sorting that
    triple with the middle position first leaves the median at the front
    and, on an already-sorted range, amounts to one first<->middle
    exchange. Large ranges take the ninther: three triples are sorted,
    then the triple of their medians, and the middle element is exchanged
    to the front. Either way a subsequent partition of a sorted range is
    swapless and puts the pivot straight back, which is what lets the
    optimistic insertion-sort path fire.
    """
    if end is None:
        end = len(data)
    size = end - begin
    mid = begin + size // 2
    if size > config.ninther_threshold:
        sort3(data, begin, mid, end - 1, lt, metrics)
        sort3(data, begin + 1, mid - 1, end - 2, lt, metrics)
        sort3(data, begin + 2, mid + 1, end - 3, lt, metrics)
        sort3(data, mid - 1, mid, mid + 1, lt, metrics)
        data[begin], data[mid] = data[mid], data[begin]
        if metrics is not None:
            metrics.exchanges += 1
    else:
        sort3(data, mid, begin, end - 1, lt, metrics)


def is_bad_partition(
    left_size: int,
    right_size: int,
    total: int,
    config: SortConfig = DEFAULT_CONFIG,
) -> bool:
    """True iff either side is smaller than total * 2**-bad_partition_shift."""
    threshold = total >> config.bad_partition_shift
    return left_size < threshold or right_size < threshold


def break_patterns(
    data: MutableSequence,
    begin: int = 0,
    end: Optional[int] = None,
    config: SortConfig = DEFAULT_CONFIG,
    metrics=None,
) -> None:
    """Swap the end pivot candidates with quartile elements.

    Deterministically exchanges the first and last positions with the
    elements at len//4 and len-1-len//4; ranges beyond the ninther
    threshold also exchange the two auxiliary candidates next to each end
    with the corresponding quartile neighbours. Applying it twice on the
    same range undoes it (disjoint transpositions).
    """
    if end is None:
        end = len(data)
    size = end - begin
    assert size >= MIN_BREAK_SIZE, "pattern breaking needs quartiles distinct from the ends"
    q = size // 4
    pairs = 1
    data[begin], data[begin + q] = data[begin + q], data[begin]
    data[end - 1], data[end - 1 - q] = data[end - 1 - q], data[end - 1]
    if size > config.ninther_threshold:
        for k in (1, 2):
            data[begin + k], data[begin + q + k] = data[begin + q + k], data[begin + k]
            data[end - 1 - k], data[end - 1 - q - k] = data[end - 1 - q - k], data[end - 1 - k]
        pairs = 3
    if metrics is not None:
        metrics.exchanges += 2 * pairs


def _default_branch_cheap(data, lt) -> bool:
    """The built-in ordering over primitive numbers is branch-cheap;
    caller-supplied relations must be declared so explicitly."""
    if lt is not operator.lt:
        return False
    return len(data) == 0 or isinstance(data[0], (int, float))


def _sort_range(
    data: MutableSequence,
    begin: int,
    end: int,
    lt: Ordering,
    config: SortConfig,
    use_block: bool,
    metrics=None,
    pivot_trace=None,
) -> None:
    insertion_threshold = config.insertion_threshold
    budget = config.partial_insertion_budget
    use_left = config.use_partition_left
    use_break = config.use_break_patterns
    use_partial = config.use_partial_insertion
    # One scratch pair per sort call, shared by every partition; ranges
    # below the insertion threshold never partition at all.
    buffers = (
        BlockBuffers.for_block_size(config.block_size)
        if use_block and end - begin >= insertion_threshold
        else None
    )

    def attempt_partial(lo, hi):
        if metrics is not None:
            metrics.partial_insertion_attempts += 1
        ok = partial_insertion_sort(data, lo, hi, lt, budget, metrics)
        if not ok and metrics is not None:
            metrics.partial_insertion_aborts += 1
        return ok

    def loop(begin, end, bad_allowed, leftmost, depth):
        if metrics is not None and depth > metrics.max_depth:
            metrics.max_depth = depth
        while True:
            size = end - begin
            if size < insertion_threshold:
                if leftmost:
                    insertion_sort(data, begin, end, lt, metrics)
                else:
                    unguarded_insertion_sort(data, begin, end, lt, metrics)
                return
            if bad_allowed == 0:
                heapsort(data, begin, end, lt, metrics)
                if metrics is not None:
                    metrics.heapsort_fallbacks += 1
                return

            choose_pivot(data, begin, end, lt, config, metrics)
            if pivot_trace is not None:
                pivot_trace.append(data[begin])

            # A predecessor never greater than any element here equals the
            # pivot iff it is not less than it; equal elements then belong
            # in the left partition, which needs no recursion.
            if use_left and not leftmost and not lt(data[begin - 1], data[begin]):
                res = partition_left(data, begin, end, lt, metrics)
                begin = begin + res.pivot_index + 1
                continue

            if use_block:
                res = block_partition_right(data, begin, end, lt, buffers, metrics)
            else:
                res = partition_right(data, begin, end, lt, metrics)
            pivot_pos = begin + res.pivot_index
            left_size = pivot_pos - begin
            right_size = end - (pivot_pos + 1)

            if is_bad_partition(left_size, right_size, size, config):
                if metrics is not None:
                    metrics.bad_partitions += 1
                bad_allowed -= 1
                if use_break:
                    if left_size >= MIN_BREAK_SIZE:
                        break_patterns(data, begin, pivot_pos, config, metrics)
                    if right_size >= MIN_BREAK_SIZE:
                        break_patterns(data, pivot_pos + 1, end, config, metrics)
            elif (
                use_partial
                and res.no_swaps
                and attempt_partial(begin, pivot_pos)
                and attempt_partial(pivot_pos + 1, end)
            ):
                return

            # Recurse into the smaller partition, iterate on the larger;
            # each child carries its own copy of the remaining budget.
            if left_size <= right_size:
                loop(begin, pivot_pos, bad_allowed, leftmost, depth + 1)
                begin = pivot_pos + 1
                leftmost = False
            else:
                loop(pivot_pos + 1, end, bad_allowed, False, depth + 1)
                end = pivot_pos

    n = end - begin
    bad_allowed = n.bit_length() - 1 if n > 0 else 0
    loop(begin, end, bad_allowed, True, 0)


def sort(data: MutableSequence, config: SortConfig = DEFAULT_CONFIG) -> None:
    """Sort ``data`` in place, ascending under ``<``. Not stable."""
    use_block = config.use_block_partition and _default_branch_cheap(data, operator.lt)
    _sort_range(data, 0, len(data), operator.lt, config, use_block)


def sort_with(data: MutableSequence, lt: Ordering, branch_cheap: bool = False) -> None:
    """Sort ``data`` in place under the strict weak ordering ``lt``.

    Block partitioning only pays off when the ordering has no
    data-dependent branches; pass ``branch_cheap=True`` to assert that.
    """
    sort_with_config(data, lt, DEFAULT_CONFIG, branch_cheap=branch_cheap)


def sort_with_config(
    data: MutableSequence,
    lt: Ordering,
    config: SortConfig,
    branch_cheap: Optional[bool] = None,
) -> None:
    """Sort ``data`` in place under ``lt`` with explicit tunables."""
    if branch_cheap is None:
        branch_cheap = _default_branch_cheap(data, lt)
    use_block = config.use_block_partition and branch_cheap
    _sort_range(data, 0, len(data), lt, config, use_block)


def introsort_baseline(
    data: MutableSequence,
    lt: Ordering = operator.lt,
    config: SortConfig = DEFAULT_CONFIG,
    branch_cheap: Optional[bool] = None,
    metrics=None,
) -> None:
    """Ablation baseline: same pivot selection and kernels, but with the
    equal-element, pattern-breaking and optimistic heuristics disabled and
    a plain depth-based heapsort fallback (limit 2*floor(log2 n))."""
    cfg = replace(
        config,
        use_partition_left=False,
        use_break_patterns=False,
        use_partial_insertion=False,
    )
    if branch_cheap is None:
        branch_cheap = _default_branch_cheap(data, lt)
    use_block = cfg.use_block_partition and branch_cheap
    insertion_threshold = cfg.insertion_threshold
    buffers = BlockBuffers.for_block_size(cfg.block_size) if use_block else None
    n = len(data)

    def loop(begin, end, depth_left, leftmost, depth):
        if metrics is not None and depth > metrics.max_depth:
            metrics.max_depth = depth
        while True:
            size = end - begin
            if size < insertion_threshold:
                if leftmost:
                    insertion_sort(data, begin, end, lt, metrics)
                else:
                    unguarded_insertion_sort(data, begin, end, lt, metrics)
                return
            if depth_left == 0:
                heapsort(data, begin, end, lt, metrics)
                if metrics is not None:
                    metrics.heapsort_fallbacks += 1
                return
            depth_left -= 1
            choose_pivot(data, begin, end, lt, cfg, metrics)
            if use_block:
                res = block_partition_right(data, begin, end, lt, buffers, metrics)
            else:
                res = partition_right(data, begin, end, lt, metrics)
            pivot_pos = begin + res.pivot_index
            if pivot_pos - begin <= end - (pivot_pos + 1):
                loop(begin, pivot_pos, depth_left, leftmost, depth + 1)
                begin = pivot_pos + 1
                leftmost = False
            else:
                loop(pivot_pos + 1, end, depth_left, False, depth + 1)
                end = pivot_pos

    loop(0, n, 2 * (n.bit_length() - 1) if n > 0 else 0, True, 0)
